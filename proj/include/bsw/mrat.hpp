#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bsw/poly.hpp"

namespace bsw {

struct Factor {
  Poly f;  // normalized, nonconstant
  int mult = 1;
};

// Multivariate rational function: Laurent numerator over a product of normalized
// polynomial factors. `cyc` > 0 means q is a primitive cyc-th root of unity.
class MRat {
 public:
  MRat() = default;
  MRat(long c) : num_(c) {}
  MRat(const mpq_class& c) : num_(c) {}
  MRat(const Poly& p) : num_(p) {}
  static MRat var(int v, int k = 1) { return MRat(Poly::var(v, k)); }
  static MRat from_num_den(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const std::vector<Factor>& den() const { return den_; }
  Poly den_expanded() const;
  int cyc() const { return cyc_; }
  MRat with_cyc(int m) const;

  bool is_zero() const;
  bool is_poly() const { return den_.empty(); }
  bool is_const() const { return den_.empty() && num_.is_const(); }

  MRat operator-() const;
  MRat operator+(const MRat& o) const;
  MRat operator-(const MRat& o) const;
  MRat operator*(const MRat& o) const;
  MRat operator/(const MRat& o) const { return *this * o.inv(); }
  MRat& operator+=(const MRat& o) { return *this = *this + o; }
  MRat& operator-=(const MRat& o) { return *this = *this - o; }
  MRat& operator*=(const MRat& o) { return *this = *this * o; }
  MRat& operator/=(const MRat& o) { return *this = *this / o; }
  MRat inv() const;
  MRat pow(int k) const;

  // Substitution v -> sign * monomial (group actions, renamings).
  MRat map_monomial(const std::array<Mono, kNumVars>& img, const std::array<int, kNumVars>& sign) const;
  // General substitution of variables by rational functions.
  MRat subst(const std::map<int, MRat>& s) const;

  bool involves(int v) const;
  std::vector<int> support() const;

  // Lowest power of variable v in a Laurent expansion at v = 0 (requires nonzero).
  int order_in(int v) const;

  std::string str() const;

 private:
  Poly num_;
  std::vector<Factor> den_;  // sorted by f, distinct
  int cyc_ = 0;

  void cancel(const std::vector<int>* which = nullptr);
  friend MRat mrat_from_parts(Poly num, std::vector<Factor> den, int cyc);
};

bool ratfun_eq(const MRat& a, const MRat& b);
inline bool operator==(const MRat& a, const MRat& b) { return ratfun_eq(a, b); }
inline bool operator!=(const MRat& a, const MRat& b) { return !ratfun_eq(a, b); }

// k with f(s) = (s - a)^k u(s), u regular and nonzero at a, where s is variable v.
int laurent_order_at(const MRat& f, int v, const MRat& a);

// Convenience constructors.
MRat qpow(int k);
inline MRat mvar(int v) { return MRat::var(v); }

// Modular evaluation at a fixed pseudo-random point (mod 2^61-1); nullopt-like flag
// when a denominator vanishes.
struct ModEval {
  bool ok;
  std::uint64_t value;
};
ModEval mod_eval(const MRat& f);
ModEval mod_eval(const Poly& f);

// Evaluate at rational values for every listed variable (all occurring variables must be given).
bool eval_rational(const MRat& f, const std::map<int, mpq_class>& point, mpq_class& out);

}  // namespace bsw
