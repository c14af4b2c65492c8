#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bsw {

// Fixed variable registry. Every Laurent monomial carries one exponent slot per variable.
namespace var {
enum : int {
  q = 0,
  p0,
  p1,
  p,
  xi,
  z,
  w,
  t,
  u,
  v,
  x1,  // x1..x4
  X1 = x1 + 4,  // X1..X4 (Hecke / BKR)
  z1 = X1 + 4,  // z1..z4 (spectral parameters)
  count = z1 + 4
};
inline int x(int l) { return x1 + l - 1; }
inline int X(int l) { return X1 + l - 1; }
inline int zs(int l) { return z1 + l - 1; }
constexpr int kMaxStrands = 4;
}  // namespace var

constexpr int kNumVars = var::count;

const std::string& var_name(int v);
int var_index(const std::string& name);  // -1 if unknown

using Exp = std::int16_t;

struct Mono {
  std::array<Exp, kNumVars> e{};

  bool operator==(const Mono& o) const { return e == o.e; }
  bool operator!=(const Mono& o) const { return e != o.e; }
  bool operator<(const Mono& o) const { return e < o.e; }
  Mono operator*(const Mono& o) const {
    Mono r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<Exp>(e[i] + o.e[i]);
    return r;
  }
  Mono operator/(const Mono& o) const {
    Mono r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<Exp>(e[i] - o.e[i]);
    return r;
  }
  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  bool nonneg() const {
    for (auto x : e)
      if (x < 0) return false;
    return true;
  }
  static Mono of(int v, int k = 1) {
    Mono m;
    m.e[v] = static_cast<Exp>(k);
    return m;
  }
};

struct Term {
  Mono m;
  mpq_class c;
};

// Sparse Laurent polynomial over Q. Terms sorted by monomial, largest first.
class Poly {
 public:
  Poly() = default;
  Poly(long c);
  Poly(const mpq_class& c);
  static Poly var(int v, int k = 1);
  static Poly mono(const Mono& m, const mpq_class& c);

  const std::vector<Term>& terms() const { return t_; }
  std::vector<Term>& terms_mut() { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_const() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  mpq_class const_value() const;  // requires is_const
  std::size_t size() const { return t_.size(); }
  const Term& lead() const { return t_.front(); }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const mpq_class& c) const;
  Poly shifted(const Mono& m) const;
  Poly pow(unsigned k) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }
  // Total order used to keep factor lists canonical.
  bool operator<(const Poly& o) const;

  Mono min_exponents() const;
  Mono max_exponents() const;
  int degree_in(int v) const;
  int min_degree_in(int v) const;
  bool involves(int v) const;
  std::vector<int> support() const;  // variables with nonzero exponent somewhere

  // Exact division. Returns false if f does not divide *this (Laurent sense).
  bool divide_exact(const Poly& f, Poly& quot) const;

  // Monomial substitution v -> sign_v * img_v (img as exponent vector).
  Poly map_monomial(const std::array<Mono, kNumVars>& img, const std::array<int, kNumVars>& sign) const;

  // Coefficient groups by exponent of v.
  std::map<int, Poly> by_degree(int v) const;

  std::string str() const;

 private:
  std::vector<Term> t_;
  static Poly from_unsorted(std::vector<Term> v);
  friend Poly combine_sorted(std::vector<Term>&& v);
};

// Normalize a nonzero polynomial into scale * monomial * primitive part, where the
// primitive part has integer coprime coefficients, positive leading coefficient and
// no monomial content.
struct Normalized {
  mpq_class scale;
  Mono shift;
  Poly prim;
};
Normalized normalize_factor(const Poly& f);

// Cyclotomic polynomial Phi_m(q) as a Poly in var::q.
Poly cyclotomic(int m);
// Reduce the q-dependence of f modulo Phi_m (m > 0). Laurent q-exponents allowed.
Poly reduce_cyclotomic(const Poly& f, int m);

}  // namespace bsw
