#pragma once

#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsw/mrat.hpp"
#include "bsw/quiver.hpp"
#include "bsw/ratmatrix.hpp"
#include "bsw/weylb.hpp"

namespace bsw {

// Idempotent labels of a skew ring: a W_n-stable set of compositions, or a single
// label fixed by W_n (the Hecke case).
struct SkewSpace {
  int n = 0;
  VarConvention conv = VarConvention::Additive;
  std::vector<Composition> comps;
  std::vector<int> theta;  // involution on vertex indices; empty in the trivial case
  std::map<Composition, int> index;

  static std::shared_ptr<const SkewSpace> trivial(int n, VarConvention c);
  static std::shared_ptr<const SkewSpace> make(int n, VarConvention c, std::vector<Composition> comps, std::vector<int> theta);

  bool is_trivial() const { return theta.empty(); }
  int size() const { return static_cast<int>(comps.size()); }
  int find(const Composition& nu) const;
  int act(const SignedPerm& w, int nu) const;
};

using SpacePtr = std::shared_ptr<const SkewSpace>;

// Coefficient operations. MRat acts by variable substitution, RatMatrix entrywise.
inline bool coef_zero(const MRat& a) { return a.is_zero(); }
inline bool coef_zero(const RatMatrix& a) { return a.is_zero(); }
inline MRat coef_act(const SignedPerm& w, const MRat& f, VarConvention c) {
  return w.is_identity() ? f : act_on_variables(w, f, c);
}
inline RatMatrix coef_act(const SignedPerm& w, const RatMatrix& m, VarConvention c) {
  if (w.is_identity()) return m;
  return m.transform([&](const MRat& f) { return act_on_variables(w, f, c); });
}
inline std::string coef_str(const MRat& a) { return a.str(); }
inline std::string coef_str(const RatMatrix& a) { return "matrix{\n" + a.str() + "}"; }

// Element Σ f e(ν) w of the skew ring: f e(ν) w maps the w^{-1}ν summand to the ν summand.
template <class C>
class Skew {
 public:
  using Key = std::pair<int, SignedPerm>;

  Skew() = default;
  explicit Skew(SpacePtr sp) : sp_(std::move(sp)) {}

  static Skew term(SpacePtr sp, int target, const SignedPerm& w, const C& f) {
    Skew r(sp);
    if (!coef_zero(f)) r.t_.emplace(Key{target, w}, f);
    return r;
  }
  // Σ_ν f e(wν) w, i.e. the same coefficient on every summand.
  static Skew uniform(SpacePtr sp, const SignedPerm& w, const C& f) {
    Skew r(sp);
    for (int nu = 0; nu < sp->size(); ++nu) r.add_term(sp->act(w, nu), w, f);
    return r;
  }

  const SpacePtr& space() const { return sp_; }
  const std::map<Key, C>& terms() const { return t_; }
  bool is_zero() const {
    for (const auto& [k, f] : t_)
      if (!coef_zero(f)) return false;
    return true;
  }

  void add_term(int target, const SignedPerm& w, const C& f) {
    if (coef_zero(f)) return;
    auto it = t_.find({target, w});
    if (it == t_.end()) {
      t_.emplace(Key{target, w}, f);
    } else {
      it->second = it->second + f;
      if (coef_zero(it->second)) t_.erase(it);
    }
  }

  Skew operator+(const Skew& o) const {
    Skew r = *this;
    if (!r.sp_) r.sp_ = o.sp_;
    for (const auto& [k, f] : o.t_) r.add_term(k.first, k.second, f);
    return r;
  }
  Skew operator-() const {
    Skew r = *this;
    for (auto& [k, f] : r.t_) f = -f;
    return r;
  }
  Skew operator-(const Skew& o) const { return *this + (-o); }
  Skew& operator+=(const Skew& o) { return *this = *this + o; }

  Skew operator*(const Skew& o) const {
    check_space(o);
    Skew r(sp_);
    for (const auto& [ka, f] : t_) {
      const SignedPerm& w = ka.second;
      for (const auto& [kb, g] : o.t_) {
        if (sp_->act(w, kb.first) != ka.first) continue;
        r.add_term(ka.first, w * kb.second, f * coef_act(w, g, sp_->conv));
      }
    }
    return r;
  }

  // Left multiplication by a coefficient placed on every idempotent.
  Skew left_scale(const C& f) const {
    Skew r(sp_);
    for (const auto& [k, g] : t_) r.add_term(k.first, k.second, f * g);
    return r;
  }
  // Left multiplication by coefficient depending on the target idempotent.
  template <class F>
  Skew left_scale_by(const F& coef_for_target) const {
    Skew r(sp_);
    for (const auto& [k, g] : t_) r.add_term(k.first, k.second, coef_for_target(k.first) * g);
    return r;
  }

  // Keep only terms whose source summand is nu.
  Skew restrict_source(int nu) const {
    Skew r(sp_);
    for (const auto& [k, g] : t_)
      if (sp_->act(k.second.inverse(), k.first) == nu) r.t_.emplace(k, g);
    return r;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, f] : t_) {
      if (!first) os << " + ";
      first = false;
      os << "[" << coef_str(f) << "] e#" << k.first << " " << k.second.str();
    }
    return os.str();
  }

 private:
  SpacePtr sp_;
  std::map<Key, C> t_;

  void check_space(const Skew& o) const {
    if (sp_ != o.sp_ && sp_ && o.sp_ && sp_->conv != o.sp_->conv) throw std::invalid_argument("skew ring convention mismatch");
    if (sp_ != o.sp_ && sp_ && o.sp_ && sp_->comps != o.sp_->comps) throw std::invalid_argument("skew ring label mismatch");
  }
};

using SkewElement = Skew<MRat>;

// e(ν), and the sum of all idempotents.
template <class C>
Skew<C> skew_idem(const SpacePtr& sp, int nu, const C& one) {
  return Skew<C>::term(sp, nu, SignedPerm::identity(sp->n), one);
}
template <class C>
Skew<C> skew_one(const SpacePtr& sp, const C& one) {
  return Skew<C>::uniform(sp, SignedPerm::identity(sp->n), one);
}

// Natural action on ⊕_ν K e(ν): component ν receives Σ_w f_{ν,w} w(v_{w^{-1}ν}).
std::vector<MRat> apply(const SkewElement& a, const std::vector<MRat>& v);

struct DegenerateSampling : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Regularity of an element at basepoints: the element is applied to the local test
// functions 1, (Y_l - b_l), (Y_l - b_l)(Y_m - b_m) on every source summand (Y the strand
// variables of the convention), and every resulting coefficient is restricted to
// `trials` random lines through the target basepoint; a negative Laurent order is a
// witnessed pole.
struct RegularityResult {
  bool regular = true;
  std::string witness;
};

RegularityResult is_regular_at(const SkewElement& a, const std::vector<std::vector<MRat>>& basepoints, int trials, std::mt19937_64& rng);
RegularityResult is_regular_at(const Skew<RatMatrix>& a, const std::vector<std::vector<MRat>>& basepoints, int trials, std::mt19937_64& rng);

// Order of f at the point Y_l = b_l along a random line; throws DegenerateSampling if
// every attempted line is degenerate.
bool regular_on_random_lines(const MRat& f, VarConvention conv, const std::vector<MRat>& base, int trials, std::mt19937_64& rng,
                             std::string* witness);

}  // namespace bsw
