#include "bsw/oklr.hpp"

#include <stdexcept>

#include "bsw/oklr_suite.hpp"

namespace bsw {

MRat OklrContext::twist(int i, int j) const {
  auto it = cij.find({i, j});
  return it == cij.end() ? MRat(1) : it->second;
}

MRat OklrContext::twist0(int i) const {
  auto it = ci.find(i);
  return it == ci.end() ? MRat(1) : it->second;
}

MRat OklrContext::P(int i, int j, const MRat& u, const MRat& v) const {
  if (i == j) return MRat(0);
  return twist(i, j) * (v - u).pow(Q.a[i][j]);
}

MRat OklrContext::P0(int i, const MRat& u) const {
  if (theta(i) == i) return MRat(0);
  return twist0(i) * (-u).pow(Q.lambda[i]);
}

// Q and Q' use the untwisted P; valid twists cancel in τ² so the relations stay the same.
MRat OklrContext::Qf(int i, int j, const MRat& u, const MRat& v) const {
  if (i == j) return MRat(0);
  return (v - u).pow(Q.a[i][j]) * (u - v).pow(Q.a[j][i]);
}

MRat OklrContext::Q0(int i, const MRat& u) const {
  if (theta(i) == i) return MRat(0);
  return (-u).pow(Q.lambda[i]) * u.pow(Q.lambda[theta(i)]);
}

int OklrContext::shift(int nu) const {
  const Composition& v = comp(nu);
  int d = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    for (std::size_t l = k + 1; l < v.size(); ++l) d += Q.a[v[k]][v[l]] + Q.a[theta(v[k])][v[l]];
    d += (reading == TauZeroReading::Vertex ? 1 : -1) * Q.lambda[v[k]];
  }
  return d;
}

OklrContext make_oklr_context(const EnhancedQuiver& Q, const DimVector& beta, TauZeroReading reading, bool isotropic) {
  OklrContext c;
  c.Q = Q;
  c.beta = beta;
  c.isotropic = isotropic;
  c.reading = reading;
  c.comps = compositions(Q, beta, isotropic);
  if (c.comps.empty()) throw std::invalid_argument("empty composition set");
  c.n = static_cast<int>(c.comps[0].size());
  if (c.n < 1 || c.n > var::kMaxStrands) throw std::invalid_argument("strand count must be between 1 and 4");
  c.space = SkewSpace::make(c.n, VarConvention::Additive, c.comps, Q.theta);
  return c;
}

void validate_twists(const OklrContext& c) {
  int N = c.Q.size();
  for (int i = 0; i < N; ++i) {
    if (!ratfun_eq(c.twist(i, i), MRat(1))) throw std::invalid_argument("twist c_ii must be 1");
    int ti = c.theta(i);
    if (!ratfun_eq(c.twist0(i) * c.twist0(ti), MRat(1))) throw std::invalid_argument("twists violate c_i c_theta(i) = 1");
    if (ti == i && !ratfun_eq(c.twist0(i), MRat(1))) throw std::invalid_argument("twist c_i must be 1 at a fixed vertex");
    for (int j = 0; j < N; ++j) {
      if (!ratfun_eq(c.twist(i, j) * c.twist(j, i), MRat(1))) throw std::invalid_argument("twists violate c_ij c_ji = 1");
      if (!ratfun_eq(c.twist(i, j), c.twist(c.theta(j), ti))) throw std::invalid_argument("twists violate c_ij = c_theta(j)theta(i)");
    }
  }
}

SkewElement gen_e(const OklrContext& c, int nu) { return skew_idem(c.space, nu, MRat(1)); }

SkewElement gen_x(const OklrContext& c, int l, int nu) {
  if (l < 1 || l > c.n) throw std::out_of_range("x index out of range");
  return SkewElement::term(c.space, nu, SignedPerm::identity(c.n), xv(l));
}

SkewElement gen_tau(const OklrContext& c, int k, int nu) {
  if (k < 0 || k >= c.n) throw std::out_of_range("tau index out of range");
  if (k == 0 && !c.isotropic) throw std::invalid_argument("tau_0 needs an isotropic context");
  const Composition& v = c.comp(nu);
  SignedPerm s = SignedPerm::gen(k, c.n), id = SignedPerm::identity(c.n);
  if (k > 0) {
    int i = v[static_cast<std::size_t>(k - 1)], j = v[static_cast<std::size_t>(k)];
    if (i == j) {
      MRat f = (xv(k) - xv(k + 1)).inv();
      return SkewElement::term(c.space, nu, s, f) - SkewElement::term(c.space, nu, id, f);
    }
    return SkewElement::term(c.space, c.space->act(s, nu), s, c.P(i, j, xv(k), xv(k + 1)));
  }
  int i = v[0];
  if (c.theta(i) == i) {
    MRat f = xv(1).inv();
    return SkewElement::term(c.space, nu, s, f) - SkewElement::term(c.space, nu, id, f);
  }
  MRat f = c.reading == TauZeroReading::Vertex ? c.P0(i, xv(1)) : c.P0(c.theta(i), -xv(1));
  return SkewElement::term(c.space, c.space->act(s, nu), s, f);
}

SkewElement full_x(const OklrContext& c, int l) {
  if (l < 1 || l > c.n) throw std::out_of_range("x index out of range");
  return SkewElement::uniform(c.space, SignedPerm::identity(c.n), xv(l));
}

SkewElement full_tau(const OklrContext& c, int k) {
  SkewElement r(c.space);
  for (int nu = 0; nu < c.space->size(); ++nu) r += gen_tau(c, k, nu);
  return r;
}

SkewElement full_one(const OklrContext& c) { return skew_one(c.space, MRat(1)); }

namespace {

struct SkewModel {
  using Elem = SkewElement;
  const OklrContext& c;
  Elem E(int nu) const { return gen_e(c, nu); }
  Elem X(int l) const { return full_x(c, l); }
  Elem T(int k) const { return full_tau(c, k); }
  Elem lmul(const MRat& f, const Elem& a) const { return a.left_scale(f); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  std::string str(const Elem& a) const { return a.str(); }
};

// The one-dimensional candidate module at μ: e(ν) ↦ δ_{νμ}, x, τ ↦ 0.
struct OneDimModel {
  using Elem = MRat;
  const OklrContext& c;
  int mu;
  Elem E(int nu) const { return MRat(nu == mu ? 1 : 0); }
  Elem X(int) const { return MRat(0); }
  Elem T(int) const { return MRat(0); }
  Elem lmul(const MRat& f, const Elem& a) const {
    std::map<int, MRat> at0;
    for (int l = 1; l <= c.n; ++l) at0[var::x(l)] = MRat(0);
    return f.subst(at0) * a;
  }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  std::string str(const Elem& a) const { return a.str(); }
};

}  // namespace

RelationReport verify_relations(const OklrContext& c) { return relation_suite(SkewModel{c}, c, !c.isotropic); }

bool check_grading(const OklrContext& c, GenKind kind, int nu, int k) {
  SkewElement g;
  switch (kind) {
    case GenKind::E:
      g = gen_e(c, nu);
      break;
    case GenKind::X:
      g = gen_x(c, k, nu);
      break;
    case GenKind::Tau:
      g = gen_tau(c, k, nu);
      break;
    case GenKind::Tau0:
      g = gen_tau(c, 0, nu);
      break;
  }
  int deg = generator_degree(c.Q, kind, c.comp(nu), k);
  // All monomials of x-degree <= 3 in n variables.
  std::vector<std::vector<int>> monos{{}};
  for (int d = 0; d < 3; ++d) {
    std::vector<std::vector<int>> next;
    for (const auto& m : monos)
      if (static_cast<int>(m.size()) == d)
        for (int l = (m.empty() ? 1 : m.back()); l <= c.n; ++l) {
          auto m2 = m;
          m2.push_back(l);
          next.push_back(m2);
        }
    monos.insert(monos.end(), next.begin(), next.end());
  }
  for (const auto& m : monos) {
    MRat f(1);
    for (int l : m) f *= xv(l);
    std::vector<MRat> v(static_cast<std::size_t>(c.space->size()));
    v[static_cast<std::size_t>(nu)] = f;
    auto r = bsw::apply(g, v);
    for (std::size_t t = 0; t < r.size(); ++t) {
      if (r[t].is_zero()) continue;
      if (!r[t].is_poly()) return false;
      int want2 = 2 * static_cast<int>(m.size()) + c.shift(nu) + deg - c.shift(static_cast<int>(t));
      for (const auto& term : r[t].num().terms()) {
        int d = 0;
        for (int v2 = 0; v2 < kNumVars; ++v2) {
          int e = term.m.e[static_cast<std::size_t>(v2)];
          bool isx = v2 >= var::x(1) && v2 <= var::x(var::kMaxStrands);
          if (e < 0 || (!isx && e != 0)) return false;
          if (isx) d += e;
        }
        if (2 * d != want2) return false;
      }
    }
  }
  return true;
}

RelationReport onedim_relations(const OklrContext& c, int mu) { return relation_suite(OneDimModel{c, mu}, c, !c.isotropic); }

OneDimResult onedim_admissible(const OklrContext& c, int mu) {
  OneDimResult res;
  const Composition& v = c.comp(mu);
  std::string why;
  for (std::size_t k = 0; k + 1 < v.size() && why.empty(); ++k) {
    if (v[k] == v[k + 1] || c.Q.abar(v[k], v[k + 1]) < 1) why = "(a) fails at k=" + std::to_string(k + 1);
  }
  for (std::size_t k = 0; k + 2 < v.size() && why.empty(); ++k)
    if (v[k] == v[k + 2] && c.Q.abar(v[k], v[k + 1]) == 1) why = "(b) fails at k=" + std::to_string(k + 1);
  if (why.empty() && c.isotropic && (c.theta(v[0]) == v[0] || c.Q.theta_lambda(v[0]) < 1)) why = "(c) fails";
  res.admissible = why.empty();
  res.witness = why;
  RelationReport rep = onedim_relations(c, mu);
  res.suite_agrees = rep.ok() == res.admissible;
  if (!res.suite_agrees && rep.first_failure()) res.witness += " [suite: " + rep.first_failure()->id + "]";
  return res;
}

SkewElement induction_embed(const OklrContext& big, const OklrContext& c1, const OklrContext& c2, const SkewElement& a1,
                            const SkewElement& a2) {
  if (!big.isotropic || !c1.isotropic || c2.isotropic) throw std::invalid_argument("induction needs isotropic, isotropic, ordinary contexts");
  DimVector want = c1.beta;
  for (std::size_t i = 0; i < want.size(); ++i) want[i] += c2.beta[i] + c2.beta[static_cast<std::size_t>(c1.theta(static_cast<int>(i)))];
  if (want != big.beta) throw std::invalid_argument("induction: dimension vectors do not match");
  int m = c1.n, tot = big.n;
  std::map<int, MRat> sh;
  for (int l = 1; l <= c2.n; ++l) sh[var::x(l)] = xv(m + l);
  SkewElement r(big.space);
  for (const auto& [k1, f1] : a1.terms())
    for (const auto& [k2, f2] : a2.terms()) {
      Composition cat = c1.comp(k1.first);
      const Composition& tail = c2.comp(k2.first);
      cat.insert(cat.end(), tail.begin(), tail.end());
      SignedPerm w = k1.second.shifted(0, tot) * k2.second.shifted(m, tot);
      r.add_term(big.index(cat), w, f1 * f2.subst(sh));
    }
  return r;
}

}  // namespace bsw
