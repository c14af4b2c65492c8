#include "bsw/bkr.hpp"

#include <stdexcept>

#include "bsw/oklr_suite.hpp"

namespace bsw {

BkrContext make_bkr_context(const BkrQuiver& bq, const DimVector& beta, const MRat& p0, const MRat& p1, BkrReading r) {
  BkrContext c;
  c.bq = bq;
  c.reading = r;
  int cyc = bq.ord;
  c.oklr = make_oklr_context(bq.Q, beta, TauZeroReading::Vertex, true);
  c.hecke = make_hecke_context(c.oklr.n, p0.with_cyc(cyc), p1.with_cyc(cyc));
  for (const MRat* p : {&c.hecke.p0, &c.hecke.p1})
    if (ratfun_eq(*p, MRat(1).with_cyc(cyc)) || ratfun_eq(*p, MRat(-1).with_cyc(cyc)))
      throw std::invalid_argument("BKR needs p0, p1 != +-1");
  c.space = SkewSpace::make(c.oklr.n, VarConvention::Multiplicative, c.oklr.comps, bq.Q.theta);
  // The framing must sit exactly at p1 and -p0.
  for (int i = 0; i < bq.Q.size(); ++i) {
    const MRat& x = *bq.Q.label[static_cast<std::size_t>(i)];
    int want = (ratfun_eq(x, c.hecke.p1) ? 1 : 0) + (ratfun_eq(x, -c.hecke.p0) ? 1 : 0);
    if (want != bq.Q.lambda[static_cast<std::size_t>(i)]) throw std::invalid_argument("BKR framing does not match p0, p1");
  }
  return c;
}

std::map<int, MRat> xX_substitution(const BkrContext& c, int nu) {
  std::map<int, MRat> s;
  const Composition& v = c.oklr.comp(nu);
  for (int k = 1; k <= c.oklr.n; ++k) {
    const MRat& a = c.X(v[static_cast<std::size_t>(k - 1)]);
    s[var::x(k)] = a / Xv(k) - Xv(k) / a;
  }
  return s;
}

SkewElement lift_hecke(const BkrContext& c, const SkewElement& h, int nu) {
  SkewElement r(c.space);
  for (const auto& [k, f] : h.terms()) r.add_term(c.space->act(k.second, nu), k.second, f);
  return r;
}

namespace {

// coef · Φ e(ν) (Target, SourceLeft) or Φ · coef e(ν) (Right).
SkewElement place(const BkrContext& c, const MRat& coef, const SkewElement& phi, int nu) {
  SkewElement body = lift_hecke(c, phi, nu);
  if (c.reading == BkrReading::Right) return body * SkewElement::term(c.space, nu, SignedPerm::identity(c.oklr.n), coef);
  return body.left_scale(coef);
}

}  // namespace

SkewElement bkr_image(const BkrContext& c, GenKind kind, int nu, int k) {
  const OklrContext& o = c.oklr;
  int n = o.n;
  SignedPerm id = SignedPerm::identity(n);
  const Composition& v = o.comp(nu);
  switch (kind) {
    case GenKind::E:
      return SkewElement::term(c.space, nu, id, MRat(1));
    case GenKind::X:
      return SkewElement::term(c.space, nu, id, xX_substitution(c, nu).at(var::x(k)));
    case GenKind::Tau0:
      k = 0;
      break;
    case GenKind::Tau:
      if (k < 1 || k >= n) throw std::out_of_range("tau index out of range");
      break;
  }
  SkewElement one = hecke_scalar(c.hecke, MRat(1));
  SkewElement phi = intertwiner(c.hecke, k);
  int tgt = c.space->act(SignedPerm::gen(k, n), nu);
  const Composition& vt = o.comp(tgt);
  const Composition& vals = c.reading == BkrReading::Target ? vt : v;
  auto Xat = [&](const Composition& w, int l) -> const MRat& { return c.X(w[static_cast<std::size_t>(l - 1)]); };
  if (k > 0) {
    int i = v[static_cast<std::size_t>(k - 1)], j = v[static_cast<std::size_t>(k)];
    if (i == j) {
      MRat f = (Xv(k) / Xat(v, k + 1) + Xat(v, k) / Xv(k + 1)).inv() * (Xv(k + 1) / Xv(k) - 1).inv();
      return place(c, f, phi - one, nu);
    }
    if (o.Q.a[i][j]) {
      MRat f = (Xv(k) / Xat(vals, k + 1) + Xat(vals, k) / Xv(k + 1)) * (Xat(vals, k + 1) / Xat(vals, k) - Xv(k + 1) / Xv(k));
      return place(c, f, phi, nu);
    }
    return lift_hecke(c, phi, nu);
  }
  int i = v[0];
  if (o.theta(i) == i) {
    MRat f = Xat(v, 1) * (Xv(1).inv() - Xv(1)).inv();
    return place(c, f, phi - one, nu);
  }
  MRat f = (Xv(1) / Xat(vals, 1) - Xat(vals, 1) / Xv(1)).pow(o.Q.lambda[static_cast<std::size_t>(i)]);
  return place(c, f, phi, nu);
}

SkewElement transport(const BkrContext& c, const SkewElement& a) {
  SkewElement r(c.space);
  for (const auto& [k, f] : a.terms()) r.add_term(k.first, k.second, f.subst(xX_substitution(c, k.first)));
  return r;
}

namespace {

struct BkrModel {
  using Elem = SkewElement;
  const BkrContext& c;
  Elem E(int nu) const { return bkr_image(c, GenKind::E, nu); }
  Elem X(int l) const {
    Elem r(c.space);
    for (int nu = 0; nu < c.space->size(); ++nu) r += bkr_image(c, GenKind::X, nu, l);
    return r;
  }
  Elem T(int k) const {
    Elem r(c.space);
    for (int nu = 0; nu < c.space->size(); ++nu) r += bkr_image(c, k == 0 ? GenKind::Tau0 : GenKind::Tau, nu, k);
    return r;
  }
  Elem lmul(const MRat& f, const Elem& a) const {
    return a.left_scale_by([&](int tgt) { return f.subst(xX_substitution(c, tgt)); });
  }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  std::string str(const Elem& a) const { return a.str(); }
};

}  // namespace

RelationReport verify_bkr(const BkrContext& c, bool klr_only) { return relation_suite(BkrModel{c}, c.oklr, klr_only); }

}  // namespace bsw
