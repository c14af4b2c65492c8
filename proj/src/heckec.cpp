#include "bsw/heckec.hpp"

#include <stdexcept>

#include "bsw/oklr_suite.hpp"

namespace bsw {

HeckeContext make_hecke_context(int n, const MRat& p0, const MRat& p1) {
  if (n < 1 || n > var::kMaxStrands) throw std::invalid_argument("Hecke rank must be between 1 and 4");
  if (p0.is_zero() || p1.is_zero()) throw std::invalid_argument("p0, p1 must be invertible");
  HeckeContext h;
  h.n = n;
  h.p0 = p0;
  h.p1 = p1;
  h.space = SkewSpace::trivial(n, VarConvention::Multiplicative);
  return h;
}

MRat hecke_ck(int k) {
  MRat q = mvar(var::q);
  return (q * Xv(k) - q.inv() * Xv(k + 1)) / (Xv(k) - Xv(k + 1));
}

MRat hecke_c0(const HeckeContext& h) { return h.p1.inv() * (Xv(1) + h.p0) * (Xv(1) - h.p1) / (Xv(1) * Xv(1) - 1); }

SkewElement hecke_scalar(const HeckeContext& h, const MRat& c) { return SkewElement::term(h.space, 0, SignedPerm::identity(h.n), c); }

SkewElement hecke_T(const HeckeContext& h, int k) {
  if (k < 0 || k >= h.n) throw std::out_of_range("T index out of range");
  MRat c = k == 0 ? hecke_c0(h) : hecke_ck(k);
  MRat base = k == 0 ? h.p0 : mvar(var::q);
  return SkewElement::term(h.space, 0, SignedPerm::gen(k, h.n), c) + hecke_scalar(h, base - c);
}

SkewElement hecke_X(const HeckeContext& h, int l, int power) {
  if (l < 1 || l > h.n) throw std::out_of_range("X index out of range");
  return hecke_scalar(h, Xv(l).pow(power));
}

SkewElement intertwiner(const HeckeContext& h, int k) {
  SkewElement one = hecke_scalar(h, MRat(1));
  if (k > 0) {
    MRat q = mvar(var::q);
    MRat f = (Xv(k) - Xv(k + 1)) / (q * Xv(k) - q.inv() * Xv(k + 1));
    return one + (hecke_T(h, k) - hecke_scalar(h, q)).left_scale(f);
  }
  for (const MRat* p : {&h.p0, &h.p1})
    if (ratfun_eq(*p, MRat(1)) || ratfun_eq(*p, MRat(-1))) throw std::invalid_argument("Phi_0 needs p0, p1 != +-1");
  MRat f = h.p1 * (Xv(1) * Xv(1) - 1) / ((Xv(1) + h.p0) * (Xv(1) - h.p1));
  return one + (hecke_T(h, 0) - hecke_scalar(h, h.p0)).left_scale(f);
}

namespace {

template <class E, class Z>
void add(RelationReport& rep, const std::string& id, const E& d, const Z& is_zero) {
  RelationResult r;
  r.id = id;
  r.nu = "-";
  r.pass = is_zero(d);
  if (!r.pass) r.residual = detail::clip(d.str());
  rep.results.push_back(std::move(r));
}

}  // namespace

RelationReport verify_hecke_relations(const HeckeContext& h) {
  RelationReport rep;
  auto z = [](const SkewElement& e) { return e.is_zero(); };
  MRat q = mvar(var::q);
  int n = h.n;
  std::vector<SkewElement> T;
  for (int k = 0; k < n; ++k) T.push_back(hecke_T(h, k));
  auto S = [&](const MRat& c) { return hecke_scalar(h, c); };
  add(rep, "quadratic 0", (T[0] - S(h.p0)) * (T[0] + S(h.p1.inv())), z);
  for (int k = 1; k < n; ++k) add(rep, "quadratic " + std::to_string(k), (T[k] - S(q)) * (T[k] + S(q.inv())), z);
  if (n >= 2) add(rep, "braid B", T[0] * T[1] * T[0] * T[1] - T[1] * T[0] * T[1] * T[0], z);
  for (int k = 1; k + 1 < n; ++k) add(rep, "braid " + std::to_string(k), T[k] * T[k + 1] * T[k] - T[k + 1] * T[k] * T[k + 1], z);
  for (int k = 0; k < n; ++k)
    for (int l = k + 2; l < n; ++l) add(rep, "commute " + std::to_string(k) + "," + std::to_string(l), T[k] * T[l] - T[l] * T[k], z);
  for (int k = 1; k < n; ++k) add(rep, "TXT " + std::to_string(k), T[k] * hecke_X(h, k) * T[k] - hecke_X(h, k + 1), z);
  MRat r = h.p0 / h.p1;
  add(rep, "T0 X1^-1 T0", T[0] * hecke_X(h, 1, -1) * T[0] - S(r * Xv(1)) - T[0].left_scale(r - 1), z);
  for (int k = 1; k < n; ++k)
    for (int l = 1; l <= n; ++l)
      if (l != k && l != k + 1)
        add(rep, "T" + std::to_string(k) + " X" + std::to_string(l), T[k] * hecke_X(h, l) - hecke_X(h, l) * T[k], z);
  for (int l = 2; l <= n; ++l) add(rep, "T0 X" + std::to_string(l), T[0] * hecke_X(h, l) - hecke_X(h, l) * T[0], z);
  // Intertwiners are the group elements themselves.
  bool generic = true;
  for (const MRat* p : {&h.p0, &h.p1}) generic &= !(ratfun_eq(*p, MRat(1)) || ratfun_eq(*p, MRat(-1)));
  for (int k = generic ? 0 : 1; k < n; ++k)
    add(rep, "Phi " + std::to_string(k), intertwiner(h, k) - SkewElement::term(h.space, 0, SignedPerm::gen(k, n), MRat(1)), z);
  return rep;
}

bool preserves_laurent_lattice(const HeckeContext& h) {
  std::vector<SkewElement> ops;
  for (int k = 0; k < h.n; ++k) ops.push_back(hecke_T(h, k));
  std::vector<int> e(static_cast<std::size_t>(h.n), -2);
  while (true) {
    MRat m(1);
    for (int l = 1; l <= h.n; ++l) m *= Xv(l).pow(e[static_cast<std::size_t>(l - 1)]);
    for (const auto& op : ops) {
      MRat r = bsw::apply(op, {m})[0];
      if (!r.is_poly()) return false;
    }
    std::size_t i = 0;
    while (i < e.size() && e[i] == 2) e[i++] = -2;
    if (i == e.size()) break;
    ++e[i];
  }
  return true;
}

RatMatrix rfin(int N) {
  MRat q = mvar(var::q);
  RatMatrix R(N * N);
  for (int r = 0; r < N; ++r)
    for (int s = 0; s < N; ++s) {
      int col = r * N + s, swp = s * N + r;
      if (r == s) {
        R.set(col, col, q);
      } else {
        R.set(swp, col, MRat(1));
        if (r < s) R.set(col, col, q - q.inv());
      }
    }
  return R;
}

RatMatrix kfin(int N, const MRat& p) {
  RatMatrix K(N);
  for (int r = 1; r <= N; ++r) {
    int rb = N + 1 - r;
    if (r == rb) {
      K.set(r - 1, r - 1, p);
    } else {
      K.set(rb - 1, r - 1, MRat(1));
      if (r > rb) K.set(r - 1, r - 1, p - p.inv());
    }
  }
  return K;
}

RelationReport finite_typeB_check(int N, const MRat& p, int n) {
  if (N < 2) throw std::invalid_argument("finite type B check needs N >= 2");
  if (n < 1 || n > 4) throw std::invalid_argument("strand count must be between 1 and 4");
  MRat q = mvar(var::q);
  int D = 1;
  for (int i = 0; i < n; ++i) D *= N;
  std::vector<RatMatrix> T{on_factor(kfin(N, p), N, 1, n)};
  for (int k = 1; k < n; ++k) T.push_back(on_factors(rfin(N), N, k, n));
  auto S = [&](const MRat& c) { return RatMatrix::scalar(D, c); };
  RelationReport rep;
  auto z = [](const RatMatrix& m) { return m.is_zero(); };
  add(rep, "quadratic 0", (T[0] - S(p)) * (T[0] + S(p.inv())), z);
  for (int k = 1; k < n; ++k) add(rep, "quadratic " + std::to_string(k), (T[k] - S(q)) * (T[k] + S(q.inv())), z);
  if (n >= 2) add(rep, "braid B", T[0] * T[1] * T[0] * T[1] - T[1] * T[0] * T[1] * T[0], z);
  for (int k = 1; k + 1 < n; ++k) add(rep, "braid " + std::to_string(k), T[k] * T[k + 1] * T[k] - T[k + 1] * T[k] * T[k + 1], z);
  for (int k = 0; k < n; ++k)
    for (int l = k + 2; l < n; ++l) add(rep, "commute " + std::to_string(k) + "," + std::to_string(l), T[k] * T[l] - T[l] * T[k], z);
  return rep;
}

}  // namespace bsw
