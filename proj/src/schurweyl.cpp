#include "bsw/schurweyl.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "bsw/oklr_suite.hpp"

namespace bsw {

int SwContext::dim() const {
  int d = 1;
  for (int l = 0; l < oklr.n; ++l) d *= N;
  return d;
}

SwContext make_sw_context(int N, KVariant v, const MRat& p0, const MRat& p1, int m, const std::vector<int>& beta_labels,
                          FramingConvention f, bool isotropic) {
  if (beta_labels.empty()) throw std::invalid_argument("empty beta");
  SwContext c;
  c.N = N;
  c.variant = v;
  c.p0 = p0;
  c.p1 = v == KVariant::Mu1 ? p0 : p1;
  c.m = m;
  c.beta_labels = beta_labels;
  c.isotropic = isotropic;
  c.framing = f;
  c.datum = typeA_fund_datum(m, N, v, c.p0, c.p1, f);
  EnhancedQuiver Q = quiver_from_jdatum(c.datum);
  std::vector<int> idx;
  for (int n : beta_labels) {
    if (n % 2 == 0 || n < -m || n > m) throw std::invalid_argument("beta label " + std::to_string(n) + " is not a vertex");
    idx.push_back(Q.index_of(std::to_string(n)));
  }
  DimVector beta;
  if (isotropic) {
    beta = theta_beta(Q, idx);
  } else {
    beta.assign(static_cast<std::size_t>(Q.size()), 0);
    for (int i : idx) ++beta[static_cast<std::size_t>(i)];
  }
  TauZeroReading r = f == FramingConvention::ThetaTwisted ? TauZeroReading::ThetaSource : TauZeroReading::Vertex;
  c.oklr = make_oklr_context(Q, beta, r, isotropic);
  c.space = SkewSpace::make(c.oklr.n, VarConvention::Spectral, c.oklr.comps, Q.theta);
  c.R = rmat_fund(N);
  c.K = kmat(N, v, c.p0, c.p1);
  return c;
}

std::map<int, MRat> xz_substitution(const SwContext& c, int nu) {
  std::map<int, MRat> s;
  const Composition& v = c.oklr.comp(nu);
  for (int l = 1; l <= c.oklr.n; ++l) {
    const MRat& a = c.X(v[static_cast<std::size_t>(l - 1)]);
    MRat z = mvar(var::zs(l));
    s[var::x(l)] = a / z - z / a;
  }
  return s;
}

std::vector<std::vector<MRat>> sw_basepoints(const SwContext& c) {
  std::vector<std::vector<MRat>> b;
  for (const auto& v : c.oklr.comps) {
    std::vector<MRat> row;
    for (int i : v) row.push_back(c.X(i));
    b.push_back(std::move(row));
  }
  return b;
}

namespace {

// Shortest word for w in the generators s_0..s_{n-1}.
std::vector<int> shortest_word(const SignedPerm& w) {
  int n = w.n();
  SignedPerm id = SignedPerm::identity(n);
  std::map<SignedPerm, std::pair<SignedPerm, int>> prev;
  std::deque<SignedPerm> todo{id};
  prev.emplace(id, std::make_pair(id, -1));
  while (!todo.empty() && !prev.count(w)) {
    SignedPerm u = todo.front();
    todo.pop_front();
    for (int k = 0; k < n; ++k) {
      SignedPerm v = u * SignedPerm::gen(k, n);
      if (prev.emplace(v, std::make_pair(u, k)).second) todo.push_back(v);
    }
  }
  std::vector<int> word;
  for (SignedPerm u = w; !u.is_identity();) {
    const auto& [p, k] = prev.at(u);
    word.insert(word.begin(), k);
    u = p;
  }
  return word;
}

Skew<RatMatrix> mterm(const SwContext& c, int target, const SignedPerm& w, const RatMatrix& M) {
  return Skew<RatMatrix>::term(c.space, target, w, M);
}

RatMatrix shift_z(const RatMatrix& M, int by) {
  std::map<int, MRat> s;
  for (int l = 1; l + by <= var::kMaxStrands; ++l) s[var::zs(l)] = mvar(var::zs(l + by));
  return M.transform([&](const MRat& f) { return f.subst(s); });
}

}  // namespace

ParamOperator perm_operator(const SwContext& c, const SignedPerm& w) {
  int n = c.oklr.n;
  ParamOperator r{RatMatrix::identity(c.dim()), SignedPerm::identity(n)};
  for (int k : shortest_word(w)) r = r * (k == 0 ? k_operator(c.K, c.N, n, c.orient) : r_operator(c.R, c.N, k, n, c.orient));
  return r;
}

Skew<RatMatrix> sw_image(const SwContext& c, const SkewElement& a) {
  Skew<RatMatrix> r(c.space);
  std::map<SignedPerm, RatMatrix> ops;
  for (const auto& [key, f] : a.terms()) {
    auto it = ops.find(key.second);
    if (it == ops.end()) it = ops.emplace(key.second, perm_operator(c, key.second).M).first;
    r.add_term(key.first, key.second, it->second.scaled(f.subst(xz_substitution(c, key.first))));
  }
  return r;
}

Skew<RatMatrix> sw_action(const SwContext& c, GenKind kind, int nu, int k) {
  switch (kind) {
    case GenKind::E:
      return sw_image(c, gen_e(c.oklr, nu));
    case GenKind::X:
      return sw_image(c, gen_x(c.oklr, k, nu));
    case GenKind::Tau:
      if (k < 1) throw std::out_of_range("tau index out of range");
      return sw_image(c, gen_tau(c.oklr, k, nu));
    case GenKind::Tau0:
      return sw_image(c, gen_tau(c.oklr, 0, nu));
  }
  return Skew<RatMatrix>(c.space);
}

Skew<RatMatrix> raw_k(const SwContext& c, int nu) {
  SignedPerm s0 = SignedPerm::gen(0, c.oklr.n);
  return mterm(c, c.space->act(s0, nu), s0, perm_operator(c, s0).M);
}

RegularityResult check_regular(const SwContext& c, const Skew<RatMatrix>& a, int trials, std::mt19937_64& rng) {
  return is_regular_at(a, sw_basepoints(c), trials, rng);
}

RegularityResult check_lattice_stability(const SwContext& c, GenKind kind, int nu, int k, int trials, std::mt19937_64& rng) {
  return check_regular(c, sw_action(c, kind, nu, k), trials, rng);
}

Skew<RatMatrix> kkk_action(const SwContext& c, GenKind kind, int nu, int k) {
  int n = c.oklr.n, d = c.dim();
  SignedPerm id = SignedPerm::identity(n);
  const Composition& v = c.oklr.comp(nu);
  // u_l = X(a)/z_l − z_l/X(a): the image of x_l at a strand labelled a.
  auto u = [&](int l, int vertex) {
    MRat z = mvar(var::zs(l));
    return c.X(vertex) / z - z / c.X(vertex);
  };
  if (kind == GenKind::E) return mterm(c, nu, id, RatMatrix::identity(d));
  if (kind == GenKind::X) return mterm(c, nu, id, RatMatrix::scalar(d, u(k, v[static_cast<std::size_t>(k - 1)])));
  if (kind == GenKind::Tau0) throw std::invalid_argument("tau_0 is not in the KLR subalgebra");
  if (k < 1 || k >= n) throw std::out_of_range("tau index out of range");
  SignedPerm s = SignedPerm::gen(k, n);
  RatMatrix Rk = r_operator(c.R, c.N, k, n, c.orient).M;
  int i = v[static_cast<std::size_t>(k - 1)], j = v[static_cast<std::size_t>(k)];
  if (i == j) {
    MRat inv = (u(k, i) - u(k + 1, i)).inv();
    return mterm(c, nu, s, Rk.scaled(inv)) - mterm(c, nu, id, RatMatrix::scalar(d, inv));
  }
  // At the target the strands k, k+1 carry j, i.
  int a = c.oklr.Q.a[i][j];
  return mterm(c, c.space->act(s, nu), s, Rk.scaled((u(k + 1, i) - u(k, j)).pow(a)));
}

namespace {

void add_result(RelationReport& rep, const std::string& id, const std::string& nu, const Skew<RatMatrix>& a, const Skew<RatMatrix>& b) {
  Skew<RatMatrix> d = a - b;
  RelationResult r;
  r.id = id;
  r.nu = nu;
  r.pass = d.is_zero();
  if (!r.pass) r.residual = detail::clip(d.str());
  rep.results.push_back(std::move(r));
}

// BKR images for the AtVertex twin, carried to operators.
struct BkrBridge {
  const SwContext& c;
  BkrContext b;
  std::vector<int> to_b;  // sw vertex -> BKR vertex

  explicit BkrBridge(const SwContext& sw) : c(sw) {
    BkrQuiver bq = build_bkr_quiver(0, {false, 1, 1}, c.p0, c.p1, (c.m + 1) / 2);
    const EnhancedQuiver& Q = c.oklr.Q;
    DimVector beta(static_cast<std::size_t>(bq.Q.size()), 0);
    for (int i = 0; i < Q.size(); ++i) {
      int hit = -1;
      for (int j = 0; j < bq.Q.size() && hit < 0; ++j)
        if (ratfun_eq(*bq.Q.label[static_cast<std::size_t>(j)], c.X(i))) hit = j;
      if (hit < 0) throw std::logic_error("BKR quiver misses a type A vertex");
      to_b.push_back(hit);
      beta[static_cast<std::size_t>(hit)] = c.oklr.beta[static_cast<std::size_t>(i)];
    }
    b = make_bkr_context(bq, beta, c.p0, c.p1);
  }
  int bnu(int nu) const {
    Composition w;
    for (int i : c.oklr.comp(nu)) w.push_back(to_b[static_cast<std::size_t>(i)]);
    return b.oklr.index(w);
  }
  int snu(int bn) const {
    Composition w;
    for (int j : b.oklr.comp(bn)) {
      int i = 0;
      while (to_b[static_cast<std::size_t>(i)] != j) ++i;
      w.push_back(i);
    }
    return c.oklr.index(w);
  }
  Skew<RatMatrix> image(GenKind kind, int nu, int k) const {
    SkewElement e = bkr_image(b, kind, bnu(nu), k);
    std::map<int, MRat> s;
    for (int l = 1; l <= c.oklr.n; ++l) s[var::X(l)] = mvar(var::zs(l));
    Skew<RatMatrix> r(c.space);
    for (const auto& [key, f] : e.terms()) r.add_term(snu(key.first), key.second, perm_operator(c, key.second).M.scaled(f.subst(s)));
    return r;
  }
};

}  // namespace

RelationReport check_klr_restriction(const SwContext& c, int nu) {
  RelationReport rep;
  int n = c.oklr.n;
  std::string nus = c.oklr.Q.seq_str(c.oklr.comp(nu));
  for (int l = 1; l <= n; ++l) add_result(rep, "KKK x" + std::to_string(l), nus, sw_action(c, GenKind::X, nu, l), kkk_action(c, GenKind::X, nu, l));
  for (int k = 1; k < n; ++k)
    add_result(rep, "KKK tau " + std::to_string(k), nus, sw_action(c, GenKind::Tau, nu, k), kkk_action(c, GenKind::Tau, nu, k));
  if (!c.isotropic) return rep;
  SwContext twin = c.framing == FramingConvention::AtVertex
                       ? c
                       : make_sw_context(c.N, c.variant, c.p0, c.p1, c.m, c.beta_labels, FramingConvention::AtVertex, true);
  BkrBridge br(twin);
  int tnu = twin.oklr.index(c.oklr.comp(nu));
  for (int l = 1; l <= n; ++l) add_result(rep, "BKR x" + std::to_string(l), nus, sw_action(twin, GenKind::X, tnu, l), br.image(GenKind::X, tnu, l));
  for (int k = 1; k < n; ++k)
    add_result(rep, "BKR tau " + std::to_string(k), nus, sw_action(twin, GenKind::Tau, tnu, k), br.image(GenKind::Tau, tnu, k));
  add_result(rep, "BKR tau 0", nus, sw_action(twin, GenKind::Tau0, tnu), br.image(GenKind::Tau0, tnu, 0));
  return rep;
}

namespace {

struct SwModel {
  using Elem = Skew<RatMatrix>;
  const SwContext& c;
  Elem E(int nu) const { return sw_action(c, GenKind::E, nu); }
  Elem X(int l) const {
    Elem r(c.space);
    for (int nu = 0; nu < c.space->size(); ++nu) r += sw_action(c, GenKind::X, nu, l);
    return r;
  }
  Elem T(int k) const {
    Elem r(c.space);
    for (int nu = 0; nu < c.space->size(); ++nu) r += sw_action(c, k == 0 ? GenKind::Tau0 : GenKind::Tau, nu, k);
    return r;
  }
  Elem lmul(const MRat& f, const Elem& a) const {
    int d = c.dim();
    return a.left_scale_by([&](int tgt) { return RatMatrix::scalar(d, f.subst(xz_substitution(c, tgt))); });
  }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  std::string str(const Elem& a) const { return a.str(); }
};

}  // namespace

RelationReport verify_sw_relations(const SwContext& c) { return relation_suite(SwModel{c}, c.oklr, !c.isotropic); }

RelationReport check_sw_induction(const SwContext& big, const SwContext& c1, const SwContext& c2) {
  for (const SwContext* s : {&c1, &c2})
    if (s->N != big.N || s->variant != big.variant || !ratfun_eq(s->p0, big.p0) || !ratfun_eq(s->p1, big.p1) || s->m != big.m)
      throw std::invalid_argument("induction: contexts use different data");
  RelationReport rep;
  int m = c1.oklr.n, tot = big.oklr.n;
  auto factored = [&](const SkewElement& a1, const SkewElement& a2) {
    Skew<RatMatrix> s1 = sw_image(c1, a1), s2 = sw_image(c2, a2), r(big.space);
    for (const auto& [k1, M1] : s1.terms())
      for (const auto& [k2, M2] : s2.terms()) {
        Composition cat = c1.oklr.comp(k1.first);
        const Composition& tail = c2.oklr.comp(k2.first);
        cat.insert(cat.end(), tail.begin(), tail.end());
        r.add_term(big.oklr.index(cat), k1.second.shifted(0, tot) * k2.second.shifted(m, tot), kron(M1, shift_z(M2, m)));
      }
    return r;
  };
  auto check = [&](const std::string& id, const SkewElement& a1, const SkewElement& a2) {
    Skew<RatMatrix> lhs = sw_image(big, induction_embed(big.oklr, c1.oklr, c2.oklr, a1, a2));
    std::string nu = c1.oklr.Q.seq_str(c1.oklr.comp(a1.terms().begin()->first.first)) + "|" +
                     c2.oklr.Q.seq_str(c2.oklr.comp(a2.terms().begin()->first.first));
    add_result(rep, id, nu, lhs, factored(a1, a2));
  };
  for (int n1 = 0; n1 < c1.space->size(); ++n1)
    for (int n2 = 0; n2 < c2.space->size(); ++n2) {
      SkewElement e1 = gen_e(c1.oklr, n1), e2 = gen_e(c2.oklr, n2);
      check("e", e1, e2);
      for (int l = 1; l <= m; ++l) check("left x" + std::to_string(l), gen_x(c1.oklr, l, n1), e2);
      for (int k = 0; k < m; ++k) check("left tau " + std::to_string(k), gen_tau(c1.oklr, k, n1), e2);
      for (int l = 1; l <= c2.oklr.n; ++l) check("right x" + std::to_string(l), e1, gen_x(c2.oklr, l, n2));
      for (int k = 1; k < c2.oklr.n; ++k) check("right tau " + std::to_string(k), e1, gen_tau(c2.oklr, k, n2));
    }
  return rep;
}

namespace {

MRat value_at(const MRat& f, int v, const MRat& a) {
  if (f.is_zero()) return MRat(0);
  MRat g = f.subst({{v, a + mvar(var::t)}});
  int ord = g.order_in(var::t);
  if (ord < 0) throw std::domain_error("value_at: pole");
  if (ord > 0) return MRat(0);
  return g.subst({{var::t, MRat(0)}});
}

using Dense = std::vector<std::vector<MRat>>;

Dense dense(const RatMatrix& M) {
  int d = M.dim();
  Dense a(static_cast<std::size_t>(d), std::vector<MRat>(static_cast<std::size_t>(d), MRat(0)));
  for (int r = 0; r < d; ++r)
    for (const auto& [col, x] : M.rows()[static_cast<std::size_t>(r)]) a[r][col] = x;
  return a;
}

}  // namespace

int exact_rank(const RatMatrix& M, std::vector<int>* pivot_rows) {
  Dense a = dense(M);
  int d = M.dim(), rank = 0;
  std::vector<bool> used(static_cast<std::size_t>(d), false);
  // Column elimination: each pivot row r gets a column that is nonzero at r and zero
  // in the earlier pivot rows.
  for (int r = 0; r < d; ++r) {
    int pc = -1;
    for (int col = 0; col < d && pc < 0; ++col)
      if (!used[col] && !a[r][col].is_zero()) pc = col;
    if (pc < 0) continue;
    used[pc] = true;
    ++rank;
    if (pivot_rows) pivot_rows->push_back(r);
    for (int col = 0; col < d; ++col) {
      if (used[col] || a[r][col].is_zero()) continue;
      MRat f = a[r][col] / a[r][pc];
      for (int rr = 0; rr < d; ++rr) a[rr][col] -= f * a[rr][pc];
    }
  }
  return rank;
}

CokerResult coker_k0(const SwContext& c, int vertex, const MRat& unit) {
  const EnhancedQuiver& Q = c.oklr.Q;
  if (vertex < 0 || vertex >= Q.size()) throw std::out_of_range("vertex out of range");
  if (Q.fixed(vertex)) throw std::invalid_argument("coker_k0 needs a vertex not fixed by theta");
  if (Q.theta_lambda(vertex) < 1) throw std::invalid_argument("coker_k0 needs a framed theta-orbit");
  const MRat& X = c.X(vertex);
  if (value_at(unit, var::z, X).is_zero()) throw std::invalid_argument("coker_k0: scaling is not a unit at X(i)");
  int d = 0;
  for (const auto& row : c.K.rows())
    for (const auto& [col, f] : row)
      if (!f.is_zero()) d = std::max(d, -laurent_order_at(f, var::z, X));
  MRat z = mvar(var::z);
  MRat g = (X / z - z / X).pow(d) * unit;
  CokerResult out;
  out.value = c.K.transform([&](const MRat& f) { return value_at(f * g, var::z, X); });
  std::vector<int> piv;
  out.rank = exact_rank(out.value, &piv);
  out.corank = c.N - out.rank;
  for (int j = 0; j < c.N; ++j)
    if (std::find(piv.begin(), piv.end(), j) == piv.end()) out.basis.push_back(j);
  // Left null space: kernel of the transpose, by row reduction.
  Dense a = dense(out.value);
  int n = c.N;
  Dense t(static_cast<std::size_t>(n), std::vector<MRat>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (int col = 0; col < n; ++col) t[col][r] = a[r][col];
  std::vector<int> pivcol;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int p = -1;
    for (int r = row; r < n && p < 0; ++r)
      if (!t[r][col].is_zero()) p = r;
    if (p < 0) continue;
    std::swap(t[row], t[p]);
    MRat inv = t[row][col].inv();
    for (auto& x : t[row]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || t[r][col].is_zero()) continue;
      MRat f = t[r][col];
      for (int cc = 0; cc < n; ++cc) t[r][cc] -= f * t[row][cc];
    }
    pivcol.push_back(col);
    ++row;
  }
  for (int free = 0; free < n; ++free) {
    if (std::find(pivcol.begin(), pivcol.end(), free) != pivcol.end()) continue;
    std::vector<MRat> y(static_cast<std::size_t>(n), MRat(0));
    y[free] = MRat(1);
    for (std::size_t r = 0; r < pivcol.size(); ++r) y[pivcol[r]] = -t[r][free];
    out.left_null.push_back(std::move(y));
  }
  return out;
}

}  // namespace bsw
