#include "bsw/rkmat.hpp"

#include <stdexcept>

#include "bsw/oklr_suite.hpp"

namespace bsw {

RatMatrix rmat_fund(int N) {
  if (N < 2) throw std::invalid_argument("rmat_fund needs N >= 2");
  MRat q = mvar(var::q), z = mvar(var::z), w = mvar(var::w);
  MRat den = (w - q * q * z).inv();
  RatMatrix R(N * N);
  for (int r = 0; r < N; ++r)
    for (int s = 0; s < N; ++s) {
      int col = r * N + s;
      if (r == s) {
        R.set(col, col, MRat(1));
        continue;
      }
      MRat diag = (MRat(1) - q * q) * (r > s ? w : z) * den;
      R.set(col, col, diag);
      R.set(s * N + r, col, q * (w - z) * den);
    }
  return R;
}

RatMatrix kmat(int N, KVariant v, const MRat& p0, const MRat& p1) {
  if (N < 2) throw std::invalid_argument("kmat needs N >= 2");
  MRat z = mvar(var::z);
  RatMatrix K(N);
  auto one = [](const MRat& p) { return ratfun_eq(p, MRat(1)) || ratfun_eq(p, MRat(-1)); };
  if (v == KVariant::Mu1) {
    const MRat& p = p0;
    if (one(p)) throw std::invalid_argument("kmat: p must differ from +-1");
    MRat den = (z - p * p / z).inv();
    for (int r = 1; r <= N; ++r) {
      int rb = N + 1 - r;
      if (r == rb) {
        K.set(rb - 1, r - 1, MRat(1));
        continue;
      }
      K.set(r - 1, r - 1, (MRat(1) - p * p) * (r < rb ? z : z.inv()) * den);
      K.set(rb - 1, r - 1, p * (z - z.inv()) * den);
    }
    return K;
  }
  if (one(p0) || one(p1)) throw std::invalid_argument("kmat: p0, p1 must differ from +-1");
  MRat D = ((p1 - z) * (p0.inv() + z.inv())).inv();
  MRat ratio = p1 / p0;
  auto generic = [&](int r, int rb) {
    K.set(r - 1, r - 1, ((ratio - 1) + (p1 - p0.inv()) * (r < rb ? z : z.inv())) * D);
    K.set(rb - 1, r - 1, (r < rb ? ratio : MRat(1)) * (z - z.inv()) * D);
  };
  if (v == KVariant::Restrictable) {
    for (int r = 1; r <= N; ++r) {
      int rb = N + 1 - r;
      if (r == rb)
        K.set(r - 1, r - 1, MRat(1));
      else
        generic(r, rb);
    }
    return K;
  }
  if (N % 2) throw std::invalid_argument("the non-restrictable K-matrix needs N even");
  for (int r = 1; r <= N; ++r) {
    if (r == N) {
      K.set(r - 1, r - 1, MRat(1) + (z - z.inv()) / (p1 - z));
    } else if (2 * r == N) {
      K.set(r - 1, r - 1, MRat(1));
    } else {
      generic(r, N - r);
    }
  }
  return K;
}

ParamOperator ParamOperator::operator*(const ParamOperator& o) const {
  RatMatrix m2 = o.M.transform([&](const MRat& f) { return act_on_variables(w, f, VarConvention::Spectral); });
  return {M * m2, w * o.w};
}

namespace {

int power(int N, int n) {
  int d = 1;
  for (int i = 0; i < n; ++i) d *= N;
  return d;
}

RatMatrix substitute(const RatMatrix& m, const std::map<int, MRat>& s) {
  return m.transform([&](const MRat& f) { return f.subst(s); });
}

}  // namespace

ParamOperator r_operator(const RatMatrix& R, int N, int k, int n, RkOrientation o) {
  MRat zk = mvar(var::zs(k)), zk1 = mvar(var::zs(k + 1));
  std::map<int, MRat> s;
  if (o == RkOrientation::Proof) {
    s[var::z] = zk1;
    s[var::w] = zk;
  } else {
    s[var::z] = zk;
    s[var::w] = zk1;
  }
  return {on_factors(substitute(R, s), N, k, n), SignedPerm::gen(k, n)};
}

ParamOperator k_operator(const RatMatrix& K, int N, int n, RkOrientation o) {
  MRat z1 = mvar(var::zs(1));
  std::map<int, MRat> s{{var::z, o == RkOrientation::Proof ? z1.inv() : z1}};
  return {on_factor(substitute(K, s), N, 1, n), SignedPerm::gen(0, n)};
}

ParamOperator x_operator(int N, int l, int n) {
  MRat z = mvar(var::zs(std::abs(l)));
  return {RatMatrix::scalar(power(N, n), l < 0 ? z.inv() : z), SignedPerm::identity(n)};
}

RelationReport check_rk_identities(const RatMatrix& R, const RatMatrix& K, int N, int n, RkOrientation o, bool ybe_only) {
  RelationReport rep;
  auto add = [&](const std::string& id, const ParamOperator& a, const ParamOperator& b) {
    RelationResult r;
    r.id = id;
    r.nu = "-";
    r.pass = a == b;
    if (!r.pass) r.residual = detail::clip(a.w == b.w ? (a.M - b.M).str() : "parameter permutations differ");
    rep.results.push_back(std::move(r));
  };
  ParamOperator id{RatMatrix::identity(power(N, n)), SignedPerm::identity(n)};
  std::vector<ParamOperator> Rk;
  for (int k = 1; k < n; ++k) Rk.push_back(r_operator(R, N, k, n, o));
  if (ybe_only) {
    for (int k = 1; k + 1 < n; ++k)
      add("YBE " + std::to_string(k), Rk[k - 1] * Rk[k] * Rk[k - 1], Rk[k] * Rk[k - 1] * Rk[k]);
    return rep;
  }
  ParamOperator Kp = k_operator(K, N, n, o);
  for (int k = 1; k < n; ++k) {
    const ParamOperator& r = Rk[k - 1];
    for (int l = 1; l <= n; ++l) {
      int sl = l == k ? k + 1 : (l == k + 1 ? k : l);
      add("R" + std::to_string(k) + " X" + std::to_string(l), r * x_operator(N, l, n), x_operator(N, sl, n) * r);
    }
    add("unitarity " + std::to_string(k), r * r, id);
  }
  for (int k = 1; k + 1 < n; ++k) add("YBE " + std::to_string(k), Rk[k - 1] * Rk[k] * Rk[k - 1], Rk[k] * Rk[k - 1] * Rk[k]);
  for (int l = 1; l <= n; ++l) add("K X" + std::to_string(l), Kp * x_operator(N, l, n), x_operator(N, l == 1 ? -1 : l, n) * Kp);
  add("K unitarity", Kp * Kp, id);
  if (n >= 2) add("reflection", Kp * Rk[0] * Kp * Rk[0], Rk[0] * Kp * Rk[0] * Kp);
  for (int k = 2; k < n; ++k) add("K R" + std::to_string(k), Kp * Rk[k - 1], Rk[k - 1] * Kp);
  return rep;
}

DenominatorInfo denominator_and_poles(const RatMatrix& M, int v, const std::vector<MRat>& points) {
  std::map<Poly, int> mult;
  int zpow = 0;
  for (const auto& row : M.rows())
    for (const auto& [c, f] : row) {
      if (f.is_zero()) continue;
      for (const auto& fac : f.den())
        if (fac.f.involves(v)) mult[fac.f] = std::max(mult[fac.f], fac.mult);
      zpow = std::max(zpow, -f.num().min_degree_in(v));
    }
  MRat den = MRat::var(v, zpow);
  for (const auto& [p, k] : mult) den *= MRat(p).pow(k);
  // Make monic in v: divide by the leading coefficient.
  Poly dp = den.num();
  auto groups = dp.by_degree(v);
  if (!groups.empty()) den = den / MRat(groups.rbegin()->second);
  DenominatorInfo out{den, {}};
  for (const MRat& a : points) {
    int worst = 0;
    for (const auto& row : M.rows())
      for (const auto& [c, f] : row)
        if (!f.is_zero()) worst = std::max(worst, -laurent_order_at(f, v, a));
    out.pole_orders.push_back(worst);
  }
  return out;
}

JDatum typeA_fund_datum(int m, int N, KVariant v, const MRat& p0, const MRat& p1, FramingConvention f) {
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("type A datum needs odd m >= 1");
  JDatum d;
  for (int n = -m; n <= m; n += 2) {
    d.names.push_back(std::to_string(n));
    d.tags.push_back("V");
    d.X.push_back(qpow(n));
    d.theta.push_back((m - n) / 2);
  }
  // R̂ depends on w/z only: set z = 1 and rename w to z.
  RatMatrix R = rmat_fund(N).transform([](const MRat& e) { return e.subst({{var::z, MRat(1)}, {var::w, mvar(var::z)}}); });
  d.rden[{"V", "V"}] = denominator_and_poles(R, var::z, {}).den;
  d.kden["V"] = denominator_and_poles(kmat(N, v, p0, p1), var::z, {}).den;
  d.framing = f;
  return d;
}

}  // namespace bsw
