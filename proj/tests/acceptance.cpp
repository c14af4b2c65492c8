// One PASS/FAIL line per acceptance criterion, with its time budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "bsw/bkr.hpp"
#include "bsw/heckec.hpp"
#include "bsw/oklr.hpp"
#include "bsw/rkmat.hpp"
#include "bsw/schurweyl.hpp"
#include "support.hpp"

using namespace bsw;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  int checks = 0;

  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
  void require(const RelationReport& r, const std::string& what) {
    checks += static_cast<int>(r.results.size());
    if (r.results.empty()) require(false, what + ": no checks ran");
    if (const RelationResult* f = r.first_failure(); f && pass) {
      pass = false;
      detail = what + ": " + f->id + " at " + f->nu;
    }
  }
};

bool run(int id, const char* title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = o.pass && s <= budget_s;
  if (o.pass && !ok) o.detail = "over the time budget";
  std::printf("criterion %d: %s  %s (%d checks, %.2fs of %.0fs)%s%s\n", id, ok ? "PASS" : "FAIL", title, o.checks, s, budget_s,
              o.detail.empty() ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
  return ok;
}

DimVector names_beta(const EnhancedQuiver& Q, const std::vector<std::string>& names) {
  std::vector<int> idx;
  for (const auto& s : names) idx.push_back(Q.index_of(s));
  return theta_beta(Q, idx);
}

// Type A quiver on odd labels |n| <= m with framing read off the K-matrix poles.
EnhancedQuiver framed_typeA(int m, const MRat& p1) {
  return quiver_from_jdatum(typeA_fund_datum(m, 2, KVariant::Restrictable, mvar(var::p0), p1));
}

}  // namespace

int main() {
  int failed = 0;
  const MRat p = mvar(var::p), p0 = mvar(var::p0), p1 = mvar(var::p1);

  failed += !run(1, "YBE and R(z,z) = id", 60, [&](Outcome& o) {
    for (int N : {2, 3}) o.require(check_rk_identities(rmat_fund(N), RatMatrix(), N, 3, RkOrientation::Proof, true), "YBE N=" + std::to_string(N));
    for (int N : {2, 3, 4}) {
      RatMatrix R = rmat_fund(N).transform([](const MRat& f) { return f.subst({{var::w, mvar(var::z)}}); });
      o.require(R == RatMatrix::identity(N * N), "R(z,z) N=" + std::to_string(N));
    }
  });

  failed += !run(2, "reflection equation and unitarity", 300, [&](Outcome& o) {
    for (int N : {2, 3, 4}) {
      RatMatrix R = rmat_fund(N);
      o.require(check_rk_identities(R, kmat(N, KVariant::Mu1, p, p), N, 2), "mu1 N=" + std::to_string(N));
      // The non-restrictable K-matrix exists for even N only.
      if (N % 2 == 0) o.require(check_rk_identities(R, kmat(N, KVariant::NonRestrictable, p0, p1), N, 2), "nonrestrictable N=" + std::to_string(N));
      else o.require(check_rk_identities(R, kmat(N, KVariant::Restrictable, p0, p1), N, 2), "restrictable N=" + std::to_string(N));
    }
  });

  failed += !run(3, "oKLR relations in the polynomial representation", 300, [&](Outcome& o) {
    EnhancedQuiver A = a_segment(5);
    for (const auto& b : std::vector<std::vector<std::string>>{{"1"}, {"1", "1"}, {"1", "3"}, {"1", "3", "5"}, {"1", "1", "3"}, {"3", "3", "3"}, {"-1", "1", "3"}})
      o.require(verify_relations(make_oklr_context(A, names_beta(A, b))), "A segment");
    BkrQuiver r1 = build_bkr_quiver(0, {false, 1, 0}, qpow(3), qpow(2), 2);
    o.require(r1.cls.row == 1, "row (1) classification");
    for (const auto& b : std::vector<std::vector<std::string>>{{"1"}, {"1", "1"}, {"1", "q^2"}, {"1", "1", "q^2"}, {"1", "q^2", "q^4"}})
      o.require(verify_relations(make_oklr_context(r1.Q, names_beta(r1.Q, b))), "theta-fixed vertex");
    EnhancedQuiver F = framed_typeA(5, qpow(3));
    o.require(F.lambda[static_cast<std::size_t>(F.index_of("-3"))] == 1, "framing present");
    for (TauZeroReading rd : {TauZeroReading::Vertex, TauZeroReading::ThetaSource})
      for (const auto& b : std::vector<std::vector<std::string>>{{"3"}, {"1", "3"}, {"3", "3"}, {"-3", "1", "3"}, {"3", "3", "5"}})
        o.require(verify_relations(make_oklr_context(F, names_beta(F, b), rd)), "framed quiver");
  });

  failed += !run(4, "completed Hecke relations and finite type B", 120, [&](Outcome& o) {
    for (int n = 1; n <= 3; ++n) o.require(verify_hecke_relations(make_hecke_context(n, p0, p1)), "Hecke n=" + std::to_string(n));
    for (int N : {2, 3})
      for (int n = 1; n <= 3; ++n) o.require(finite_typeB_check(N, p, n), "finite B N=" + std::to_string(N) + " n=" + std::to_string(n));
  });

  failed += !run(5, "BKR images satisfy the oKLR relations", 600, [&](Outcome& o) {
    // Row (1): xi = 1, p1 = q^2 is a vertex. Row (2): xi = q, p1 = q is a vertex.
    BkrQuiver r1 = build_bkr_quiver(0, {false, 1, 0}, qpow(3), qpow(2), 2);
    BkrQuiver r2 = build_bkr_quiver(0, {false, 1, 1}, qpow(3), qpow(1), 2);
    o.require(r1.cls.row == 1 && r2.cls.row == 2, "row classification");
    o.require(r1.Q.lambda[static_cast<std::size_t>(r1.Q.index_of("q^2"))] == 1, "row (1) framed");
    o.require(r2.Q.lambda[static_cast<std::size_t>(r2.Q.index_of("q"))] == 1, "row (2) framed");
    for (const auto& b : std::vector<std::vector<std::string>>{{"1"}, {"q^2"}, {"1", "q^2"}, {"1", "1"}, {"q^2", "q^2"}, {"1", "q^2", "q^4"}, {"1", "1", "q^2"}})
      o.require(verify_bkr(make_bkr_context(r1, names_beta(r1.Q, b), qpow(3), qpow(2))), "row (1)");
    for (const auto& b : std::vector<std::vector<std::string>>{{"q"}, {"q", "q^3"}, {"q", "q"}, {"q^-1", "q"}, {"q", "q^3", "q^5"}, {"q", "q", "q^3"}})
      o.require(verify_bkr(make_bkr_context(r2, names_beta(r2.Q, b), qpow(3), qpow(1))), "row (2)");
    BkrQuiver g = build_bkr_quiver(0, {false, 1, 1}, p0, p1, 2);
    o.require(verify_bkr(make_bkr_context(g, names_beta(g.Q, {"q", "q^3"}), p0, p1)), "row (2), symbolic p");
  });

  failed += !run(6, "quiver reproduction from J-data", 10, [&](Outcome& o) {
    for (int n0 = -9; n0 <= 9; n0 += 2) {
      EnhancedQuiver Q = framed_typeA(9, qpow(n0));
      o.require(Q.size() == 10 && validate(Q, true).ok(), "type A validation");
      for (int a = -9; a <= 9; a += 2) {
        int i = Q.index_of(std::to_string(a));
        o.require(Q.theta[static_cast<std::size_t>(i)] == Q.index_of(std::to_string(-a)), "theta");
        o.require(Q.lambda[static_cast<std::size_t>(i)] == (a == -n0 ? 1 : 0), "framing at -n0, n0=" + std::to_string(n0));
        for (int b = -9; b <= 9; b += 2) o.require(Q.a[i][Q.index_of(std::to_string(b))] == (b == a + 2 ? 1 : 0), "type A adjacency");
      }
    }
    EnhancedQuiver G = framed_typeA(9, p1);
    for (int l : G.lambda) o.require(l == 0, "generic parameters give zero framing");
    for (int N : {5, 6, 7}) {
      EnhancedQuiver D = quiver_from_jdatum(affine_d_datum(N));
      std::set<std::pair<int, int>> want{{0, 2}, {1, 2}, {N - 2, N - 1}, {N - 2, N}}, got;
      for (int i = 2; i <= N - 3; ++i) want.insert({i, i + 1});
      for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j)
          if (D.a[i][j]) got.insert({i, j});
      o.require(got == want, "affine D adjacency N=" + std::to_string(N));
    }
  });

  failed += !run(7, "Schur-Weyl lattice stability", 300, [&](Outcome& o) {
    std::mt19937_64 rng(20261016);
    std::vector<std::vector<int>> betas{{1}, {3}, {1, 1}, {1, 3}, {3, 3}};
    int controls = 0;
    for (int N : {2, 3, 4}) {
      struct Cfg {
        KVariant v;
        MRat a, b;
        const char* name;
      };
      std::vector<Cfg> cfgs{{KVariant::Mu1, p, p, "generic mu1"},
                            {KVariant::Restrictable, p0, p1, "generic restrictable"},
                            {KVariant::Mu1, qpow(3), qpow(3), "resonant mu1 p=q^3"},
                            {KVariant::Restrictable, p0, qpow(3), "resonant restrictable p1=q^3"}};
      for (const Cfg& cf : cfgs)
        for (const auto& b : betas) {
          SwContext c = make_sw_context(N, cf.v, cf.a, cf.b, 3, b);
          int n = c.oklr.n;
          std::string where = std::string(cf.name) + " N=" + std::to_string(N);
          for (int nu = 0; nu < c.space->size(); ++nu) {
            o.require(check_lattice_stability(c, GenKind::E, nu, 0, 5, rng).regular, where + " e");
            o.require(check_lattice_stability(c, GenKind::Tau0, nu, 0, 5, rng).regular, where + " tau 0");
            for (int k = 1; k < n; ++k) o.require(check_lattice_stability(c, GenKind::Tau, nu, k, 5, rng).regular, where + " tau k");
            for (int l = 1; l <= n; ++l) o.require(check_lattice_stability(c, GenKind::X, nu, l, 5, rng).regular, where + " x");
            // Raw K at a resonant vertex: X(ν_1) = q^3 puts the target basepoint on the K-pole.
            if (cf.name[0] == 'r' && c.oklr.comp(nu)[0] == c.oklr.Q.index_of("3")) {
              ++controls;
              o.require(!check_regular(c, raw_k(c, nu), 5, rng).regular, where + " negative control");
            }
          }
        }
    }
    o.require(controls > 0, "negative control ran");
  });

  failed += !run(8, "KLR restriction, BKR factorization and induction", 300, [&](Outcome& o) {
    for (int N : {2, 3})
      for (const auto& b : std::vector<std::vector<int>>{{1}, {1, 1}, {1, 3}, {3, 3}}) {
        for (const SwContext& c : {make_sw_context(N, KVariant::Mu1, p, p, 3, b), make_sw_context(N, KVariant::Mu1, qpow(3), qpow(3), 3, b),
                                   make_sw_context(N, KVariant::Restrictable, p0, qpow(3), 3, b)})
          for (int nu = 0; nu < c.space->size(); ++nu) o.require(check_klr_restriction(c, nu), "restriction N=" + std::to_string(N));
      }
    SwContext big = make_sw_context(2, KVariant::Mu1, qpow(3), qpow(3), 3, {3, 1, 3});
    SwContext c1 = make_sw_context(2, KVariant::Mu1, qpow(3), qpow(3), 3, {3});
    SwContext c2 = make_sw_context(2, KVariant::Mu1, qpow(3), qpow(3), 3, {1, 3}, FramingConvention::ThetaTwisted, false);
    o.require(check_sw_induction(big, c1, c2), "induction");
  });

  failed += !run(9, "one-dimensional modules and cokernels", 120, [&](Outcome& o) {
    EnhancedQuiver Q = framed_typeA(5, qpow(3));
    o.require(Q.size() == 6, "six vertices");
    int admissible = 0, total = 0;
    for (int n = 1; n <= 3; ++n)
      for (const DimVector& b : all_theta_betas(Q, n)) {
        OklrContext c = make_oklr_context(Q, b, TauZeroReading::ThetaSource);
        for (int mu = 0; mu < static_cast<int>(c.comps.size()); ++mu) {
          OneDimResult r = onedim_admissible(c, mu);
          ++total;
          admissible += r.admissible;
          o.require(r.suite_agrees, "onedim at " + Q.seq_str(c.comp(mu)));
        }
      }
    o.require(admissible > 0 && admissible < total, "both outcomes occur");
    MRat z = mvar(var::z);
    for (int N : {2, 3, 4})
      for (int n0 : {1, 3}) {
        SwContext c = make_sw_context(N, KVariant::Mu1, qpow(n0), qpow(n0), 3, {n0});
        int i = c.oklr.Q.index_of(std::to_string(n0));
        CokerResult a = coker_k0(c, i), b = coker_k0(c, i), s = coker_k0(c, i, (z + 2) * qpow(4));
        o.require(a.corank == b.corank && a.corank == s.corank, "coker stable");
        o.require(a.corank >= 1 && a.corank == static_cast<int>(a.left_null.size()), "coker dimension");
      }
  });

  std::printf("%d of 9 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
