#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bsw/quiver.hpp"
#include "bsw/skewring.hpp"
#include "bsw/weylb.hpp"
#include "support.hpp"

using namespace bsw;

namespace {

SignedPerm random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> w;
  std::uniform_int_distribution<int> g(0, n - 1);
  for (int i = 0; i < 6; ++i) w.push_back(g(rng));
  return from_word(w, n);
}

}  // namespace

TEST_CASE("signed permutations") {
  CHECK(from_word({}, 2).is_identity());
  SignedPerm w = from_word({0, 1, 0, 1}, 2);
  CHECK(w(1) == -1);
  CHECK(w(2) == -2);
  SignedPerm s1 = from_word({1}, 3);
  CHECK(s1(1) == 2);
  CHECK(s1(2) == 1);
  CHECK(s1(3) == 3);
  CHECK_FALSE(s1.has_sign());
  CHECK_THROWS(from_word({3}, 3));

  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k < n; ++k) CHECK((SignedPerm::gen(k, n) * SignedPerm::gen(k, n)).is_identity());
    CHECK(from_word({0, 1, 0, 1}, n) == from_word({1, 0, 1, 0}, n));
    for (int k = 1; k + 1 < n; ++k) CHECK(from_word({k, k + 1, k}, n) == from_word({k + 1, k, k + 1}, n));
    for (int k = 2; k < n; ++k) CHECK(from_word({0, k}, n) == from_word({k, 0}, n));
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    SignedPerm a = random_perm(3, rng), b = random_perm(3, rng), c = random_perm(3, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
  }
  SignedPerm s0 = SignedPerm::gen(0, 2);
  CHECK(s0.shifted(2, 4)(3) == -3);
  CHECK(s0.shifted(2, 4)(1) == 1);
}

TEST_CASE("actions on sequences and variables") {
  auto th = [](int i) { return 10 - i; };
  CHECK(act_on_sequence(SignedPerm::gen(1, 2), {3, 4}, th) == std::vector<int>{4, 3});
  CHECK(act_on_sequence(SignedPerm::gen(0, 2), {3, 4}, th) == std::vector<int>{7, 4});
  CHECK(act_on_sequence(SignedPerm::identity(2), {3, 4}, th) == std::vector<int>{3, 4});
  std::mt19937_64 rng(11);
  std::vector<int> nu{1, 2, 3};
  for (int i = 0; i < 30; ++i) {
    SignedPerm a = random_perm(3, rng), b = random_perm(3, rng);
    CHECK(act_on_sequence(a * b, nu, th) == act_on_sequence(a, act_on_sequence(b, nu, th), th));
  }
  SignedPerm s0 = SignedPerm::gen(0, 2), s1 = SignedPerm::gen(1, 2);
  CHECK(act_on_variables(s0, mvar(var::X(1)), VarConvention::Multiplicative) == mvar(var::X(1)).inv());
  CHECK(act_on_variables(s0, mvar(var::x(1)), VarConvention::Additive) == -mvar(var::x(1)));
  MRat sym = mvar(var::X(1)) + mvar(var::X(2));
  CHECK(act_on_variables(s1, sym, VarConvention::Multiplicative) == sym);
  for (int i = 0; i < 20; ++i) {
    SignedPerm a = random_perm(2, rng), b = random_perm(2, rng);
    MRat f = mvar(var::X(1)) * mvar(var::X(1)) + mvar(var::q) * mvar(var::X(2)) / (mvar(var::X(1)) - 3);
    CHECK(act_on_variables(a * b, f, VarConvention::Multiplicative) ==
          act_on_variables(a, act_on_variables(b, f, VarConvention::Multiplicative), VarConvention::Multiplicative));
  }
}

TEST_CASE("validate") {
  EnhancedQuiver Q = a_segment(5);
  CHECK(validate(Q).ok());
  EnhancedQuiver L = Q;
  L.a[0][0] = 1;
  CHECK_FALSE(validate(L).ok());
  EnhancedQuiver F = Q;
  F.lambda[0] = 1;
  F.lambda[F.theta[0]] = 1;
  CHECK_FALSE(validate(F).ok());
  EnhancedQuiver C = Q;
  C.a[1][2] = 0;  // breaks contravariance with a[3][4]
  CHECK_FALSE(validate(C).ok());
}

TEST_CASE("compositions and degrees") {
  EnhancedQuiver Q = a_segment(3);  // -3 -1 1 3
  int i = Q.index_of("1"), ti = Q.index_of("-1");
  auto iso = compositions(Q, theta_beta(Q, {i}), true);
  CHECK(iso.size() == 2);
  CHECK(std::find(iso.begin(), iso.end(), Composition{i}) != iso.end());
  CHECK(std::find(iso.begin(), iso.end(), Composition{ti}) != iso.end());
  DimVector alpha(static_cast<std::size_t>(Q.size()), 0);
  alpha[0] = alpha[3] = 1;
  CHECK(compositions(Q, alpha, false).size() == 2);

  EnhancedQuiver B = build_bkr_quiver(0, {false, 1, 0}, qpow(3), qpow(2), 2).Q;
  int one = B.index_of("1");
  DimVector b2(static_cast<std::size_t>(B.size()), 0);
  b2[one] = 2;
  auto fx = compositions(B, b2, true);
  REQUIRE(fx.size() == 1);
  CHECK(fx[0] == Composition{one});
  b2[one] = 1;
  CHECK_THROWS(compositions(B, b2, true));

  // Orbit check: isotropic compositions form one W_n orbit.
  auto th = [&](int v) { return Q.theta[v]; };
  for (const auto& beta : all_theta_betas(Q, 2)) {
    auto cs = compositions(Q, beta, true);
    std::set<Composition> orbit;
    for (int w0 = 0; w0 < 8; ++w0)
      for (auto w : {from_word({}, 2), from_word({0}, 2), from_word({1}, 2), from_word({0, 1}, 2), from_word({1, 0}, 2),
                     from_word({0, 1, 0}, 2), from_word({1, 0, 1}, 2), from_word({0, 1, 0, 1}, 2)})
        orbit.insert(act_on_sequence(w, cs[0], th));
    CHECK(orbit == std::set<Composition>(cs.begin(), cs.end()));
  }

  EnhancedQuiver G = a_segment(3);
  G.lambda[G.index_of("1")] = 1;
  CHECK(generator_degree(G, GenKind::Tau, {0, 0}, 1) == -2);
  CHECK(generator_degree(G, GenKind::Tau, {0, 1}, 1) == 1);
  CHECK(generator_degree(G, GenKind::Tau0, {G.index_of("1")}) == 1);
  CHECK(generator_degree(G, GenKind::Tau0, {G.index_of("-1")}) == 1);
  CHECK(generator_degree(G, GenKind::E, {0, 1}) == 0);
  CHECK(generator_degree(G, GenKind::X, {0, 1}, 1) == 2);
  CHECK(generator_degree(B, GenKind::Tau0, {one}) == -2);
}

TEST_CASE("BKR table rows") {
  auto row = [](int ord, XiSpec xi) {
    BkrQuiver b = build_bkr_quiver(ord, xi, qpow(3), MRat(5) * qpow(1), 3);
    CHECK(validate(b.Q).ok());
    CHECK(validate(b.Q).warnings.empty() == (ord == 0));
    for (int i = 0; i < b.Q.size(); ++i)
      for (int j = 0; j < b.Q.size(); ++j) CHECK(b.Q.a[i][j] == b.Q.a[b.Q.theta[j]][b.Q.theta[i]]);
    return b;
  };
  XiSpec one{false, 1, 0}, q{false, 1, 1}, gen{true, 1, 0};
  auto r1 = row(0, one);
  CHECK(r1.cls.row == 1);
  CHECK(r1.cls.fixed_points == "{1}");
  auto r2 = row(0, q);
  CHECK(r2.cls.row == 2);
  CHECK(r2.cls.fixed_points == "{}");
  CHECK(row(0, gen).cls.row == 3);
  auto r4 = row(8, one);
  CHECK(r4.cls.row == 4);
  CHECK(r4.Q.size() == 4);
  int nfix = 0;
  for (int i = 0; i < r4.Q.size(); ++i) nfix += r4.Q.fixed(i);
  CHECK(nfix == 2);
  CHECK(row(8, q).cls.row == 5);
  auto r6 = row(8, gen);
  CHECK(r6.cls.row == 6);
  CHECK(r6.cls.fixed_points == "{}");
  auto r7 = row(5, one);
  CHECK(r7.cls.row == 7);
  CHECK(r7.cls.fixed_points == "{1}");
  CHECK(row(5, gen).cls.row == 8);
  CHECK_THROWS(build_bkr_quiver(0, one, MRat(1), qpow(2), 2));
  CHECK_THROWS(build_bkr_quiver(0, one, qpow(2), MRat(-1), 2));

  // Framing at p1 and -p0.
  BkrQuiver f = build_bkr_quiver(0, one, -qpow(2), qpow(2), 2);
  CHECK(f.Q.lambda[f.Q.index_of("q^2")] == 2);
}

TEST_CASE("J-data") {
  JDatum d;
  MRat z = mvar(var::z);
  for (int n = -9; n <= 9; n += 2) {
    d.names.push_back(std::to_string(n));
    d.tags.push_back("V");
    d.X.push_back(qpow(n));
    d.theta.push_back((9 - n) / 2);
  }
  d.rden[{"V", "V"}] = z - qpow(2);
  d.kden["V"] = mvar(var::z) - qpow(3);
  EnhancedQuiver Q = quiver_from_jdatum(d);
  for (int i = 0; i < Q.size(); ++i)
    for (int j = 0; j < Q.size(); ++j) CHECK(Q.a[i][j] == (j == i + 1 ? 1 : 0));
  CHECK(validate(Q, true).ok());
  for (int i = 0; i < Q.size(); ++i) CHECK(Q.lambda[i] == (Q.names[i] == "-3" ? 1 : 0));
  d.framing = FramingConvention::AtVertex;
  EnhancedQuiver V = quiver_from_jdatum(d);
  CHECK(V.lambda[V.index_of("3")] == 1);
  d.X[0] = qpow(8);
  CHECK_THROWS(quiver_from_jdatum(d));

  for (int N : {5, 6, 7}) {
    EnhancedQuiver D = quiver_from_jdatum(affine_d_datum(N));
    std::set<std::pair<int, int>> want{{0, 2}, {1, 2}, {N - 2, N - 1}, {N - 2, N}};
    for (int i = 2; i <= N - 3; ++i) want.insert({i, i + 1});
    std::set<std::pair<int, int>> got;
    for (int i = 0; i <= N; ++i)
      for (int j = 0; j <= N; ++j)
        if (D.a[i][j]) {
          CHECK(D.a[i][j] == 1);
          got.insert({i, j});
        }
    CHECK(got == want);
    CHECK(validate(D, true).ok());
    CHECK_FALSE(D.notes.empty());
  }

  EnhancedQuiver two;
  two.add_vertex("i");
  two.add_vertex("j");
  two.a[0][1] = 1;
  two.theta = {0, 1};
  std::string dot = export_dot(two);
  CHECK(dot.find("v0 -> v1;") != std::string::npos);
  CHECK(export_dot(EnhancedQuiver{}) == "digraph quiver {\n}\n");
}

TEST_CASE("skew ring") {
  EnhancedQuiver Q = a_segment(3);
  auto comps = compositions(Q, theta_beta(Q, {Q.index_of("1"), Q.index_of("3")}), true);
  auto sp = SkewSpace::make(2, VarConvention::Additive, comps, Q.theta);
  int nu = 0;
  SkewElement e = skew_idem(sp, nu, MRat(1));
  CHECK((e * e).terms() == e.terms());
  SignedPerm s0 = SignedPerm::gen(0, 2);
  SkewElement a = SkewElement::term(sp, nu, s0, MRat(1));
  SkewElement b = SkewElement::term(sp, sp->act(s0, nu), s0, MRat(1));
  SkewElement ab = a * b;
  REQUIRE(ab.terms().size() == 1);
  CHECK(ab.terms().begin()->first.first == nu);
  CHECK(ab.terms().begin()->first.second.is_identity());
  SkewElement x1 = SkewElement::term(sp, nu, SignedPerm::identity(2), mvar(var::x(1)));
  SkewElement x2 = SkewElement::term(sp, nu, SignedPerm::identity(2), mvar(var::x(2)));
  CHECK((x1 * x2).terms().begin()->second == mvar(var::x(1)) * mvar(var::x(2)));

  std::vector<MRat> v(static_cast<std::size_t>(sp->size()));
  v[static_cast<std::size_t>(sp->act(s0, nu))] = mvar(var::x(1));
  auto r = bsw::apply(a, v);
  CHECK(r[static_cast<std::size_t>(nu)] == -mvar(var::x(1)));
  std::vector<MRat> ones(static_cast<std::size_t>(sp->size()), MRat(1));
  auto r1 = bsw::apply(skew_one(sp, MRat(1)), ones);
  for (const auto& c : r1) CHECK(c == MRat(1));

  // Associativity and the representation property on random sparse elements.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(0, sp->size() - 1), coef(-3, 3);
  auto rnd = [&]() {
    SkewElement s(sp);
    for (int t = 0; t < 3; ++t) {
      SignedPerm w = random_perm(2, rng);
      MRat f = MRat(coef(rng)) + MRat(coef(rng)) * mvar(var::x(1)) + mvar(var::x(2)) / (mvar(var::x(1)) + 2);
      s.add_term(pick(rng), w, f);
    }
    return s;
  };
  std::vector<MRat> vec;
  for (int i = 0; i < sp->size(); ++i) vec.push_back(mvar(var::x(1)) * MRat(i + 1) - mvar(var::x(2)));
  for (int i = 0; i < 50; ++i) {
    SkewElement p = rnd(), q = rnd(), s = rnd();
    SkewElement d = (p * q) * s - p * (q * s);
    CHECK(d.is_zero());
    if (i < 15) {
      auto l = bsw::apply(p * q, vec);
      auto rr = bsw::apply(p, bsw::apply(q, vec));
      for (std::size_t k = 0; k < l.size(); ++k) CHECK(l[k] == rr[k]);
    }
  }
  SignedPerm g = from_word({0, 1}, 2);
  SkewElement G = SkewElement::uniform(sp, g, MRat(1)) * SkewElement::uniform(sp, g.inverse(), MRat(1));
  CHECK((G - skew_one(sp, MRat(1))).is_zero());
}

TEST_CASE("regularity sampling") {
  auto sp = SkewSpace::trivial(1, VarConvention::Multiplicative);
  std::vector<std::vector<MRat>> bp{{qpow(3)}};
  std::mt19937_64 rng(5);
  MRat X = mvar(var::X(1));
  auto id = SignedPerm::identity(1);
  CHECK_FALSE(is_regular_at(SkewElement::term(sp, 0, id, (X - qpow(3)).inv()), bp, 5, rng).regular);
  CHECK(is_regular_at(SkewElement::term(sp, 0, id, (X - qpow(3)) / (X - qpow(3))), bp, 5, rng).regular);
  // Difference quotient at a theta-fixed point: X^{-1}-type (s0 - 1) after a pole cancels.
  std::vector<std::vector<MRat>> bp1{{MRat(1)}};
  MRat c = X / (X * X - 1);
  SkewElement dq = SkewElement::term(sp, 0, SignedPerm::gen(0, 1), c) - SkewElement::term(sp, 0, id, c);
  CHECK(is_regular_at(dq, bp1, 5, rng).regular);
  CHECK_FALSE(is_regular_at(SkewElement::term(sp, 0, id, c), bp1, 5, rng).regular);
}
