#include <doctest.h>

#include "bsw/rkmat.hpp"

using namespace bsw;

namespace {

void all_pass(const RelationReport& r) {
  const RelationResult* f = r.first_failure();
  INFO((f ? f->id + ": " + f->residual : std::string("ok")));
  CHECK(r.ok());
  CHECK_FALSE(r.results.empty());
}

const MRat z = mvar(var::z), w = mvar(var::w), q = mvar(var::q);

}  // namespace

TEST_CASE("fundamental R-matrix") {
  RatMatrix R = rmat_fund(2);
  MRat den = w - q * q * z;
  CHECK(R.at(1, 1) == (MRat(1) - q * q) * z / den);
  CHECK(R.at(2, 1) == q * (w - z) / den);
  CHECK(R.at(2, 2) == (MRat(1) - q * q) * w / den);
  CHECK(R.at(0, 0) == MRat(1));
  CHECK(R.at(3, 3) == MRat(1));
  for (int N : {2, 3, 4}) {
    RatMatrix Rz = rmat_fund(N).transform([](const MRat& e) { return e.subst({{var::w, mvar(var::z)}}); });
    CHECK(Rz == RatMatrix::identity(N * N));
  }
  CHECK_THROWS(rmat_fund(1));
}

TEST_CASE("K-matrices") {
  MRat p = mvar(var::p), p0 = mvar(var::p0), p1 = mvar(var::p1);
  RatMatrix K3 = kmat(3, KVariant::Mu1, p, p);
  CHECK(K3.at(1, 1) == MRat(1));
  CHECK(K3.at(0, 1).is_zero());
  CHECK(K3.at(2, 0) == p * (z - z.inv()) / (z - p * p / z));
  RatMatrix K4 = kmat(4, KVariant::NonRestrictable, p0, p1);
  CHECK(K4.at(3, 3) == MRat(1) + (z - z.inv()) / (p1 - z));
  CHECK(K4.at(1, 1) == MRat(1));
  CHECK_THROWS(kmat(3, KVariant::NonRestrictable, p0, p1));
  CHECK_THROWS(kmat(2, KVariant::Restrictable, MRat(1), p1));
  auto at1 = [](const RatMatrix& K) { return K.transform([](const MRat& e) { return e.subst({{var::z, MRat(1)}}); }); };
  for (int N : {2, 3, 4}) {
    CHECK(at1(kmat(N, KVariant::Mu1, p, p)) == RatMatrix::identity(N));
    CHECK(at1(kmat(N, KVariant::Restrictable, p0, p1)) == RatMatrix::identity(N));
  }
}

TEST_CASE("R/K identities") {
  MRat p = mvar(var::p), p0 = mvar(var::p0), p1 = mvar(var::p1);
  for (int N : {2, 3, 4})
    for (auto o : {RkOrientation::Proof, RkOrientation::Lemma}) {
      all_pass(check_rk_identities(rmat_fund(N), kmat(N, KVariant::Restrictable, p0, p1), N, 2, o));
      all_pass(check_rk_identities(rmat_fund(N), kmat(N, KVariant::Mu1, p, p), N, 2, o));
      if (N % 2 == 0) all_pass(check_rk_identities(rmat_fund(N), kmat(N, KVariant::NonRestrictable, p0, p1), N, 2, o));
    }
  all_pass(check_rk_identities(rmat_fund(2), kmat(2, KVariant::Mu1, p, p), 2, 3));
  all_pass(check_rk_identities(rmat_fund(3), kmat(3, KVariant::Mu1, p, p), 3, 3, RkOrientation::Proof, true));

  // Unitarity as a plain matrix identity: R̂(z,w) R̂(w,z) = id.
  RatMatrix R = rmat_fund(3);
  RatMatrix Rs = R.transform([](const MRat& e) { return e.subst({{var::z, mvar(var::w)}, {var::w, mvar(var::z)}}); });
  CHECK(R * Rs == RatMatrix::identity(9));

  // Corrupted data fail.
  RatMatrix K = kmat(3, KVariant::Restrictable, p0, p1);
  K.set(2, 0, K.at(2, 0) * MRat(2));
  CHECK_FALSE(check_rk_identities(rmat_fund(3), K, 3, 2).ok());
  RatMatrix Rb = rmat_fund(2);
  Rb.set(1, 1, -Rb.at(1, 1));
  CHECK_FALSE(check_rk_identities(Rb, kmat(2, KVariant::Mu1, p, p), 2, 3, RkOrientation::Proof, true).ok());
}

TEST_CASE("parameter operators") {
  ParamOperator a = x_operator(2, 1, 2), b = {RatMatrix::identity(4), SignedPerm::gen(0, 2)};
  ParamOperator ab = b * a;
  CHECK(ab.M == RatMatrix::scalar(4, mvar(var::zs(1)).inv()));
  ParamOperator r = r_operator(rmat_fund(2), 2, 1, 2, RkOrientation::Proof);
  CHECK(((r * b) * a) == (r * (b * a)));
}

TEST_CASE("denominators and poles") {
  MRat p0 = mvar(var::p0), p1 = mvar(var::p1);
  RatMatrix R = rmat_fund(3).transform([](const MRat& e) { return e.subst({{var::z, MRat(1)}}); });
  CHECK(denominator_and_poles(R, var::w, {}).den == w - q * q);
  DenominatorInfo k = denominator_and_poles(kmat(3, KVariant::Restrictable, p0, p1), var::z, {p1, -p0, qpow(2), qpow(-3), MRat(1)});
  CHECK(k.den == (z - p1) * (z + p0));
  CHECK(k.pole_orders == std::vector<int>{1, 1, 0, 0, 0});
  MRat p = qpow(5);
  DenominatorInfo m = denominator_and_poles(kmat(2, KVariant::Mu1, p, p), var::z, {p, -p, qpow(3)});
  CHECK(m.pole_orders == std::vector<int>{1, 1, 0});
  CHECK(denominator_and_poles(RatMatrix::identity(2), var::z, {}).den == MRat(1));
}

TEST_CASE("type A J-datum") {
  MRat p = qpow(3);
  JDatum d = typeA_fund_datum(9, 2, KVariant::Mu1, p, p);
  EnhancedQuiver Q = quiver_from_jdatum(d);
  for (int i = 0; i < Q.size(); ++i)
    for (int j = 0; j < Q.size(); ++j) CHECK(Q.a[i][j] == (j == i + 1 ? 1 : 0));
  for (int i = 0; i < Q.size(); ++i) CHECK(Q.lambda[i] == (Q.names[i] == "-3" ? 1 : 0));
  CHECK(validate(Q, true).ok());
  d.framing = FramingConvention::AtVertex;
  EnhancedQuiver V = quiver_from_jdatum(d);
  for (int i = 0; i < V.size(); ++i) CHECK(V.lambda[i] == (V.names[i] == "3" ? 1 : 0));
}
