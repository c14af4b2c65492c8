#include <doctest.h>

#include "bsw/bkr.hpp"
#include "support.hpp"

using namespace bsw;

namespace {

DimVector bt(const EnhancedQuiver& Q, std::initializer_list<const char*> names) { return beta_of(Q, names); }

void all_pass(const RelationReport& r) {
  const RelationResult* f = r.first_failure();
  INFO((f ? f->id + " at " + f->nu + ": " + f->residual : std::string("ok")));
  CHECK(r.ok());
  CHECK(r.results.size() > 10);
}

// Row (1): xi = 1, p1 = q^2 framed, -p0 = -q^3 not a vertex.
BkrQuiver row1() { return build_bkr_quiver(0, {false, 1, 0}, qpow(3), qpow(2), 2); }
// Row (2): xi = q, p1 = q framed.
BkrQuiver row2() { return build_bkr_quiver(0, {false, 1, 1}, qpow(3), qpow(1), 2); }

}  // namespace

TEST_CASE("x-X map") {
  BkrQuiver b = row2();
  BkrContext c = make_bkr_context(b, bt(b.Q, {"q"}), qpow(3), qpow(1));
  int nu = c.oklr.index({b.Q.index_of("q")});
  MRat img = xX_substitution(c, nu).at(var::x(1));
  CHECK(img == qpow(1) / Xv(1) - Xv(1) / qpow(1));
  CHECK(img.subst({{var::X(1), qpow(1)}}).is_zero());
  // s_0-equivariance: invert X_1 in the image at ν equals minus the image at s_0 ν.
  int snu = c.space->act(SignedPerm::gen(0, 1), nu);
  MRat lhs = act_on_variables(SignedPerm::gen(0, 1), img, VarConvention::Multiplicative);
  CHECK(lhs == -xX_substitution(c, snu).at(var::x(1)));
}

TEST_CASE("BKR images are the transported oKLR images") {
  BkrQuiver b = row1();
  BkrContext c = make_bkr_context(b, bt(b.Q, {"1", "q^2", "q^4"}), qpow(3), qpow(2));
  for (int nu = 0; nu < c.space->size(); ++nu) {
    for (int k = 1; k < c.oklr.n; ++k) CHECK((bkr_image(c, GenKind::Tau, nu, k) - transport(c, gen_tau(c.oklr, k, nu))).is_zero());
    CHECK((bkr_image(c, GenKind::Tau0, nu) - transport(c, gen_tau(c.oklr, 0, nu))).is_zero());
    SkewElement e = bkr_image(c, GenKind::E, nu);
    CHECK((e * e - e).is_zero());
  }
}

TEST_CASE("BKR relations, target reading") {
  BkrQuiver b1 = row1();
  all_pass(verify_bkr(make_bkr_context(b1, bt(b1.Q, {"1", "q^2"}), qpow(3), qpow(2))));
  all_pass(verify_bkr(make_bkr_context(b1, bt(b1.Q, {"1", "1", "q^2"}), qpow(3), qpow(2))));
  all_pass(verify_bkr(make_bkr_context(b1, bt(b1.Q, {"1", "q^2", "q^4"}), qpow(3), qpow(2))));
  BkrQuiver b2 = row2();
  all_pass(verify_bkr(make_bkr_context(b2, bt(b2.Q, {"q"}), qpow(3), qpow(1))));
  all_pass(verify_bkr(make_bkr_context(b2, bt(b2.Q, {"q", "q^3"}), qpow(3), qpow(1))));
  all_pass(verify_bkr(make_bkr_context(b2, bt(b2.Q, {"q", "q", "q^3"}), qpow(3), qpow(1))));
  // KLR subset.
  all_pass(verify_bkr(make_bkr_context(b2, bt(b2.Q, {"q", "q^3"}), qpow(3), qpow(1)), true));
  // Root of unity, row (4): q of order 8, fixed points 1 and -1 = q^4.
  BkrQuiver b4 = build_bkr_quiver(8, {false, 1, 0}, qpow(3), MRat(5), 1);
  all_pass(verify_bkr(make_bkr_context(b4, bt(b4.Q, {"1", "q^2"}), qpow(3), MRat(5))));
}

TEST_CASE("BKR literal readings fail") {
  BkrQuiver b2 = row2();
  for (auto r : {BkrReading::SourceLeft, BkrReading::Right}) {
    RelationReport rep = verify_bkr(make_bkr_context(b2, bt(b2.Q, {"q", "q^3"}), qpow(3), qpow(1), r));
    CHECK_FALSE(rep.ok());
  }
  CHECK_THROWS(make_bkr_context(b2, bt(b2.Q, {"q"}), qpow(3), qpow(5)));
}
