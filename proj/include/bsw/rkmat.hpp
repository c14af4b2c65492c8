#pragma once

#include <vector>

#include "bsw/oklr.hpp"
#include "bsw/quiver.hpp"
#include "bsw/ratmatrix.hpp"
#include "bsw/weylb.hpp"

namespace bsw {

// R̂(z, w) on V ⊗ V for the first fundamental representation of U_q(L sl_N);
// basis u_r ⊗ u_s has index (r-1) N + (s-1).
RatMatrix rmat_fund(int N);

enum class KVariant { NonRestrictable, Restrictable, Mu1 };
// K(z) on V. Mu1 uses p = p0 (p1 is ignored).
RatMatrix kmat(int N, KVariant v, const MRat& p0, const MRat& p1);

// Matrix acting on V^{⊗n} together with the signed permutation it applies to z_1..z_n.
struct ParamOperator {
  RatMatrix M;
  SignedPerm w;
  ParamOperator operator*(const ParamOperator& o) const;
  bool operator==(const ParamOperator& o) const { return w == o.w && M == o.M; }
};

// Where the spectral parameters go:
//   Proof: R_k = (R̂ with z = z_{k+1}, w = z_k, s_k),   K = (K(1/z_1), s_0)
//   Lemma: R_k = (R̂(z_k, z_{k+1}), s_k),               K = (K(z_1), s_0)
enum class RkOrientation { Proof, Lemma };

ParamOperator r_operator(const RatMatrix& R, int N, int k, int n, RkOrientation o);
ParamOperator k_operator(const RatMatrix& K, int N, int n, RkOrientation o);
ParamOperator x_operator(int N, int l, int n);  // multiplication by z_l (l may be negative)

RelationReport check_rk_identities(const RatMatrix& R, const RatMatrix& K, int N, int n, RkOrientation o = RkOrientation::Proof,
                                   bool ybe_only = false);

struct DenominatorInfo {
  MRat den;  // monic in the chosen variable
  std::vector<int> pole_orders;
};
// Least common denominator of the entries as a polynomial in v, and pole orders at the points.
DenominatorInfo denominator_and_poles(const RatMatrix& M, int v, const std::vector<MRat>& points);

// Fundamental type-A J-datum: odd n in [-m, m], X(n) = q^n, θ(n) = -n; the R-denominator is
// read off rmat_fund(N) and the K-denominator off kmat(N, variant, p0, p1).
JDatum typeA_fund_datum(int m, int N, KVariant v, const MRat& p0, const MRat& p1,
                        FramingConvention f = FramingConvention::ThetaTwisted);

}  // namespace bsw
