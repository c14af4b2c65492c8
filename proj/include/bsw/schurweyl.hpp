#pragma once

#include <random>
#include <vector>

#include "bsw/bkr.hpp"
#include "bsw/oklr.hpp"
#include "bsw/rkmat.hpp"
#include "bsw/skewring.hpp"

namespace bsw {

// Generator images acting on ⊕_ν V^{⊗n}: s_k ↦ R_k, s_0 ↦ K, x_l ↦ X(ν_l)/z_l − z_l/X(ν_l).
// A term M e(ν) w of Skew<RatMatrix> is the operator (M, w) landing on the ν summand.
struct SwContext {
  int N = 2;
  KVariant variant = KVariant::Mu1;
  MRat p0, p1;  // Mu1: p = p0 = p1
  int m = 1;    // vertices are the odd integers in [-m, m]
  std::vector<int> beta_labels;
  bool isotropic = true;
  FramingConvention framing = FramingConvention::ThetaTwisted;
  RkOrientation orient = RkOrientation::Proof;
  JDatum datum;
  OklrContext oklr;
  SpacePtr space;  // spectral skew ring over the compositions of oklr
  RatMatrix R, K;

  const MRat& X(int vertex) const { return datum.X[static_cast<std::size_t>(vertex)]; }
  int dim() const;  // N^n
};

// beta_labels are vertex labels n (odd, |n| <= m); isotropic contexts use β = Σ ^θ n,
// ordinary ones β = Σ n. ThetaTwisted framing pairs with the ThetaSource reading of τ_0,
// AtVertex with the Vertex reading.
SwContext make_sw_context(int N, KVariant v, const MRat& p0, const MRat& p1, int m, const std::vector<int>& beta_labels,
                          FramingConvention f = FramingConvention::ThetaTwisted, bool isotropic = true);

std::map<int, MRat> xz_substitution(const SwContext& c, int nu);
std::vector<std::vector<MRat>> sw_basepoints(const SwContext& c);

// (M, w) for a signed permutation, as a product of R_k and K along a shortest word.
ParamOperator perm_operator(const SwContext& c, const SignedPerm& w);

// Image of an additive skew-ring element of c.oklr.
Skew<RatMatrix> sw_image(const SwContext& c, const SkewElement& a);
Skew<RatMatrix> sw_action(const SwContext& c, GenKind kind, int nu, int k = 0);
// K e(ν) with no framing factor (the negative control).
Skew<RatMatrix> raw_k(const SwContext& c, int nu);

RegularityResult check_lattice_stability(const SwContext& c, GenKind kind, int nu, int k, int trials, std::mt19937_64& rng);
RegularityResult check_regular(const SwContext& c, const Skew<RatMatrix>& a, int trials, std::mt19937_64& rng);

// τ_k and x_l built directly from R-matrices, case by case.
Skew<RatMatrix> kkk_action(const SwContext& c, GenKind kind, int nu, int k = 0);

// KLR generators against kkk_action; every generator against the BKR images with
// Φ_k ↦ R_k, Φ_0 ↦ K, X_l ↦ z_l (computed in the AtVertex twin of c).
RelationReport check_klr_restriction(const SwContext& c, int nu);

RelationReport verify_sw_relations(const SwContext& c);

// sw(embed(a1 ⊗ a2)) against the tensor product of the two actions, for a1 and a2
// ranging over generators (paired with idempotents).
RelationReport check_sw_induction(const SwContext& big, const SwContext& c1, const SwContext& c2);

struct CokerResult {
  int corank = 0;
  int rank = 0;
  RatMatrix value;                       // x_1^{d_i} c_i K(z) at z = X(i)
  std::vector<int> basis;                // e_j (0-based) spanning a complement of the image
  std::vector<std::vector<MRat>> left_null;  // functionals vanishing on the image
};
// unit: c_i as a function of var::z, required to be nonzero at X(i).
CokerResult coker_k0(const SwContext& c, int vertex, const MRat& unit = MRat(1));

// Exact rank over the coefficient field with pivot rows of a column reduction.
int exact_rank(const RatMatrix& M, std::vector<int>* pivot_rows = nullptr);

}  // namespace bsw
