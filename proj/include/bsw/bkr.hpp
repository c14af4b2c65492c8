#pragma once

#include <map>

#include "bsw/heckec.hpp"
#include "bsw/oklr.hpp"
#include "bsw/quiver.hpp"

namespace bsw {

// Where the vertex values X(·) in the τ-image coefficients are read and where the
// coefficient is placed relative to Φ:
//   Target:     values of the target composition (s_k ν, s_0 ν), coefficient on the left
//   SourceLeft: values of ν, coefficient on the left
//   Right:      values of ν, coefficient on the right of Φ
enum class BkrReading { Target, SourceLeft, Right };

struct BkrContext {
  BkrQuiver bq;
  HeckeContext hecke;
  OklrContext oklr;  // additive model on the same quiver and β (Vertex reading)
  SpacePtr space;    // multiplicative skew ring over the same compositions
  BkrReading reading = BkrReading::Target;

  const MRat& X(int vertex) const { return *bq.Q.label[static_cast<std::size_t>(vertex)]; }
};

BkrContext make_bkr_context(const BkrQuiver& bq, const DimVector& beta, const MRat& p0, const MRat& p1,
                            BkrReading r = BkrReading::Target);

// x_k e(ν) ↦ (X(ν_k)/X_k − X_k/X(ν_k)) e(ν).
std::map<int, MRat> xX_substitution(const BkrContext& c, int nu);

// Hecke element (trivial label set) placed on the summand e(ν) of the β skew ring.
SkewElement lift_hecke(const BkrContext& c, const SkewElement& h, int nu);

SkewElement bkr_image(const BkrContext& c, GenKind kind, int nu, int k = 0);

// Image of an additive skew-ring element under the x–X map (coefficients at the target summand).
SkewElement transport(const BkrContext& c, const SkewElement& a);

RelationReport verify_bkr(const BkrContext& c, bool klr_only = false);

}  // namespace bsw
