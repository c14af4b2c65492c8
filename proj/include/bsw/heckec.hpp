#pragma once

#include "bsw/oklr.hpp"
#include "bsw/ratmatrix.hpp"
#include "bsw/skewring.hpp"

namespace bsw {

// Affine Hecke algebra of type C_n in its polynomial representation on k[X^{±1}].
struct HeckeContext {
  int n = 1;
  MRat p0 = mvar(var::p0);
  MRat p1 = mvar(var::p1);
  SpacePtr space;  // trivial label set, multiplicative convention
};

HeckeContext make_hecke_context(int n, const MRat& p0 = mvar(var::p0), const MRat& p1 = mvar(var::p1));

inline MRat Xv(int l) { return mvar(var::X(l)); }

// Coefficients of the difference operators: T_k = q + ck (s_k - 1), T_0 = p0 + c0 (s_0 - 1).
MRat hecke_ck(int k);
MRat hecke_c0(const HeckeContext& h);

SkewElement hecke_T(const HeckeContext& h, int k);  // k = 0 is T_0
SkewElement hecke_X(const HeckeContext& h, int l, int power = 1);
SkewElement hecke_scalar(const HeckeContext& h, const MRat& c);
// Φ_k (k >= 1) and Φ_0; throws if p0 or p1 is ±1 for k = 0.
SkewElement intertwiner(const HeckeContext& h, int k);

RelationReport verify_hecke_relations(const HeckeContext& h);
// Generators applied to Laurent monomials with exponents in [-2, 2] give Laurent polynomials.
bool preserves_laurent_lattice(const HeckeContext& h);

// Finite type B: T_0 = K^fin on factor 1, T_k = R^fin on factors k, k+1 of (C^N)^{⊗n}.
RatMatrix rfin(int N);
RatMatrix kfin(int N, const MRat& p);
RelationReport finite_typeB_check(int N, const MRat& p, int n);

}  // namespace bsw
