#pragma once

#include "tropk/fan.hpp"
#include "tropk/valuation.hpp"

namespace tropk {

// Laurent polynomial reduced to its exponent set: over a trivially valued
// coefficient field the tropical hypersurface depends on nothing else.
struct ExponentPolynomial {
  int vars = 0;
  ZMat exponents;  // deduplicated on construction via make()

  static ExponentPolynomial make(int vars, ZMat exponents);
};

// Fan supported on {w : min over exponents of <m,w> attained at least twice},
// the codimension >= 1 skeleton of the Newton polytope's normal fan. A single
// monomial yields the trivial fan (origin only).
Fan tropical_hypersurface(const ExponentPolynomial& f);

// Integer lattice map N_source -> N_target, dual to a homomorphism of tori.
struct MonomialMap {
  int source_rank = 0;
  int target_rank = 0;
  ZMat matrix;  // target_rank rows of length source_rank

  ZVec apply(const ZVec& v) const { return mat_vec(matrix, v); }
};

// Fan structure on the set image of |a|: cones are pushed forward piecewise
// (split through preimages of target orthants so images stay pointed) and
// re-subdivided by the full hyperplane arrangement when the raw images do
// not already form a fan.
Fan image_support(const MonomialMap& psi, const Fan& a);

// |a| inside |sigma|: the closure criterion for properness of the
// compactification.
bool properness_check(const Fan& a, const Fan& sigma);

// Tropicalization of a monomial valuation on a fan: the located cone of the
// canonicalized flag. NoCenter outside the support.
const Cone& trop_ad(const MonomialValuation& v, const Fan& lambda);

}  // namespace tropk
