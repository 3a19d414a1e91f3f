#pragma once

#include "tropk/fan.hpp"
#include "tropk/stratum.hpp"
#include "tropk/subspace.hpp"

#include <vector>

namespace tropk {

// A higher-rank tropical point: an ordered tuple of levels l_1, ..., l_r in
// N_R, evaluated lexicographically. Raw flags may be degenerate; canonical
// flags have every residual nonzero and normalized.
struct Flag {
  int rank = 0;   // ambient lattice rank n
  FRMat levels;   // r rows of length rank

  LexPoint lex_point() const { return LexPoint{rank, levels}; }
};

// Level i written as sum_k a_{i,k} l_{i,k} with rational components l_{i,k}
// spanning the minimal rational subspace containing l_i, and Q-independent
// real coefficients a_{i,k}.
struct ResidualDecomposition {
  struct Level {
    QMat components;      // Q-independent rational vectors (echelonized)
    FRVec coefficients;   // matching Q-independent coefficients
  };
  std::vector<Level> levels;
};

ResidualDecomposition residual_decomposition(const Flag& x);

// Delete levels with zero residual modulo the rational span of the earlier
// components, replace each survivor by its normalized residual. Idempotent,
// invariant under positive rescaling of residuals.
Flag canonicalize(const Flag& x);

// Rational span of all residual components of a flag.
QSubspace residual_span(const Flag& x);

// The cone of the fan assigned to the flag: lexicographic point location.
const Cone& limit_point(const Fan& f, const Flag& x);

// Same on a collection of compactified cones: the perturbed point sits in the
// dense stratum, so the match is among carriers over the zero cone.
const CompactifiedCone& limit_point(const Fan& f,
                                    const std::vector<CompactifiedCone>& cones,
                                    const Flag& x);

// Height of the tropical point: the level count of its canonical form. The
// valuation module provides the independent cross-check via the ordered
// value group the flag generates on a lattice basis.
int flag_height(const Flag& x);

struct SpanStabilization {
  QSubspace span;       // span of the located cone in the last tower entry
  int stable_index;     // first tower index achieving the residual span, -1 if none
};

SpanStabilization span_stabilization(const Flag& x,
                                     const std::vector<Fan>& tower);

// Height <= 1 points are plain directions: nonzero direction -> length-1
// canonical flag, zero -> empty flag.
Flag ht1_compare(int rank, const FRVec& direction);

}  // namespace tropk
