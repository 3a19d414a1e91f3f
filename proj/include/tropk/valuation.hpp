#pragma once

#include "tropk/fan.hpp"
#include "tropk/flag.hpp"

#include <vector>

namespace tropk {

// Finitely generated subgroup of R^r with lexicographic order; elements are
// Z-combinations of the generators.
struct OrderedValueGroup {
  int levels = 0;     // r
  FRMat generators;   // each of length levels
};

// The maximal chain of convex subgroups. Every convex subgroup of a finitely
// generated lex-ordered group is a level cut: H_j = elements whose first j
// levels vanish. cuts lists the distinct subgroups top-down, so cuts.front()
// = 0 (whole group) and cuts.back() = first cut annihilating everything.
struct ConvexChain {
  std::vector<int> cuts;
  int height() const { return static_cast<int>(cuts.size()) - 1; }
};

struct HeightResult {
  int height = 0;
  int rational_rank = 0;
  ConvexChain chain;
};

HeightResult group_height(const OrderedValueGroup& g);

// Order-isomorphic copy with exactly height-many levels: levels at which no
// convex subgroup drops are deleted (such levels vanish identically on the
// relevant difference sets, so lexicographic comparisons are unchanged).
OrderedValueGroup hahn_reduce(const OrderedValueGroup& g);

// Exact lexicographic comparison of two group elements given as generator
// tuples; -1, 0, +1.
int lex_compare(const FRVec& a, const FRVec& b);

// Valuation on the monomial field of the lattice Z^lattice_rank, trivial on
// the coefficient field: v(chi^m) = (l_1(m), ..., l_r(m)) lexicographically.
struct MonomialValuation {
  int lattice_rank = 0;
  FRMat flag;  // r rows of length lattice_rank

  FRVec value(const ZVec& m) const;
  int levels() const { return static_cast<int>(flag.size()); }
};

OrderedValueGroup value_group(const MonomialValuation& v);

// Value group generated by applying a flag to a lattice basis; the
// independent side of the height cross-check.
OrderedValueGroup flag_value_group(const Flag& x);

// v/H for the convex subgroup H = level cut j: the quotient keeps the first
// j levels.
MonomialValuation quotient_by_convex(const MonomialValuation& v, int cut);

// v|H: finite exactly on the sublattice where the first `cut` levels vanish;
// returned as a valuation on that sublattice (basis rows included).
struct RestrictedValuation {
  ZMat sublattice;  // basis rows inside the original lattice
  MonomialValuation valuation;
};
RestrictedValuation restrict_to_convex(const MonomialValuation& v, int cut);

// Appends levels acting on the residue lattice (the kernel sublattice of the
// existing flag); rejects levels vanishing there.
MonomialValuation vertical_specialize(const MonomialValuation& v,
                                      const FRMat& extra);

// The cone of the fan whose orbit holds the center of v; NoCenter when the
// flag locates outside the support.
const Cone& toric_valuation_center(const Fan& f, const MonomialValuation& v);

MonomialValuation divisorial_valuation(const Cone& ray);

}  // namespace tropk
