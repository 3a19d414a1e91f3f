#pragma once

#include "tropk/rational.hpp"

#include <map>
#include <vector>

namespace tropk {

// Nonzero univariate rational function that splits over Q, stored as
// constant * prod (t - root)^exponent with distinct roots and nonzero
// exponents.
struct FactoredFunction {
  Rat constant = Rat(1);
  std::vector<std::pair<Rat, int>> factors;  // (root, exponent)

  static FactoredFunction make(Rat constant,
                               std::vector<std::pair<Rat, int>> factors);
};

// Factor a univariate rational polynomial (coeffs low to high) into linear
// factors by rational root search; UnsplitFactor when an irreducible factor
// of degree >= 2 remains.
FactoredFunction factor_poly(const QVec& coeffs);

// Class of a nonzero rational in Q^x tensor Q: prime -> exponent. Sign and
// roots of unity are torsion, so they vanish.
struct K1Vec {
  std::map<Int, Rat> primes;
  bool is_zero() const { return primes.empty(); }
};

K1Vec k1_class(const Rat& x);

// Element of wedge^p of Q^x tensor Q, held over the sorted list of primes
// that occur. Zero coordinates keep the representation canonical only up to
// basis padding, so comparison goes through k1_wedge_equal.
struct K1Wedge {
  int p = 0;
  std::vector<Int> primes;
  QVec coords;  // wedge coordinates over the prime basis
  bool is_zero() const;
};

bool k1_wedge_equal(const K1Wedge& a, const K1Wedge& b);

// A place of the rational function field: a rational point t = c or t = oo.
struct ResiduePoint {
  bool at_infinity = false;
  Rat c = Rat(0);
  static ResiduePoint at(Rat value) { return {false, std::move(value)}; }
  static ResiduePoint infinity() { return {true, Rat(0)}; }
};

// Tame residue of the p-symbol (f_1, ..., f_p) at the place: write each
// entry as pi^a u with pi the uniformizer; terms with one pi survive as
// (-1)^(i-1) a_i (spec(f_1) ^ ... omit i ... ^ spec(f_p)), terms with
// several collapse to torsion. spec is evaluation of the unit part at the
// place.
K1Wedge tame_residue(const std::vector<FactoredFunction>& symbol,
                     const ResiduePoint& pt);

// --- raw symbol entries ---------------------------------------------------

// Entry of a symbol before normalization: a monomial in the lattice
// variables, a factored univariate function, or a scalar from the base
// field.
struct SymbolEntry {
  enum Kind { Monomial, Factored, Constant } kind = Constant;
  ZVec exponent;       // Monomial
  FactoredFunction f;  // Factored
  Rat c = Rat(1);      // Constant
};

// Normal form of a raw symbol. Pure monomial/constant symbols become a
// wedge class in wedge^p M_Q (constants have trivial class, so any constant
// entry kills the symbol). In one variable, factored entries are allowed and
// everything is rewritten residue-ready; factored entries in several
// variables are UnsupportedEntry.
struct SymbolFactorResult {
  bool monomial = false;
  QVec wedge;                                   // when monomial
  std::vector<FactoredFunction> residue_ready;  // when not
};

SymbolFactorResult symbol_factor(int vars,
                                 const std::vector<SymbolEntry>& raw);

}  // namespace tropk
