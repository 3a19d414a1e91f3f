#pragma once

#include "tropk/error.hpp"
#include "tropk/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace tropk {

// Maximum number of enclosure bisections attempted by sign queries before
// giving up with IndeterminateSign.
int& interval_depth();

// A declared basis beta_1, ..., beta_s of real numbers, treated as
// Q-linearly independent together with beta_0 = 1. Each element carries a
// rational interval enclosure and, optionally, a defining polynomial
// (rational coefficients, low degree first) with a single sign change on
// the enclosure, which lets sign queries tighten the interval on demand.
class RealBasis {
 public:
  struct Element {
    std::string name;
    Rat lo, hi;
    std::vector<Rat> poly;  // empty: enclosure cannot be refined
  };

  explicit RealBasis(std::vector<Element> elems);
  int size() const { return static_cast<int>(elems_.size()); }
  const Element& element(int k) const { return elems_[k]; }
  const std::vector<Element>& elements() const { return elems_; }

 private:
  std::vector<Element> elems_;
};

using RealBasisPtr = std::shared_ptr<const RealBasis>;

// Exact representative of a real number as a rational combination
// c_0 + c_1 beta_1 + ... + c_s beta_s over a declared basis. A value with
// only the c_0 coordinate is an exact rational and needs no basis.
class FormalReal {
 public:
  FormalReal() : coeffs_{Rat(0)} {}
  FormalReal(Rat r) : coeffs_{std::move(r)} {}       // NOLINT(google-explicit-constructor)
  FormalReal(int r) : coeffs_{Rat(r)} {}             // NOLINT(google-explicit-constructor)
  FormalReal(RealBasisPtr basis, std::vector<Rat> coeffs);

  const RealBasisPtr& basis() const { return basis_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;  // only the beta_0 coordinate is nonzero
  Rat rational_part() const { return coeffs_[0]; }

  // Exact by the Q-independence axiom when the coefficients vanish;
  // otherwise decided by interval arithmetic over the enclosures.
  // Throws IndeterminateSign when the enclosures cannot separate the value
  // from zero within the configured depth.
  int sign() const;

  FormalReal operator+(const FormalReal& o) const;
  FormalReal operator-(const FormalReal& o) const;
  FormalReal operator-() const;
  FormalReal operator*(const Rat& s) const;
  FormalReal& operator+=(const FormalReal& o) { return *this = *this + o; }
  FormalReal& operator-=(const FormalReal& o) { return *this = *this - o; }
  bool operator==(const FormalReal& o) const { return (*this - o).is_zero(); }

  std::string str() const;

 private:
  RealBasisPtr basis_;        // null when rational-only
  std::vector<Rat> coeffs_;   // size basis->size() + 1 (or 1 when rational)
};

using FRVec = std::vector<FormalReal>;
using FRMat = std::vector<FRVec>;

FormalReal dot(const ZVec& m, const FRVec& v);
FormalReal dot(const QVec& m, const FRVec& v);

// Sign of the first nonzero entry; 0 when the whole tuple vanishes.
int lex_sign(const FRVec& tuple);

FRVec fr_vec(const QVec& v);
FRVec fr_vec(const ZVec& v);

// Expand a tuple of FormalReals over a common basis into a flat rational
// vector of length tuple.size() * (s + 1). Tuples mixing distinct declared
// bases are rejected.
QVec expand_coeffs(const FRVec& tuple, int s);

// Largest declared-basis size appearing in the matrix (0 when all entries
// are rational).
int common_basis_size(const FRMat& m);

}  // namespace tropk
