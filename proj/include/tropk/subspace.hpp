#pragma once

#include "tropk/linalg.hpp"

namespace tropk {

// A subspace of Q^n held in reduced echelon form, so equality of subspaces
// is equality of representations.
class QSubspace {
 public:
  explicit QSubspace(int ambient) : ambient_(ambient) {}
  static QSubspace span(int ambient, QMat vecs);
  static QSubspace span(int ambient, const ZMat& vecs);
  static QSubspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const QMat& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const QVec& v) const;
  bool contains(const QSubspace& other) const;
  bool operator==(const QSubspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

  // Canonical representative of v modulo the subspace (pivot coordinates
  // eliminated).
  QVec reduce(QVec v) const;

 private:
  int ambient_;
  QMat basis_;
  std::vector<int> pivots_;
};

QSubspace sum(const QSubspace& a, const QSubspace& b);
QSubspace intersection(const QSubspace& a, const QSubspace& b);
// Annihilator w.r.t. the standard pairing of Q^n with its dual.
QSubspace annihilator(const QSubspace& a);

// --- exterior powers ------------------------------------------------------

// Strictly increasing p-tuples of indices below n, in lexicographic order;
// the coordinate system for wedge^p Q^n.
std::vector<std::vector<int>> wedge_indices(int n, int p);
int wedge_pos(int n, const std::vector<int>& idx);
Int binomial(int n, int p);

// Coordinates of row_1 ^ ... ^ row_p in wedge^p Q^n (p x p minors).
QVec wedge_of_rows(const QMat& rows, int n);

// Matrix of wedge^p A : wedge^p Q^cols -> wedge^p Q^rows for A acting as
// x -> A x.
QMat wedge_matrix(const QMat& a, int cols, int p);

// Span of all p-fold wedges of basis vectors of S, inside wedge^p Q^n.
// p > dim S gives the zero subspace; p = 0 gives the full 1-dim wedge^0.
QSubspace wedge_power(const QSubspace& s, int p);

}  // namespace tropk
