#pragma once

#include "tropk/rational.hpp"

namespace tropk {

QMat transpose(const QMat& m);
ZMat transpose(const ZMat& m);
QMat mat_mul(const QMat& a, const QMat& b);
ZMat mat_mul(const ZMat& a, const ZMat& b);
QVec mat_vec(const QMat& a, const QVec& x);
ZVec mat_vec(const ZMat& a, const ZVec& x);
Rat dot(const QVec& a, const QVec& b);
Int dot(const ZVec& a, const ZVec& b);
bool is_zero(const QVec& v);
bool is_zero(const ZVec& v);

// In-place reduced row echelon form; returns the pivot columns.
// Zero rows are removed.
std::vector<int> rref(QMat& m);

int rank_of(QMat m);

// Row basis (rref) of the right kernel {x : m x = 0}; `cols` is the width
// of m (needed when m has no rows).
QMat right_kernel(const QMat& m, int cols);

// Solve x A = b for a single row vector x, where the rows of A are
// independent and b lies in their span. Returns empty vector if unsolvable.
QVec solve_left(const QMat& a, const QVec& b);

// Scale a nonzero rational vector by a positive rational so its entries are
// coprime integers. Sign is preserved.
ZVec primitive(const QVec& v);
ZVec primitive(const ZVec& v);

struct SmithResult {
  ZMat u, d, v;  // u a v = d, u and v unimodular, d diagonal with d1 | d2 | ...
};
SmithResult smith_normal_form(const ZMat& a);

// Basis of the saturated lattice {x in Z^cols : m x = 0}.
ZMat integer_kernel(const ZMat& m, int cols);
ZMat integer_kernel(const QMat& m, int cols);

// Index [Z^n : lattice spanned by the rows], via Smith normal form.
// Throws InfiniteIndex when the rows do not span a finite-index sublattice.
Int lattice_index(const ZMat& rows, int n);

}  // namespace tropk
