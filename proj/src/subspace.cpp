#include "tropk/subspace.hpp"

#include "tropk/error.hpp"

#include <algorithm>

namespace tropk {

QSubspace QSubspace::span(int ambient, QMat vecs) {
  for (const QVec& v : vecs)
    if (v.size() != static_cast<size_t>(ambient))
      throw Error(ErrorKind::InvalidInput, "vector length != ambient dimension");
  QSubspace s(ambient);
  s.pivots_ = rref(vecs);
  s.basis_ = std::move(vecs);
  return s;
}

QSubspace QSubspace::span(int ambient, const ZMat& vecs) {
  return span(ambient, to_qmat(vecs));
}

QSubspace QSubspace::full(int ambient) {
  QMat id(ambient, QVec(ambient));
  for (int i = 0; i < ambient; ++i) id[i][i] = 1;
  return span(ambient, std::move(id));
}

bool QSubspace::contains(const QVec& v) const { return is_zero(reduce(v)); }

bool QSubspace::contains(const QSubspace& other) const {
  for (const QVec& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

QVec QSubspace::reduce(QVec v) const {
  for (size_t r = 0; r < basis_.size(); ++r) {
    const Rat& c = v[pivots_[r]];
    if (c == 0) continue;
    Rat f = c;  // basis rows have unit pivots
    for (size_t j = 0; j < v.size(); ++j) v[j] -= f * basis_[r][j];
  }
  return v;
}

QSubspace sum(const QSubspace& a, const QSubspace& b) {
  if (a.ambient() != b.ambient())
    throw Error(ErrorKind::InvalidInput, "ambient dimension mismatch");
  QMat all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return QSubspace::span(a.ambient(), std::move(all));
}

QSubspace annihilator(const QSubspace& a) {
  return QSubspace::span(a.ambient(), right_kernel(a.basis(), a.ambient()));
}

QSubspace intersection(const QSubspace& a, const QSubspace& b) {
  if (a.ambient() != b.ambient())
    throw Error(ErrorKind::InvalidInput, "ambient dimension mismatch");
  return annihilator(sum(annihilator(a), annihilator(b)));
}

std::vector<std::vector<int>> wedge_indices(int n, int p) {
  std::vector<std::vector<int>> out;
  if (p < 0 || p > n) return out;
  std::vector<int> idx(p);
  for (int i = 0; i < p; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    int i = p - 1;
    while (i >= 0 && idx[i] == n - p + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  if (p == 0) out.assign(1, {});
  return out;
}

Int binomial(int n, int p) {
  if (p < 0 || p > n) return 0;
  Int r = 1;
  for (int i = 0; i < p; ++i) { r *= n - i; r /= i + 1; }
  return r;
}

int wedge_pos(int n, const std::vector<int>& idx) {
  // Combinatorial rank in lexicographic order.
  int p = static_cast<int>(idx.size());
  Int rank = 0;
  int prev = -1;
  for (int i = 0; i < p; ++i) {
    for (int v = prev + 1; v < idx[i]; ++v) rank += binomial(n - v - 1, p - i - 1);
    prev = idx[i];
  }
  return static_cast<int>(rank);
}

static Rat det_of(QMat m) {
  Rat det = 1;
  size_t n = m.size();
  for (size_t c = 0; c < n; ++c) {
    size_t sel = c;
    while (sel < n && m[sel][c] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) { std::swap(m[sel], m[c]); det = -det; }
    det *= m[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

QVec wedge_of_rows(const QMat& rows, int n) {
  int p = static_cast<int>(rows.size());
  auto idxs = wedge_indices(n, p);
  QVec out(idxs.size());
  for (size_t k = 0; k < idxs.size(); ++k) {
    QMat minor(p, QVec(p));
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) minor[i][j] = rows[i][idxs[k][j]];
    out[k] = det_of(std::move(minor));
  }
  return out;
}

QMat wedge_matrix(const QMat& a, int cols, int p) {
  int rows = static_cast<int>(a.size());
  auto row_idx = wedge_indices(rows, p);
  auto col_idx = wedge_indices(cols, p);
  QMat out(row_idx.size(), QVec(col_idx.size()));
  for (size_t r = 0; r < row_idx.size(); ++r)
    for (size_t c = 0; c < col_idx.size(); ++c) {
      QMat minor(p, QVec(p));
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) minor[i][j] = a[row_idx[r][i]][col_idx[c][j]];
      out[r][c] = det_of(std::move(minor));
    }
  return out;
}

QSubspace wedge_power(const QSubspace& s, int p) {
  if (p < 0) throw Error(ErrorKind::InvalidInput, "negative wedge power");
  int n = s.ambient();
  int amb = static_cast<int>(binomial(n, p));
  if (p > s.dim()) return QSubspace(amb);
  QMat gens;
  for (const auto& pick : wedge_indices(s.dim(), p)) {
    QMat rows;
    for (int i : pick) rows.push_back(s.basis()[i]);
    gens.push_back(wedge_of_rows(rows, n));
  }
  return QSubspace::span(amb, std::move(gens));
}

}  // namespace tropk
