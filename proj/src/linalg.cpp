#include "tropk/linalg.hpp"

#include "tropk/error.hpp"

#include <algorithm>
#include <numeric>

namespace tropk {

std::string rat_to_string(const Rat& x) {
  Int n = numerator(x), d = denominator(x);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash)), d(s.substr(slash + 1));
    if (d == 0) throw Error(ErrorKind::InvalidInput, "zero denominator: " + s);
    return Rat(n) / Rat(d);  // two-arg ctor rejects negative denominators
  } catch (const std::exception& e) {
    throw Error(ErrorKind::InvalidInput, "bad rational '" + s + "'");
  }
}

QVec to_qvec(const ZVec& v) {
  QVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

QMat to_qmat(const ZMat& m) {
  QMat out;
  out.reserve(m.size());
  for (auto& r : m) out.push_back(to_qvec(r));
  return out;
}

QMat transpose(const QMat& m) {
  if (m.empty()) return {};
  QMat out(m[0].size(), QVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  return out;
}

ZMat transpose(const ZMat& m) {
  if (m.empty()) return {};
  ZMat out(m[0].size(), ZVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  return out;
}

template <typename M>
static M mat_mul_impl(const M& a, const M& b) {
  if (a.empty() || b.empty()) return {};
  M out(a.size(), typename M::value_type(b[0].size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

QMat mat_mul(const QMat& a, const QMat& b) { return mat_mul_impl(a, b); }
ZMat mat_mul(const ZMat& a, const ZMat& b) { return mat_mul_impl(a, b); }

QVec mat_vec(const QMat& a, const QVec& x) {
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = dot(a[i], x);
  return out;
}

ZVec mat_vec(const ZMat& a, const ZVec& x) {
  ZVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = dot(a[i], x);
  return out;
}

Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int dot(const ZVec& a, const ZVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

bool is_zero(const ZVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t cols = m[0].size(), row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rat inv = m[row][col];
    for (auto& x : m[row]) x /= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(row);
  return pivots;
}

int rank_of(QMat m) { return static_cast<int>(rref(m).size()); }

QMat right_kernel(const QMat& m, int cols) {
  QMat e = m;
  std::vector<int> pivots = rref(e);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  QMat ker;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(cols);
    v[free] = 1;
    for (size_t r = 0; r < e.size(); ++r) v[pivots[r]] = -e[r][free];
    ker.push_back(std::move(v));
  }
  rref(ker);
  return ker;
}

QVec solve_left(const QMat& a, const QVec& b) {
  if (a.empty()) return is_zero(b) ? QVec{} : QVec{};
  size_t n = a[0].size();
  // Augmented system on the transpose: A^T x^T = b^T.
  QMat aug(n, QVec(a.size() + 1));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < n; ++j) aug[j][i] = a[i][j];
  for (size_t j = 0; j < n; ++j) aug[j][a.size()] = b[j];
  std::vector<int> pivots = rref(aug);
  QVec x(a.size());
  for (size_t r = 0; r < aug.size(); ++r) {
    if (pivots[r] == static_cast<int>(a.size())) return {};  // inconsistent
    x[pivots[r]] = aug[r][a.size()];
  }
  return x;
}

ZVec primitive(const QVec& v) {
  Int num_gcd = 0, den_lcm = 1;
  for (const Rat& x : v) {
    num_gcd = gcd(num_gcd, numerator(x));
    den_lcm = lcm(den_lcm, denominator(x));
  }
  if (num_gcd == 0) throw Error(ErrorKind::InvalidInput, "primitive of zero vector");
  ZVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * Rat(den_lcm, num_gcd);
    out[i] = numerator(scaled);  // denominator is 1 by construction
  }
  return out;
}

ZVec primitive(const ZVec& v) { return primitive(to_qvec(v)); }

SmithResult smith_normal_form(const ZMat& a) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  SmithResult r;
  r.d = a;
  r.u.assign(rows, ZVec(rows));
  r.v.assign(cols, ZVec(cols));
  for (size_t i = 0; i < rows; ++i) r.u[i][i] = 1;
  for (size_t i = 0; i < cols; ++i) r.v[i][i] = 1;
  ZMat& d = r.d;

  auto row_op = [&](size_t i, size_t j, const Int& f) {  // row i -= f * row j
    for (size_t k = 0; k < cols; ++k) d[i][k] -= f * d[j][k];
    for (size_t k = 0; k < rows; ++k) r.u[i][k] -= f * r.u[j][k];
  };
  auto col_op = [&](size_t i, size_t j, const Int& f) {  // col i -= f * col j
    for (size_t k = 0; k < rows; ++k) d[k][i] -= f * d[k][j];
    for (size_t k = 0; k < cols; ++k) r.v[k][i] -= f * r.v[k][j];
  };
  auto row_swap = [&](size_t i, size_t j) {
    std::swap(d[i], d[j]);
    std::swap(r.u[i], r.u[j]);
  };
  auto col_swap = [&](size_t i, size_t j) {
    for (size_t k = 0; k < rows; ++k) std::swap(d[k][i], d[k][j]);
    for (size_t k = 0; k < cols; ++k) std::swap(r.v[k][i], r.v[k][j]);
  };
  auto row_neg = [&](size_t i) {
    for (auto& x : d[i]) x = -x;
    for (auto& x : r.u[i]) x = -x;
  };

  size_t t = 0;
  while (t < rows && t < cols) {
    // Move a minimal nonzero entry of the trailing submatrix into (t, t).
    size_t pi = 0, pj = 0;
    bool found = false;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        if (d[i][j] == 0) continue;
        if (!found || abs(d[i][j]) < abs(d[pi][pj])) { pi = i; pj = j; }
        found = true;
      }
    if (!found) break;
    row_swap(t, pi);
    col_swap(t, pj);

    bool again = false;
    // Euclidean reduction of column t and row t against the pivot.
    for (size_t i = t + 1; i < rows; ++i) {
      if (d[i][t] == 0) continue;
      row_op(i, t, d[i][t] / d[t][t]);
      if (d[i][t] != 0) again = true;  // remainder survives; re-pick pivot
    }
    for (size_t j = t + 1; j < cols; ++j) {
      if (d[t][j] == 0) continue;
      col_op(j, t, d[t][j] / d[t][t]);
      if (d[t][j] != 0) again = true;
    }
    if (again) continue;
    // Pivot divides everything below-right, or we fold an offending row in
    // and restart this step. Pivot magnitude strictly decreases, so this
    // terminates.
    bool divides = true;
    for (size_t i = t + 1; i < rows && divides; ++i)
      for (size_t j = t + 1; j < cols && divides; ++j)
        if (d[i][j] % d[t][t] != 0) {
          row_op(t, i, Int(-1));  // row t += row i
          divides = false;
        }
    if (!divides) continue;
    if (d[t][t] < 0) row_neg(t);
    ++t;
  }
  return r;
}

ZMat integer_kernel(const ZMat& m, int cols) {
  if (m.empty()) {
    ZMat id(cols, ZVec(cols));
    for (int i = 0; i < cols; ++i) id[i][i] = 1;
    return id;
  }
  // Columns of V beyond rank(D) span the kernel lattice (saturated since V
  // is unimodular).
  SmithResult s = smith_normal_form(m);
  int rk = 0;
  for (size_t i = 0; i < s.d.size() && i < s.d[i].size(); ++i)
    if (s.d[i][i] != 0) ++rk;
  ZMat vt = transpose(s.v);
  ZMat out(vt.begin() + rk, vt.end());
  return out;
}

ZMat integer_kernel(const QMat& m, int cols) {
  ZMat zm;
  zm.reserve(m.size());
  for (const QVec& row : m) {
    Int den = 1;
    for (const Rat& x : row) den = lcm(den, denominator(x));
    ZVec zr(row.size());
    for (size_t j = 0; j < row.size(); ++j) zr[j] = numerator(row[j] * Rat(den));
    zm.push_back(std::move(zr));
  }
  return integer_kernel(zm, cols);
}

Int lattice_index(const ZMat& rows, int n) {
  SmithResult s = smith_normal_form(rows);
  Int idx = 1;
  for (int i = 0; i < n; ++i) {
    if (static_cast<size_t>(i) >= s.d.size() ||
        static_cast<size_t>(i) >= s.d[i].size() || s.d[i][i] == 0)
      throw Error(ErrorKind::InfiniteIndex, "sublattice has infinite index");
    idx *= s.d[i][i];
  }
  return idx;
}

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotStronglyConvex: return "NotStronglyConvex";
    case ErrorKind::RayOutsideSupport: return "RayOutsideSupport";
    case ErrorKind::OutsideSupport: return "OutsideSupport";
    case ErrorKind::IndeterminateSign: return "IndeterminateSign";
    case ErrorKind::ConeNotInFan: return "ConeNotInFan";
    case ErrorKind::NotAFacePair: return "NotAFacePair";
    case ErrorKind::InvalidFunctional: return "InvalidFunctional";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::ConditionFails: return "ConditionFails";
    case ErrorKind::LevelsNotOnResidueLattice: return "LevelsNotOnResidueLattice";
    case ErrorKind::NoCenter: return "NoCenter";
    case ErrorKind::SupportMismatch: return "SupportMismatch";
    case ErrorKind::InvalidUniformizer: return "InvalidUniformizer";
    case ErrorKind::UnsplitFactor: return "UnsplitFactor";
    case ErrorKind::UnsupportedEntry: return "UnsupportedEntry";
    case ErrorKind::InfiniteIndex: return "InfiniteIndex";
    case ErrorKind::DifferentialNotSquareZero: return "DifferentialNotSquareZero";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::Mismatch: return "Mismatch";
  }
  return "Unknown";
}

}  // namespace tropk
