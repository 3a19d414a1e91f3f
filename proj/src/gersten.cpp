#include "tropk/gersten.hpp"

#include "tropk/error.hpp"

namespace tropk {

ToricGerstenComplex build_complex(const Fan& f, int p) {
  if (p < 0) throw Error(ErrorKind::InvalidInput, "negative weight");
  int n = f.rank();
  ToricGerstenComplex out;
  out.rank = n;
  out.p = p;
  out.cone_indices.assign(p + 1, {});
  for (size_t idx = 0; idx < f.cones().size(); ++idx) {
    int d = f.cones()[idx].dim();
    if (d <= p) out.cone_indices[d].push_back(static_cast<int>(idx));
  }
  for (int i = 0; i <= p; ++i) {
    int block = static_cast<int>(binomial(n - i, p - i));
    out.term_dims.push_back(block *
                            static_cast<int>(out.cone_indices[i].size()));
  }
  for (int i = 0; i < p; ++i) {
    int rows = out.term_dims[i + 1], cols = out.term_dims[i];
    QMat d(rows, QVec(cols, Rat(0)));
    int cblock = static_cast<int>(binomial(n - i, p - i));
    int rblock = static_cast<int>(binomial(n - i - 1, p - i - 1));
    for (size_t cj = 0; cj < out.cone_indices[i].size(); ++cj) {
      const Cone& sigma = f.cones()[out.cone_indices[i][cj]];
      Stratum st = stratum_projection(f, sigma);
      for (size_t rj = 0; rj < out.cone_indices[i + 1].size(); ++rj) {
        const Cone& tau = f.cones()[out.cone_indices[i + 1][rj]];
        if (!tau.contains(sigma)) continue;
        Cone image = map_cone(st.projection(), tau, st.rank());
        ZVec m_pi = dual_unit(image.rays()[0]);
        for (int b = 0; b < cblock; ++b) {
          QVec e(cblock, Rat(0));
          e[b] = Rat(1);
          QVec col = residue_contract(f, sigma, tau, p - i, e, m_pi);
          for (int r = 0; r < rblock; ++r)
            d[rj * rblock + r][cj * cblock + b] = col[r];
        }
      }
    }
    out.differentials.push_back(std::move(d));
  }
  return out;
}

std::vector<int> cohomology_dims(const ToricGerstenComplex& c) {
  for (size_t i = 0; i + 1 < c.differentials.size(); ++i) {
    QMat square = mat_mul(c.differentials[i + 1], c.differentials[i]);
    for (const QVec& row : square)
      if (!is_zero(row))
        throw Error(ErrorKind::DifferentialNotSquareZero,
                    "consecutive residues do not compose to zero");
  }
  std::vector<int> ranks;
  for (const QMat& d : c.differentials) ranks.push_back(rank_of(d));
  std::vector<int> h;
  for (int i = 0; i <= c.p; ++i) {
    int out = i < c.p ? ranks[i] : 0;
    int in = i > 0 ? ranks[i - 1] : 0;
    h.push_back(c.term_dims[i] - out - in);
  }
  return h;
}

namespace {

// The oracle keeps its own elimination, so a defect in the shared linear
// algebra cannot cancel on both sides of the comparison.
int oracle_rank(QMat m) {
  int rank = 0;
  size_t cols = m.empty() ? 0 : m[0].size();
  for (size_t col = 0; col < cols; ++col) {
    size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<size_t>(rank) || m[r][col] == 0) continue;
      Rat factor = m[r][col] / m[rank][col];
      for (size_t cc = col; cc < cols; ++cc) m[r][cc] -= factor * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

// Orbit-relation presentation of the codimension-p rational Chow group:
// one generator per dimension-p cone, one relation per dimension-(p-1)
// cone and dual covector, with coefficients the primitive images of the
// bigger cones.
int presentation_dim(const Fan& f, int p) {
  std::vector<int> gens;
  for (size_t i = 0; i < f.cones().size(); ++i)
    if (f.cones()[i].dim() == p) gens.push_back(static_cast<int>(i));
  QMat relations;
  for (const Cone& tau : f.cones()) {
    if (tau.dim() != p - 1) continue;
    Stratum st = stratum_projection(f, tau);
    QMat block(st.rank(), QVec(gens.size(), Rat(0)));
    for (size_t g = 0; g < gens.size(); ++g) {
      const Cone& sigma = f.cones()[gens[g]];
      if (!sigma.contains(tau)) continue;
      Cone image = map_cone(st.projection(), sigma, st.rank());
      const ZVec& u = image.rays()[0];
      for (int j = 0; j < st.rank(); ++j) block[j][g] = Rat(u[j]);
    }
    for (QVec& row : block) relations.push_back(std::move(row));
  }
  return static_cast<int>(gens.size()) - oracle_rank(std::move(relations));
}

}  // namespace

int chow_oracle(const Fan& f, int p) {
  if (!is_complete(f))
    throw Error(ErrorKind::NotComplete,
                "the oracle only covers complete fans");
  if (p < 0 || p > f.rank())
    throw Error(ErrorKind::InvalidInput, "codimension out of range");
  if (p == 0) return 1;
  if (p == f.rank()) return 1;  // degree map
  if (p == 1) {
    int rays = 0;
    for (const Cone& c : f.cones())
      if (c.dim() == 1) ++rays;
    return rays - f.rank();
  }
  return presentation_dim(f, p);
}

GerstenComparison compare_with_oracle(const Fan& f, int p, bool strict) {
  GerstenComparison out;
  out.h = cohomology_dims(build_complex(f, p));
  out.top_cokernel = out.h.back();
  out.oracle = chow_oracle(f, p);
  out.match = out.top_cokernel == out.oracle;
  if (strict && !out.match)
    throw Error(ErrorKind::Mismatch,
                "complex cokernel disagrees with the oracle");
  return out;
}

}  // namespace tropk
