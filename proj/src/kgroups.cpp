#include "tropk/kgroups.hpp"

#include "tropk/error.hpp"

namespace tropk {

FpSpaces f_spaces(const Fan& lambda, int p) {
  if (p < 0) throw Error(ErrorKind::InvalidInput, "negative wedge degree");
  int n = lambda.rank();
  int ambient = static_cast<int>(binomial(n, p));
  FpSpaces out;
  out.rank = n;
  out.p = p;
  out.lower = QSubspace(ambient);
  for (const Cone& c : lambda.maximal_cones())
    out.lower = sum(out.lower, wedge_power(c.span(), p));
  out.kernel = annihilator(out.lower);
  return out;
}

bool flag_kernel_check(const Fan& lambda, int p) {
  FpSpaces fp = f_spaces(lambda, p);
  int n = lambda.rank();
  int ambient = static_cast<int>(binomial(n, p));
  QSubspace joint = QSubspace::full(ambient);
  for (const Cone& c : lambda.maximal_cones()) {
    // wedge^p of the pairing with a basis of Span(c): its kernel is exactly
    // the classes killed by every maximal flag living on c
    QMat w = wedge_matrix(c.span().basis(), n, p);
    joint = intersection(joint, QSubspace::span(ambient, right_kernel(w, ambient)));
  }
  return fp.kernel == joint;
}

QVec pullback(const MonomialMap& psi, const Fan& source, const Fan& target,
              int p, const QVec& cls) {
  Fan image = image_support(psi, source);
  if (!support_predicates(image, target).equal)
    throw Error(ErrorKind::SupportMismatch,
                "image of the source support is not the target support");
  if (cls.size() != static_cast<size_t>(binomial(psi.target_rank, p)))
    throw Error(ErrorKind::InvalidInput, "class length != wedge dimension");
  // dual lattice map M_target -> M_source is the transpose
  QMat dual = to_qmat(transpose(psi.matrix));
  QMat w = wedge_matrix(dual, psi.target_rank, p);
  return f_spaces(source, p).reduce(mat_vec(w, cls));
}

ZVec dual_unit(const ZVec& u) {
  SmithResult s = smith_normal_form(ZMat{u});
  if (s.d.empty() || abs(s.d[0][0]) != 1)
    throw Error(ErrorKind::InvalidInput, "vector is not primitive");
  // u A V = D with A the single row u: u . (first column of V) = +-1
  ZVec x(u.size());
  Int scale = s.u[0][0] * s.d[0][0];  // both are +-1
  for (size_t i = 0; i < u.size(); ++i) x[i] = s.v[i][0] * scale;
  return x;
}

QVec residue_contract(const Fan& f, const Cone& tau, const Cone& sigma, int q,
                      const QVec& omega, const ZVec& m_pi) {
  if (q < 1) throw Error(ErrorKind::InvalidInput, "wedge degree must be >= 1");
  Stratum st_tau = stratum_projection(f, tau);
  Stratum st_sigma = stratum_projection(f, sigma);
  int k = st_tau.rank();
  if (sigma.dim() != tau.dim() + 1 || !sigma.contains(tau))
    throw Error(ErrorKind::NotAFacePair, "need a codimension-one face pair");
  if (omega.size() != static_cast<size_t>(binomial(k, q)))
    throw Error(ErrorKind::InvalidInput, "omega length != wedge dimension");
  if (m_pi.size() != static_cast<size_t>(k))
    throw Error(ErrorKind::InvalidInput, "uniformizer length != stratum rank");
  Cone sigma_bar = map_cone(st_tau.projection(), sigma, k);
  if (sigma_bar.dim() != 1)
    throw Error(ErrorKind::NotAFacePair, "image of sigma is not a ray");
  const ZVec& u = sigma_bar.rays()[0];
  if (dot(m_pi, u) != 1)
    throw Error(ErrorKind::InvalidUniformizer,
                "uniformizer does not pair to one with the ray");

  // contraction iota_u
  auto idx_q = wedge_indices(k, q);
  auto idx_q1 = wedge_indices(k, q - 1);
  QVec contracted(idx_q1.size(), Rat(0));
  for (size_t pos = 0; pos < idx_q.size(); ++pos) {
    const auto& I = idx_q[pos];
    for (int t = 0; t < q; ++t) {
      std::vector<int> J;
      for (int s = 0; s < q; ++s)
        if (s != t) J.push_back(I[s]);
      Rat term = omega[pos] * Rat(u[I[t]]);
      if (t % 2 == 1) term = -term;
      contracted[wedge_pos(k, J)] += term;
    }
  }

  // projection m -> m - <m, u> m_pi lands in the sigma-stratum covectors
  QMat proj(k, QVec(k, Rat(0)));
  for (int i = 0; i < k; ++i) {
    proj[i][i] = Rat(1);
    for (int j = 0; j < k; ++j) proj[i][j] -= Rat(m_pi[i] * u[j]);
  }
  QVec w = mat_vec(wedge_matrix(proj, k, q - 1), contracted);
  if (q == 1) return w;  // wedge^0 is canonically scalars on both sides

  // rewrite over the sigma-stratum basis, expressed in tau coordinates
  QMat c_rows;
  for (const ZVec& row : st_sigma.basis) {
    QVec coords = solve_left(to_qmat(st_tau.basis), to_qvec(row));
    if (coords.empty() && k > 0)
      throw Error(ErrorKind::Mismatch, "stratum bases are not nested");
    c_rows.push_back(std::move(coords));
  }
  int l = st_sigma.rank();
  QMat embed = wedge_matrix(transpose(c_rows), l, q - 1);
  QVec x = solve_left(transpose(embed), w);
  if (x.empty() && !is_zero(w))
    throw Error(ErrorKind::Mismatch,
                "residue does not lie on the boundary stratum");
  if (x.empty()) x.assign(binomial(l, q - 1).convert_to<size_t>(), Rat(0));
  return x;
}

namespace {

// Inverse of the transpose of the sublattice basis: ambient coordinates to
// sublattice coordinates.
QMat coordinate_change(const ZMat& sublattice, int n) {
  QMat cols;
  for (int j = 0; j < n; ++j) {
    QVec e(n, Rat(0));
    e[j] = Rat(1);
    QVec col = solve_left(to_qmat(sublattice), e);
    if (col.empty())
      throw Error(ErrorKind::InfiniteIndex,
                  "sublattice does not have finite index");
    cols.push_back(std::move(col));
  }
  return transpose(cols);
}

}  // namespace

QVec k_restriction(const ZMat& sublattice, int p, const QVec& cls) {
  int n = sublattice.empty() ? 0 : static_cast<int>(sublattice[0].size());
  if (sublattice.size() != static_cast<size_t>(n))
    throw Error(ErrorKind::InfiniteIndex,
                "sublattice does not have finite index");
  QMat t = coordinate_change(sublattice, n);
  return mat_vec(wedge_matrix(t, n, p), cls);
}

QVec monomial_transfer(const ZMat& sublattice, int p, const QVec& cls) {
  int n = sublattice.empty() ? 0 : static_cast<int>(sublattice[0].size());
  if (sublattice.size() != static_cast<size_t>(n))
    throw Error(ErrorKind::InfiniteIndex,
                "sublattice does not have finite index");
  Int index = lattice_index(sublattice, n);
  QMat incl = to_qmat(transpose(sublattice));
  QVec out = mat_vec(wedge_matrix(incl, n, p), cls);
  for (Rat& x : out) x *= Rat(index);
  return out;
}

}  // namespace tropk
