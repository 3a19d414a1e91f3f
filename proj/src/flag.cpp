#include "tropk/flag.hpp"

#include "tropk/error.hpp"

namespace tropk {

namespace {

// Coefficient vectors of one level: row k holds the rational vector
// multiplying beta_k, k = 0..s.
QMat coefficient_layers(const FRVec& level, int rank, int s) {
  QMat layers(s + 1, QVec(rank, Rat(0)));
  for (int j = 0; j < rank; ++j) {
    const auto& c = level[j].coeffs();
    for (size_t k = 0; k < c.size(); ++k) layers[k][j] = c[k];
  }
  return layers;
}

ResidualDecomposition::Level decompose_level(const FRVec& level, int rank,
                                             int s) {
  QMat layers = coefficient_layers(level, rank, s);
  QMat basis = layers;
  std::vector<int> pivots = rref(basis);
  ResidualDecomposition::Level out;
  out.components = basis;
  // coefficient of component j: sum over k of beta_k * (coordinate of
  // layer k along component j); coordinates via the pivot columns
  for (size_t j = 0; j < basis.size(); ++j) {
    std::vector<Rat> coeff(s + 1, Rat(0));
    for (int k = 0; k <= s; ++k) {
      // solve layer_k = sum_j t_{kj} basis_j: with rref basis, t_{kj} is the
      // pivot-column entry of layer_k
      coeff[k] = layers[k][pivots[j]];
    }
    // a rational-only coefficient stays basis-free
    bool pure_rational = true;
    for (int k = 1; k <= s; ++k) pure_rational = pure_rational && coeff[k] == 0;
    if (pure_rational) {
      out.coefficients.emplace_back(coeff[0]);
    } else {
      RealBasisPtr rb;
      for (const FormalReal& x : level)
        if (x.basis()) { rb = x.basis(); break; }
      coeff.resize(rb->size() + 1);
      out.coefficients.emplace_back(rb, std::move(coeff));
    }
  }
  return out;
}

}  // namespace

ResidualDecomposition residual_decomposition(const Flag& x) {
  int s = common_basis_size(x.levels);
  ResidualDecomposition out;
  for (const FRVec& level : x.levels)
    out.levels.push_back(decompose_level(level, x.rank, s));
  return out;
}

Flag canonicalize(const Flag& x) {
  int s = common_basis_size(x.levels);
  Flag out;
  out.rank = x.rank;
  QSubspace accumulated(x.rank);
  for (const FRVec& level : x.levels) {
    // residual representative: eliminate the pivot coordinates of the
    // accumulated rational span
    FRVec res = level;
    for (size_t r = 0; r < accumulated.basis().size(); ++r) {
      int p = accumulated.pivots()[r];
      FormalReal c = res[p];
      if (c.is_zero()) continue;
      for (int j = 0; j < x.rank; ++j)
        res[j] -= c * accumulated.basis()[r][j];
    }
    bool zero = true;
    for (const FormalReal& v : res) zero = zero && v.is_zero();
    if (zero) continue;

    auto dec = decompose_level(res, x.rank, s);
    // positive normalization: rational residuals become primitive integer
    // vectors; otherwise divide by the content of the coefficient vector of
    // the first nonzero coordinate (keeps the sign either way)
    bool rational = true;
    for (const FormalReal& v : res) rational = rational && v.is_rational();
    if (rational) {
      QVec q(x.rank);
      for (int j = 0; j < x.rank; ++j) q[j] = res[j].rational_part();
      res = fr_vec(primitive(q));
    } else {
      int first = 0;
      while (res[first].is_zero()) ++first;
      ZVec prim = primitive(res[first].coeffs());
      Rat scale;  // content^{-1}, positive
      for (size_t k = 0; k < res[first].coeffs().size(); ++k)
        if (res[first].coeffs()[k] != 0) {
          scale = Rat(prim[k]) / res[first].coeffs()[k];
          break;
        }
      for (FormalReal& v : res) v = v * scale;
    }
    out.levels.push_back(std::move(res));
    for (const QVec& comp : dec.components)
      accumulated = sum(accumulated, QSubspace::span(x.rank, QMat{comp}));
  }
  return out;
}

QSubspace residual_span(const Flag& x) {
  QSubspace span(x.rank);
  for (const auto& level : residual_decomposition(x).levels)
    for (const QVec& comp : level.components)
      span = sum(span, QSubspace::span(x.rank, QMat{comp}));
  return span;
}

const Cone& limit_point(const Fan& f, const Flag& x) {
  return locate_lex(f, x.lex_point());
}

const CompactifiedCone& limit_point(const Fan& f,
                                    const std::vector<CompactifiedCone>& cones,
                                    const Flag& x) {
  int dense = f.index_of(Cone::zero(f.rank()));
  LexPoint p = x.lex_point();
  for (const CompactifiedCone& c : cones)
    if (c.sigma_index == dense && c.carrier.relint_contains_lex(p)) return c;
  throw Error(ErrorKind::OutsideSupport,
              "perturbed point lies outside the compactified support");
}

int flag_height(const Flag& x) {
  return static_cast<int>(canonicalize(x).levels.size());
}

SpanStabilization span_stabilization(const Flag& x,
                                     const std::vector<Fan>& tower) {
  if (tower.empty()) throw Error(ErrorKind::InvalidInput, "empty tower");
  Flag c = canonicalize(x);
  QSubspace target = residual_span(c);
  SpanStabilization out{QSubspace(x.rank), -1};
  for (size_t i = 0; i < tower.size(); ++i) {
    out.span = limit_point(tower[i], c).span();
    if (out.stable_index < 0 && out.span == target)
      out.stable_index = static_cast<int>(i);
  }
  return out;
}

Flag ht1_compare(int rank, const FRVec& direction) {
  bool zero = true;
  for (const FormalReal& v : direction) zero = zero && v.is_zero();
  Flag x;
  x.rank = rank;
  if (!zero) x.levels.push_back(direction);
  return canonicalize(x);
}

}  // namespace tropk
