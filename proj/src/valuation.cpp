#include "tropk/valuation.hpp"

#include "tropk/error.hpp"

namespace tropk {

namespace {

int common_size(const FRMat& gens) { return common_basis_size(gens); }

// Flattened rational matrix: row per generator, (s+1) coordinates per level.
QMat expanded(const OrderedValueGroup& g, int s) {
  QMat m;
  for (const FRVec& gen : g.generators) {
    if (gen.size() != static_cast<size_t>(g.levels))
      throw Error(ErrorKind::InvalidInput, "generator has wrong level count");
    m.push_back(expand_coeffs(gen, s));
  }
  return m;
}

// dim of the subgroup (over Q) with the first j levels zero: total rank
// minus the rank of the first j expanded blocks restricted to the row space.
int cut_dim(const QMat& rows, int s, int j, int total_rank) {
  QMat head;
  for (const QVec& r : rows)
    head.push_back(QVec(r.begin(), r.begin() + static_cast<size_t>(j) * (s + 1)));
  return total_rank - rank_of(std::move(head));
}

}  // namespace

HeightResult group_height(const OrderedValueGroup& g) {
  int s = common_size(g.generators);
  QMat rows = expanded(g, s);
  HeightResult out;
  out.rational_rank = rank_of(rows);
  out.chain.cuts.push_back(0);
  int prev = out.rational_rank;
  for (int j = 1; j <= g.levels; ++j) {
    int d = cut_dim(rows, s, j, out.rational_rank);
    if (d < prev) {
      out.chain.cuts.push_back(j);
      prev = d;
    }
  }
  out.height = out.chain.height();
  return out;
}

int lex_compare(const FRVec& a, const FRVec& b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::InvalidInput, "level count mismatch");
  for (size_t i = 0; i < a.size(); ++i) {
    int sg = (a[i] - b[i]).sign();
    if (sg != 0) return sg;
  }
  return 0;
}

OrderedValueGroup hahn_reduce(const OrderedValueGroup& g) {
  int s = common_size(g.generators);
  QMat rows = expanded(g, s);
  int total = rank_of(rows);
  std::vector<int> active;
  int prev = total;
  for (int j = 1; j <= g.levels; ++j) {
    int d = cut_dim(rows, s, j, total);
    if (d < prev) active.push_back(j - 1);
    prev = d;
  }
  OrderedValueGroup out;
  out.levels = static_cast<int>(active.size());
  for (const FRVec& gen : g.generators) {
    FRVec kept;
    for (int j : active) kept.push_back(gen[j]);
    out.generators.push_back(std::move(kept));
  }
  // order isomorphism on all generator pairs
  for (size_t i = 0; i < g.generators.size(); ++i)
    for (size_t j = 0; j < g.generators.size(); ++j)
      if (lex_compare(g.generators[i], g.generators[j]) !=
          lex_compare(out.generators[i], out.generators[j]))
        throw Error(ErrorKind::Mismatch,
                    "level deletion failed to preserve the order");
  return out;
}

FRVec MonomialValuation::value(const ZVec& m) const {
  if (m.size() != static_cast<size_t>(lattice_rank))
    throw Error(ErrorKind::InvalidInput, "exponent length != lattice rank");
  FRVec out;
  for (const FRVec& row : flag) out.push_back(dot(m, row));
  return out;
}

OrderedValueGroup value_group(const MonomialValuation& v) {
  OrderedValueGroup g;
  g.levels = v.levels();
  for (int i = 0; i < v.lattice_rank; ++i) {
    ZVec e(v.lattice_rank, 0);
    e[i] = 1;
    g.generators.push_back(v.value(e));
  }
  return g;
}

OrderedValueGroup flag_value_group(const Flag& x) {
  MonomialValuation v{x.rank, x.levels};
  return value_group(v);
}

MonomialValuation quotient_by_convex(const MonomialValuation& v, int cut) {
  if (cut < 0 || cut > v.levels())
    throw Error(ErrorKind::NotConvex, "level cut outside the convex chain");
  MonomialValuation out;
  out.lattice_rank = v.lattice_rank;
  out.flag.assign(v.flag.begin(), v.flag.begin() + cut);
  return out;
}

namespace {

// Saturated sublattice where the first `cut` flag rows vanish: the integer
// kernel of all coefficient layers of those rows.
ZMat finite_part_lattice(const MonomialValuation& v, int cut) {
  int s = common_basis_size(v.flag);
  QMat constraints;
  for (int i = 0; i < cut; ++i) {
    QMat layers(s + 1, QVec(v.lattice_rank, Rat(0)));
    for (int j = 0; j < v.lattice_rank; ++j) {
      const auto& c = v.flag[i][j].coeffs();
      for (size_t k = 0; k < c.size(); ++k) layers[k][j] = c[k];
    }
    for (QVec& l : layers)
      if (!is_zero(l)) constraints.push_back(std::move(l));
  }
  return integer_kernel(constraints, v.lattice_rank);
}

}  // namespace

RestrictedValuation restrict_to_convex(const MonomialValuation& v, int cut) {
  if (cut < 0 || cut > v.levels())
    throw Error(ErrorKind::NotConvex, "level cut outside the convex chain");
  RestrictedValuation out;
  out.sublattice = finite_part_lattice(v, cut);
  out.valuation.lattice_rank = static_cast<int>(out.sublattice.size());
  for (int i = cut; i < v.levels(); ++i) {
    FRVec row;
    for (const ZVec& b : out.sublattice) row.push_back(dot(b, v.flag[i]));
    out.valuation.flag.push_back(std::move(row));
  }
  return out;
}

MonomialValuation vertical_specialize(const MonomialValuation& v,
                                      const FRMat& extra) {
  MonomialValuation out = v;
  for (const FRVec& row : extra) {
    if (row.size() != static_cast<size_t>(v.lattice_rank))
      throw Error(ErrorKind::InvalidInput, "level length != lattice rank");
    ZMat residue = finite_part_lattice(out, out.levels());
    bool nonzero = false;
    for (const ZVec& b : residue) nonzero = nonzero || !dot(b, row).is_zero();
    if (!nonzero)
      throw Error(ErrorKind::LevelsNotOnResidueLattice,
                  "appended level vanishes on the residue lattice");
    out.flag.push_back(row);
  }
  return out;
}

const Cone& toric_valuation_center(const Fan& f, const MonomialValuation& v) {
  if (v.lattice_rank != f.rank())
    throw Error(ErrorKind::InvalidInput, "lattice rank != fan rank");
  try {
    return locate_lex(f, LexPoint{v.lattice_rank, v.flag});
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::OutsideSupport)
      throw Error(ErrorKind::NoCenter, "valuation has no center on this fan");
    throw;
  }
}

MonomialValuation divisorial_valuation(const Cone& ray) {
  if (ray.dim() != 1 || ray.rays().size() != 1)
    throw Error(ErrorKind::InvalidInput, "divisorial valuations come from rays");
  MonomialValuation v;
  v.lattice_rank = ray.rank();
  v.flag.push_back(fr_vec(ray.rays()[0]));
  return v;
}

}  // namespace tropk
