#include "tropk/trop.hpp"

#include "tropk/error.hpp"

#include <algorithm>
#include <set>

namespace tropk {

ExponentPolynomial ExponentPolynomial::make(int vars, ZMat exponents) {
  if (vars <= 0) throw Error(ErrorKind::InvalidInput, "need a positive rank");
  if (exponents.empty())
    throw Error(ErrorKind::InvalidInput, "a polynomial has at least one term");
  for (const ZVec& m : exponents)
    if (m.size() != static_cast<size_t>(vars))
      throw Error(ErrorKind::InvalidInput, "exponent length != variable count");
  std::sort(exponents.begin(), exponents.end());
  exponents.erase(std::unique(exponents.begin(), exponents.end()),
                  exponents.end());
  return ExponentPolynomial{vars, std::move(exponents)};
}

namespace {

ZVec diff(const ZVec& a, const ZVec& b) {
  ZVec d(a.size());
  for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

// The H-cone {x : ineqs x >= 0, eqs x = 0} split into pointed pieces: the
// cone itself when it contains no line, otherwise its intersections with
// the closed orthants. Either way the pieces are strongly convex and their
// union is the original set.
void pointed_pieces(int rank, const ZMat& ineqs, const ZMat& eqs,
                    std::set<Cone>& out) {
  QMat all;
  for (const ZVec& r : ineqs) all.push_back(to_qvec(r));
  for (const ZVec& r : eqs) all.push_back(to_qvec(r));
  bool pointed = right_kernel(all, rank).empty();
  if (pointed) {
    out.insert(cone_from_halfspaces(rank, ineqs, eqs));
    return;
  }
  for (int mask = 0; mask < (1 << rank); ++mask) {
    ZMat cut = ineqs;
    for (int i = 0; i < rank; ++i) {
      ZVec e(rank, 0);
      e[i] = (mask >> i) & 1 ? -1 : 1;
      cut.push_back(std::move(e));
    }
    out.insert(cone_from_halfspaces(rank, cut, eqs));
  }
}

}  // namespace

Fan tropical_hypersurface(const ExponentPolynomial& f) {
  int n = f.vars;
  std::set<Cone> pieces;
  // Locus where the minimum of <m, w> is attained at exponents i and j at
  // once: the normal cone of the Newton polytope face they span. Regions of
  // dimension < n-1 sit inside the region of an edge of that face, so the
  // collection is pure of dimension n-1 once face closure runs.
  for (size_t i = 0; i < f.exponents.size(); ++i)
    for (size_t j = i + 1; j < f.exponents.size(); ++j) {
      ZMat ineqs;
      for (size_t k = 0; k < f.exponents.size(); ++k)
        if (k != i && k != j)
          ineqs.push_back(diff(f.exponents[k], f.exponents[i]));
      ZMat eqs{diff(f.exponents[j], f.exponents[i])};
      pointed_pieces(n, ineqs, eqs, pieces);
    }
  return Fan(n, std::vector<Cone>(pieces.begin(), pieces.end()));
}

namespace {

// Push a source cone forward so the image stays pointed: map it directly
// when the image is strongly convex, otherwise cut the source by the
// preimages of the target orthants first and map each piece.
void push_forward(const MonomialMap& psi, const Cone& c, std::set<Cone>& out) {
  try {
    out.insert(map_cone(psi.matrix, c, psi.target_rank));
    return;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotStronglyConvex) throw;
  }
  for (int mask = 0; mask < (1 << psi.target_rank); ++mask) {
    ZMat ineqs = c.facet_normals();
    for (int i = 0; i < psi.target_rank; ++i) {
      ZVec row = psi.matrix[i];
      if ((mask >> i) & 1)
        for (Int& x : row) x = -x;
      ineqs.push_back(std::move(row));
    }
    Cone piece = cone_from_halfspaces(psi.source_rank, ineqs,
                                      c.span_equations());
    out.insert(map_cone(psi.matrix, piece, psi.target_rank));
  }
}

// Cut every cone by every hyperplane of the collection; the resulting cells
// of the arrangement form a fan with the same union.
std::set<Cone> arrangement_refinement(int rank, const std::set<Cone>& cones) {
  std::set<ZVec> hyperplanes;
  for (const Cone& c : cones) {
    for (const ZVec& h : c.facet_normals()) hyperplanes.insert(primitive(h));
    for (const ZVec& h : c.span_equations()) hyperplanes.insert(primitive(h));
  }
  std::set<Cone> out;
  for (const Cone& c : cones) {
    std::vector<Cone> pieces{c};
    for (const ZVec& h : hyperplanes) {
      std::vector<Cone> next;
      ZVec neg = h;
      for (Int& x : neg) x = -x;
      for (const Cone& p : pieces) {
        ZMat pos = p.facet_normals();
        pos.push_back(h);
        next.push_back(cone_from_halfspaces(rank, pos, p.span_equations()));
        ZMat min = p.facet_normals();
        min.push_back(neg);
        next.push_back(cone_from_halfspaces(rank, min, p.span_equations()));
      }
      pieces = std::move(next);
    }
    out.insert(pieces.begin(), pieces.end());
  }
  return out;
}

}  // namespace

Fan image_support(const MonomialMap& psi, const Fan& a) {
  if (psi.source_rank != a.rank())
    throw Error(ErrorKind::InvalidInput, "map source rank != fan rank");
  if (psi.matrix.size() != static_cast<size_t>(psi.target_rank))
    throw Error(ErrorKind::InvalidInput, "matrix row count != target rank");
  for (const ZVec& row : psi.matrix)
    if (row.size() != static_cast<size_t>(psi.source_rank))
      throw Error(ErrorKind::InvalidInput, "matrix width != source rank");
  std::set<Cone> images;
  for (const Cone& c : a.maximal_cones()) push_forward(psi, c, images);
  Fan direct(psi.target_rank,
             std::vector<Cone>(images.begin(), images.end()));
  if (check_fan(psi.target_rank, direct.cones()).ok) return direct;
  std::set<Cone> cells = arrangement_refinement(psi.target_rank, images);
  Fan refined(psi.target_rank, std::vector<Cone>(cells.begin(), cells.end()));
  FanCheck chk = check_fan(psi.target_rank, refined.cones());
  if (!chk.ok)
    throw Error(ErrorKind::Mismatch,
                "image refinement is not a fan: " + chk.violation);
  return refined;
}

bool properness_check(const Fan& a, const Fan& sigma) {
  return support_contains(sigma, a);
}

const Cone& trop_ad(const MonomialValuation& v, const Fan& lambda) {
  if (v.lattice_rank != lambda.rank())
    throw Error(ErrorKind::InvalidInput, "lattice rank != fan rank");
  Flag canonical = canonicalize(Flag{v.lattice_rank, v.flag});
  try {
    return limit_point(lambda, canonical);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::OutsideSupport)
      throw Error(ErrorKind::NoCenter,
                  "the valuation tropicalizes outside the support");
    throw;
  }
}

}  // namespace tropk
