#include "tropk/cone.hpp"

#include "tropk/error.hpp"

#include <algorithm>
#include <set>

namespace tropk {

namespace {

Rat qdot(const ZVec& m, const QVec& x) {
  Rat acc = 0;
  for (size_t i = 0; i < m.size(); ++i) acc += Rat(m[i]) * x[i];
  return acc;
}

// Sign-consistent kernel directions of (n-1-codim)-subsets: the shared core
// of facet enumeration for V-reps and extreme-ray enumeration for H-reps.
// `gens` generates a cone of full rank inside the kernel of `fixed`; returns
// all primitive x with x perp some (d-1)-subset, x perp fixed, and every
// generator on one side, oriented to the nonnegative side.
ZMat sign_consistent_normals(const ZMat& gens, const ZMat& fixed, int n, int d) {
  std::set<ZVec> found;
  auto picks = wedge_indices(static_cast<int>(gens.size()), d - 1);
  for (const auto& pick : picks) {
    QMat sys = to_qmat(fixed);
    for (int i : pick) sys.push_back(to_qvec(gens[i]));
    QMat ker = right_kernel(sys, n);
    if (ker.size() != 1) continue;
    ZVec m = primitive(ker[0]);
    int lo = 0, hi = 0;
    for (const ZVec& g : gens) {
      int s = sgn(dot(m, g));
      if (s > 0) hi = 1;
      if (s < 0) lo = 1;
    }
    if (lo && hi) continue;
    if (lo)
      for (auto& c : m) c = -c;
    found.insert(m);
  }
  return ZMat(found.begin(), found.end());
}

}  // namespace

int lex_sign(const ZVec& m, const LexPoint& x) {
  for (const FRVec& level : x.levels) {
    int s = dot(m, level).sign();
    if (s != 0) return s;
  }
  return 0;
}

Cone Cone::zero(int rank) {
  Cone c;
  c.rank_ = rank;
  c.dim_ = 0;
  for (int i = 0; i < rank; ++i) {
    ZVec e(rank, 0);
    e[i] = 1;
    c.equations_.push_back(std::move(e));
  }
  return c;
}

Cone Cone::from_generators(int rank, const ZMat& generators) {
  if (rank < 0) throw Error(ErrorKind::InvalidInput, "negative rank");
  std::set<ZVec> gset;
  for (const ZVec& g : generators) {
    if (g.size() != static_cast<size_t>(rank))
      throw Error(ErrorKind::InvalidInput, "generator length != rank");
    if (!is_zero(g)) gset.insert(primitive(g));
  }
  if (gset.empty()) return zero(rank);
  ZMat gens(gset.begin(), gset.end());

  Cone c;
  c.rank_ = rank;
  c.equations_ = integer_kernel(gens, rank);
  c.dim_ = rank - static_cast<int>(c.equations_.size());
  c.facets_ = sign_consistent_normals(gens, c.equations_, rank, c.dim_);

  ZMat stacked = c.equations_;
  stacked.insert(stacked.end(), c.facets_.begin(), c.facets_.end());
  if (rank_of(to_qmat(stacked)) != rank)
    throw Error(ErrorKind::NotStronglyConvex,
                "generators span a cone containing a line");

  // g is extreme iff the facets through g cut its span down to a ray.
  for (const ZVec& g : gens) {
    QMat active = to_qmat(c.equations_);
    for (const ZVec& m : c.facets_)
      if (dot(m, g) == 0) active.push_back(to_qvec(m));
    if (rank_of(std::move(active)) == rank - 1) c.rays_.push_back(g);
  }
  std::sort(c.rays_.begin(), c.rays_.end());
  return c;
}

bool Cone::contains(const QVec& x) const {
  if (x.size() != static_cast<size_t>(rank_))
    throw Error(ErrorKind::InvalidInput, "point length != rank");
  for (const ZVec& m : equations_)
    if (qdot(m, x) != 0) return false;
  for (const ZVec& m : facets_)
    if (qdot(m, x) < 0) return false;
  return true;
}

bool Cone::in_relative_interior(const QVec& x) const {
  if (!contains(x)) return false;
  for (const ZVec& m : facets_)
    if (qdot(m, x) == 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  if (other.rank_ != rank_)
    throw Error(ErrorKind::InvalidInput, "ambient rank mismatch");
  for (const ZVec& r : other.rays_)
    if (!contains(to_qvec(r))) return false;
  return true;
}

bool Cone::contains_lex(const LexPoint& x) const {
  for (const ZVec& m : equations_)
    if (lex_sign(m, x) != 0) return false;
  for (const ZVec& m : facets_)
    if (lex_sign(m, x) < 0) return false;
  return true;
}

bool Cone::relint_contains_lex(const LexPoint& x) const {
  for (const ZVec& m : equations_)
    if (lex_sign(m, x) != 0) return false;
  for (const ZVec& m : facets_)
    if (lex_sign(m, x) <= 0) return false;
  return true;
}

QSubspace Cone::span() const { return QSubspace::span(rank_, rays_); }

std::vector<Cone> Cone::facets() const {
  std::vector<Cone> out;
  for (const ZVec& m : facets_) {
    ZMat on_facet;
    for (const ZVec& r : rays_)
      if (dot(m, r) == 0) on_facet.push_back(r);
    out.push_back(from_generators(rank_, on_facet));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Cone> Cone::faces() const {
  std::vector<Cone> out{*this};
  for (const Cone& f : facets()) {
    std::vector<Cone> sub = f.faces();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  if (dim_ > 0) out.push_back(zero(rank_));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QVec Cone::relative_interior_point() const {
  QVec p(rank_, Rat(0));
  for (const ZVec& r : rays_)
    for (int i = 0; i < rank_; ++i) p[i] += Rat(r[i]);
  return p;
}

std::string Cone::str() const {
  std::string s = "cone{";
  for (size_t i = 0; i < rays_.size(); ++i) {
    if (i) s += ", ";
    s += "(";
    for (size_t j = 0; j < rays_[i].size(); ++j) {
      if (j) s += ",";
      s += rays_[i][j].str();
    }
    s += ")";
  }
  return s + "}";
}

Cone cone_from_halfspaces(int rank, const ZMat& ineqs, const ZMat& eqs) {
  // Dual description: the sought cone is the dual of cone(ineqs, +-eqs), and
  // its extreme rays are the facet directions of that dual generating set.
  std::set<ZVec> dset;
  for (const ZVec& m : ineqs)
    if (!is_zero(m)) dset.insert(primitive(m));
  for (const ZVec& m : eqs) {
    if (is_zero(m)) continue;
    ZVec p = primitive(m), q = p;
    for (auto& c : q) c = -c;
    dset.insert(std::move(p));
    dset.insert(std::move(q));
  }
  ZMat dual(dset.begin(), dset.end());
  if (rank_of(to_qmat(dual)) < rank)
    throw Error(ErrorKind::NotStronglyConvex,
                "halfspace solution set contains a line");
  ZMat rays = sign_consistent_normals(dual, {}, rank, rank);
  return Cone::from_generators(rank, rays);
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.rank() != b.rank())
    throw Error(ErrorKind::InvalidInput, "ambient rank mismatch");
  ZMat ineqs = a.facet_normals();
  ineqs.insert(ineqs.end(), b.facet_normals().begin(), b.facet_normals().end());
  ZMat eqs = a.span_equations();
  eqs.insert(eqs.end(), b.span_equations().begin(), b.span_equations().end());
  return cone_from_halfspaces(a.rank(), ineqs, eqs);
}

Cone map_cone(const ZMat& m, const Cone& c, int target_rank) {
  ZMat images;
  for (const ZVec& r : c.rays()) images.push_back(mat_vec(m, r));
  return Cone::from_generators(target_rank, images);
}

}  // namespace tropk
