#include "tropk/fan.hpp"

#include "tropk/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropk {

namespace {

Rat qdot(const ZVec& m, const QVec& x) {
  Rat acc = 0;
  for (size_t i = 0; i < m.size(); ++i) acc += Rat(m[i]) * x[i];
  return acc;
}

}  // namespace

Fan::Fan(int rank, std::vector<Cone> cones) : rank_(rank) {
  std::set<Cone> closed;
  for (const Cone& c : cones) {
    if (c.rank() != rank)
      throw Error(ErrorKind::InvalidInput, "cone rank != fan rank");
    for (Cone& f : c.faces()) closed.insert(std::move(f));
  }
  if (closed.empty()) closed.insert(Cone::zero(rank));
  cones_.assign(closed.begin(), closed.end());
  for (size_t i = 0; i < cones_.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < cones_.size() && maximal; ++j)
      if (j != i && cones_[j].dim() > cones_[i].dim() &&
          cones_[j].contains(cones_[i]))
        maximal = false;
    if (maximal) maximal_.push_back(static_cast<int>(i));
  }
}

std::vector<Cone> Fan::maximal_cones() const {
  std::vector<Cone> out;
  for (int i : maximal_) out.push_back(cones_[i]);
  return out;
}

int Fan::index_of(const Cone& c) const {
  auto it = std::lower_bound(cones_.begin(), cones_.end(), c);
  if (it != cones_.end() && *it == c)
    return static_cast<int>(it - cones_.begin());
  return -1;
}

int Fan::max_cone_dim() const {
  int d = 0;
  for (const Cone& c : cones_) d = std::max(d, c.dim());
  return d;
}

FanCheck check_fan(int rank, const std::vector<Cone>& cones) {
  auto find = [&](const Cone& c) {
    return std::find(cones.begin(), cones.end(), c) != cones.end();
  };
  for (size_t i = 0; i < cones.size(); ++i) {
    if (cones[i].rank() != rank)
      return {false, "cone " + std::to_string(i) + " has wrong ambient rank"};
    for (const Cone& f : cones[i].faces())
      if (!find(f))
        return {false, "face " + f.str() + " of cone " + std::to_string(i) +
                           " is missing"};
  }
  for (size_t i = 0; i < cones.size(); ++i)
    for (size_t j = i + 1; j < cones.size(); ++j) {
      Cone m = intersect(cones[i], cones[j]);
      auto fi = cones[i].faces();
      auto fj = cones[j].faces();
      bool face_i = std::find(fi.begin(), fi.end(), m) != fi.end();
      bool face_j = std::find(fj.begin(), fj.end(), m) != fj.end();
      if (!face_i || !face_j)
        return {false, "intersection of cones " + std::to_string(i) + " and " +
                           std::to_string(j) + " is not a common face"};
    }
  return {};
}

Fan common_refinement(const Fan& a, const Fan& b) {
  if (a.rank() != b.rank())
    throw Error(ErrorKind::InvalidInput, "rank mismatch");
  std::vector<Cone> pieces;
  for (int i : a.maximal())
    for (int j : b.maximal())
      pieces.push_back(intersect(a.cones()[i], b.cones()[j]));
  return Fan(a.rank(), std::move(pieces));
}

Fan stellar_subdivision(const Fan& f, const ZVec& ray) {
  if (ray.size() != static_cast<size_t>(f.rank()) || is_zero(ray))
    throw Error(ErrorKind::InvalidInput, "subdivision ray must be nonzero");
  QVec rq = to_qvec(ray);
  bool inside = false;
  std::vector<Cone> out;
  for (const Cone& c : f.maximal_cones()) {
    if (!c.contains(rq)) {
      out.push_back(c);
      continue;
    }
    inside = true;
    for (const Cone& facet : c.facets()) {
      if (facet.contains(rq)) continue;
      ZMat gens = facet.rays();
      gens.push_back(ray);
      out.push_back(Cone::from_generators(f.rank(), gens));
    }
  }
  if (!inside)
    throw Error(ErrorKind::RayOutsideSupport,
                "subdivision ray lies outside the support");
  return Fan(f.rank(), std::move(out));
}

const Cone& locate_lex(const Fan& f, const LexPoint& x) {
  if (x.rank != f.rank())
    throw Error(ErrorKind::InvalidInput, "point rank != fan rank");
  for (const Cone& c : f.cones())
    if (c.relint_contains_lex(x)) return c;
  throw Error(ErrorKind::OutsideSupport,
              "perturbed point lies outside the support");
}

namespace {

// Is |a| a cover of the single cone c? Pieces are the full-dimensional
// intersections with maximal cones of a; they tile c iff every piece wall not
// on the relative boundary of c is shared by exactly two pieces (walls match
// exactly because a is a fan, so no partial overlaps occur).
bool covers(const Fan& a, const Cone& c) {
  if (c.dim() == 0) return !a.cones().empty();
  std::set<Cone> pieces;
  for (const Cone& d : a.maximal_cones()) {
    Cone m = intersect(c, d);
    if (m.dim() == c.dim()) pieces.insert(std::move(m));
  }
  if (pieces.empty()) return false;
  std::map<Cone, int> wall_count;
  for (const Cone& p : pieces)
    for (const Cone& w : p.facets()) {
      QVec z = w.relative_interior_point();
      bool on_boundary = false;
      for (const ZVec& m : c.facet_normals())
        if (qdot(m, z) == 0) { on_boundary = true; break; }
      if (!on_boundary) ++wall_count[w];
    }
  for (const auto& [w, n] : wall_count)
    if (n != 2) return false;
  return true;
}

}  // namespace

bool support_contains(const Fan& a, const Fan& b) {
  if (a.rank() != b.rank())
    throw Error(ErrorKind::InvalidInput, "rank mismatch");
  for (const Cone& c : b.maximal_cones())
    if (!covers(a, c)) return false;
  return true;
}

SupportRelation support_predicates(const Fan& a, const Fan& b) {
  SupportRelation r;
  r.contains = support_contains(a, b);
  r.equal = r.contains && support_contains(b, a);
  return r;
}

bool is_complete(const Fan& f) {
  int n = f.rank();
  if (n == 0) return true;
  std::vector<Cone> orthants;
  for (int mask = 0; mask < (1 << n); ++mask) {
    ZMat gens;
    for (int i = 0; i < n; ++i) {
      ZVec e(n, 0);
      e[i] = (mask >> i) & 1 ? -1 : 1;
      gens.push_back(std::move(e));
    }
    orthants.push_back(Cone::from_generators(n, gens));
  }
  return support_contains(f, Fan(n, std::move(orthants)));
}

}  // namespace tropk
