#pragma once

#include "tropk/formal_real.hpp"
#include "tropk/linalg.hpp"
#include "tropk/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropk {

// A point of N_R whose coordinates are evaluated lexicographically across
// levels: the perturbed point l_1 + eps l_2 + eps^2 l_3 + ... for
// infinitesimal eps. An empty level list is the origin.
struct LexPoint {
  int rank = 0;
  FRMat levels;  // each level is a FRVec of length rank
};

// Sign of the covector m on the perturbed point: first nonzero of
// (m(l_1), ..., m(l_r)).
int lex_sign(const ZVec& m, const LexPoint& x);

// Strongly convex rational polyhedral cone, held in double description:
// extreme primitive rays plus an exact halfspace form (facet normals within
// the span, and equations cutting out the span).
class Cone {
 public:
  Cone() = default;  // the zero cone in rank 0; real construction below
  static Cone from_generators(int rank, const ZMat& generators);
  static Cone zero(int rank);

  int rank() const { return rank_; }
  int dim() const { return dim_; }
  const ZMat& rays() const { return rays_; }
  const ZMat& facet_normals() const { return facets_; }
  const ZMat& span_equations() const { return equations_; }

  bool contains(const QVec& x) const;
  bool contains(const Cone& other) const;
  bool in_relative_interior(const QVec& x) const;
  bool contains_lex(const LexPoint& x) const;
  bool relint_contains_lex(const LexPoint& x) const;

  QSubspace span() const;

  bool operator==(const Cone& o) const {
    return rank_ == o.rank_ && rays_ == o.rays_;
  }
  bool operator<(const Cone& o) const {  // canonical ordering inside fans
    if (dim_ != o.dim_) return dim_ < o.dim_;
    return rays_ < o.rays_;
  }

  // All faces including the zero cone and the cone itself.
  std::vector<Cone> faces() const;
  // Faces of codimension one inside the cone (empty for the zero cone).
  std::vector<Cone> facets() const;

  // A rational point in the relative interior (sum of extreme rays).
  QVec relative_interior_point() const;

  std::string str() const;

 private:
  int rank_ = 0;
  int dim_ = 0;
  ZMat rays_;       // extreme primitive rays, sorted
  ZMat facets_;     // facet normals, sorted
  ZMat equations_;  // primitive basis of span^perp
};

// Intersection of two cones in the same ambient space (always strongly
// convex when the inputs are).
Cone intersect(const Cone& a, const Cone& b);

// The cone {x : ineqs x >= 0, eqs x = 0}; throws NotStronglyConvex when the
// solution set contains a line.
Cone cone_from_halfspaces(int rank, const ZMat& ineqs, const ZMat& eqs);

// Cone generated by the images of the rays under an integer linear map
// given by its matrix (rows = target coordinates).
Cone map_cone(const ZMat& m, const Cone& c, int target_rank);

}  // namespace tropk
