#pragma once

#include "tropk/cone.hpp"

#include <string>
#include <vector>

namespace tropk {

// Finite collection of strongly convex rational cones, closed under faces.
// Construction from arbitrary cones auto-completes the face closure; the two
// fan axioms (face closure, pairwise intersections are common faces) are
// checked separately by check_fan so that invalid input can be reported
// rather than rejected blindly.
class Fan {
 public:
  Fan(int rank, std::vector<Cone> cones);

  int rank() const { return rank_; }
  const std::vector<Cone>& cones() const { return cones_; }
  const std::vector<int>& maximal() const { return maximal_; }
  std::vector<Cone> maximal_cones() const;

  int index_of(const Cone& c) const;  // -1 when absent
  bool has_cone(const Cone& c) const { return index_of(c) >= 0; }
  int max_cone_dim() const;

 private:
  int rank_;
  std::vector<Cone> cones_;    // sorted by (dim, rays): deterministic order
  std::vector<int> maximal_;   // indices of inclusion-maximal cones
};

struct FanCheck {
  bool ok = true;
  std::string violation;  // names the offending cone or pair
};

// Both fan axioms on a raw cone list (no auto face closure).
FanCheck check_fan(int rank, const std::vector<Cone>& cones);

// Pairwise intersections of maximal cones; support is the intersection of
// the two supports.
Fan common_refinement(const Fan& a, const Fan& b);

// Subdivide every cone containing the ray; support unchanged. The ray must
// lie in the support.
Fan stellar_subdivision(const Fan& f, const ZVec& ray);

// The unique cone whose relative interior contains the lexicographically
// perturbed point; throws OutsideSupport.
const Cone& locate_lex(const Fan& f, const LexPoint& x);

// Exact test |a| >= |b|, via covering each maximal cone of b by pieces cut
// out by a and matching interior walls in pairs.
bool support_contains(const Fan& a, const Fan& b);

struct SupportRelation {
  bool contains = false;
  bool equal = false;
};
SupportRelation support_predicates(const Fan& a, const Fan& b);

bool is_complete(const Fan& f);

}  // namespace tropk
