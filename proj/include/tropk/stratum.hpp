#pragma once

#include "tropk/fan.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tropk {

// The boundary stratum attached to a fan cone sigma: the lattice dual to
// M cap sigma^perp, together with the projection from the ambient lattice.
// The basis rows double as the projection matrix: pi(x) = basis * x.
struct Stratum {
  Cone sigma;
  ZMat basis;  // rows: lattice basis of M cap sigma^perp, saturated
  int rank() const { return static_cast<int>(basis.size()); }
  const ZMat& projection() const { return basis; }
};

Stratum stratum_projection(const Fan& f, const Cone& sigma);

// Integer matrix of the induced projection N_sigma -> N_tau for a face pair
// sigma <= tau (exists because M cap tau^perp sits inside M cap sigma^perp
// as a sublattice of a saturated lattice).
ZMat stratum_map(const Stratum& from, const Stratum& to);

// Limit points of the cone c (living in N_sigma) inside the stratum of tau:
// the image of all of c under the induced projection, nonempty exactly when
// the relative interior of the projected tau meets c.
std::optional<Cone> boundary_trace(const Fan& f, const Cone& sigma,
                                   const Cone& c, const Cone& tau);

// Closure of a cone c subset N_{sigma,R} inside the partial compactification,
// held as its carrier datum plus the full table of boundary traces.
struct CompactifiedCone {
  int sigma_index = -1;  // index of the carrier cone in the ambient fan
  Cone sigma;
  Cone carrier;                // c in N_sigma
  std::map<int, Cone> traces;  // fan cone index -> nonempty trace; has sigma

  bool operator==(const CompactifiedCone& o) const {
    return sigma_index == o.sigma_index && carrier == o.carrier;
  }
  bool operator<(const CompactifiedCone& o) const {
    if (sigma_index != o.sigma_index) return sigma_index < o.sigma_index;
    return carrier < o.carrier;
  }
};

CompactifiedCone make_compactified_cone(const Fan& f, const Cone& sigma,
                                        const Cone& c);

// All faces of p: traces of faces of the carrier cone on higher strata.
std::vector<CompactifiedCone> compactified_faces(const Fan& f,
                                                 const CompactifiedCone& p);

// The argmin face of the functional a (which must be nonnegative on the
// carrier) traced onto the stratum of tau; nullopt when the trace is empty.
std::optional<CompactifiedCone> compactified_face(const Fan& f,
                                                  const CompactifiedCone& p,
                                                  const ZVec& a,
                                                  const Cone& tau);

// Fan axioms for a collection of compactified cones, checked stratum by
// stratum through the trace tables.
FanCheck is_compactified_fan(const Fan& f,
                             const std::vector<CompactifiedCone>& cones);

}  // namespace tropk
