#include "tropk/stratum.hpp"

#include "tropk/error.hpp"

#include <algorithm>

namespace tropk {

Stratum stratum_projection(const Fan& f, const Cone& sigma) {
  if (!f.has_cone(sigma))
    throw Error(ErrorKind::ConeNotInFan, "stratum cone is not in the fan");
  Stratum s;
  s.sigma = sigma;
  s.basis = integer_kernel(sigma.rays(), f.rank());
  return s;
}

ZMat stratum_map(const Stratum& from, const Stratum& to) {
  QMat from_q = to_qmat(from.basis);
  ZMat r;
  for (const ZVec& row : to.basis) {
    QVec x = solve_left(from_q, to_qvec(row));
    if (x.empty())
      throw Error(ErrorKind::NotAFacePair,
                  "target covectors do not lie in the source lattice");
    ZVec xi(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
      if (denominator(x[i]) != 1)
        throw Error(ErrorKind::NotAFacePair, "non-integral stratum map");
      xi[i] = numerator(x[i]);
    }
    r.push_back(std::move(xi));
  }
  return r;
}

std::optional<Cone> boundary_trace(const Fan& f, const Cone& sigma,
                                   const Cone& c, const Cone& tau) {
  if (!f.has_cone(sigma) || !f.has_cone(tau))
    throw Error(ErrorKind::ConeNotInFan, "stratum cone is not in the fan");
  auto tf = tau.faces();
  if (std::find(tf.begin(), tf.end(), sigma) == tf.end())
    throw Error(ErrorKind::NotAFacePair, "first cone is not a face of the second");
  Stratum s_sigma = stratum_projection(f, sigma);
  Stratum s_tau = stratum_projection(f, tau);
  if (c.rank() != s_sigma.rank())
    throw Error(ErrorKind::InvalidInput, "cone does not live in the stratum");

  // tau seen inside N_sigma
  ZMat tau_gens;
  for (const ZVec& r : tau.rays())
    tau_gens.push_back(mat_vec(s_sigma.projection(), r));
  Cone tau_bar = Cone::from_generators(s_sigma.rank(), tau_gens);

  // rel.int(tau_bar) meets c iff each facet of tau_bar is positive somewhere
  // on c cap tau_bar (convexity: average such witnesses)
  Cone d = intersect(c, tau_bar);
  for (const ZVec& m : tau_bar.facet_normals()) {
    bool positive = false;
    for (const ZVec& r : d.rays())
      if (dot(m, r) > 0) { positive = true; break; }
    if (!positive) return std::nullopt;
  }
  return map_cone(stratum_map(s_sigma, s_tau), c, s_tau.rank());
}

CompactifiedCone make_compactified_cone(const Fan& f, const Cone& sigma,
                                        const Cone& c) {
  CompactifiedCone p;
  p.sigma_index = f.index_of(sigma);
  if (p.sigma_index < 0)
    throw Error(ErrorKind::ConeNotInFan, "carrier cone is not in the fan");
  p.sigma = sigma;
  p.carrier = c;
  for (size_t i = 0; i < f.cones().size(); ++i) {
    const Cone& tau = f.cones()[i];
    auto tf = tau.faces();
    if (std::find(tf.begin(), tf.end(), sigma) == tf.end()) continue;
    if (auto t = boundary_trace(f, sigma, c, tau))
      p.traces.emplace(static_cast<int>(i), std::move(*t));
  }
  return p;
}

std::vector<CompactifiedCone> compactified_faces(const Fan& f,
                                                 const CompactifiedCone& p) {
  std::vector<CompactifiedCone> out;
  for (const Cone& face : p.carrier.faces()) {
    CompactifiedCone closed = make_compactified_cone(f, p.sigma, face);
    for (const auto& [tau_idx, trace] : closed.traces)
      out.push_back(make_compactified_cone(f, f.cones()[tau_idx], trace));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<CompactifiedCone> compactified_face(const Fan& f,
                                                  const CompactifiedCone& p,
                                                  const ZVec& a,
                                                  const Cone& tau) {
  if (a.size() != static_cast<size_t>(p.carrier.rank()))
    throw Error(ErrorKind::InvalidFunctional,
                "functional length does not match the stratum rank");
  for (const ZVec& r : p.carrier.rays())
    if (dot(a, r) < 0)
      throw Error(ErrorKind::InvalidFunctional,
                  "functional is negative on the carrier cone");
  ZMat eqs = p.carrier.span_equations();
  if (!is_zero(a)) eqs.push_back(a);
  Cone argmin =
      cone_from_halfspaces(p.carrier.rank(), p.carrier.facet_normals(), eqs);
  auto trace = boundary_trace(f, p.sigma, argmin, tau);
  if (!trace) return std::nullopt;
  return make_compactified_cone(f, tau, *trace);
}

FanCheck is_compactified_fan(const Fan& f,
                             const std::vector<CompactifiedCone>& cones) {
  auto find = [&](const CompactifiedCone& c) {
    return std::find(cones.begin(), cones.end(), c) != cones.end();
  };
  std::vector<std::vector<CompactifiedCone>> faces;
  for (const CompactifiedCone& p : cones) faces.push_back(compactified_faces(f, p));
  for (size_t i = 0; i < cones.size(); ++i)
    for (const CompactifiedCone& face : faces[i])
      if (!find(face))
        return {false, "a face of compactified cone " + std::to_string(i) +
                           " is missing"};
  for (size_t i = 0; i < cones.size(); ++i)
    for (size_t j = i + 1; j < cones.size(); ++j) {
      // stratum-wise intersection table
      std::map<int, Cone> meet;
      for (const auto& [tau, ti] : cones[i].traces) {
        auto it = cones[j].traces.find(tau);
        if (it != cones[j].traces.end())
          meet.emplace(tau, intersect(ti, it->second));
      }
      if (meet.empty()) continue;  // disjoint closures
      bool found_i = false, found_j = false;
      for (const CompactifiedCone& face : faces[i])
        if (face.traces == meet) { found_i = true; break; }
      for (const CompactifiedCone& face : faces[j])
        if (face.traces == meet) { found_j = true; break; }
      if (!found_i || !found_j)
        return {false, "intersection of compactified cones " +
                           std::to_string(i) + " and " + std::to_string(j) +
                           " is not a common face"};
    }
  return {};
}

}  // namespace tropk
