#include "tropk/json_io.hpp"

#include "tropk/error.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace tropk {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorKind::InvalidInput, what);
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  bad("expected an integer");
}

ZVec zvec_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an integer vector");
  ZVec v;
  for (const Json& e : j) v.push_back(int_from_json(e));
  return v;
}

Json zvec_to_json(const ZVec& v) {
  Json out = Json::array();
  for (const Int& x : v) {
    // stay numeric where long long can hold it, string otherwise
    if (x >= std::numeric_limits<long long>::min() &&
        x <= std::numeric_limits<long long>::max())
      out.push_back(x.convert_to<long long>());
    else
      out.push_back(x.str());
  }
  return out;
}

}  // namespace

Json rat_to_json(const Rat& x) { return rat_to_string(x); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  bad("expected a rational as \"a/b\" or an integer");
}

Json fan_to_json(const Fan& f) {
  // canonical ray order: sorted union of the rays of the maximal cones
  std::map<ZVec, int> ray_index;
  for (int idx : f.maximal())
    for (const ZVec& r : f.cones()[idx].rays()) ray_index.emplace(r, 0);
  int next = 0;
  for (auto& [ray, slot] : ray_index) slot = next++;
  Json rays = Json::array();
  for (const auto& [ray, slot] : ray_index) rays.push_back(zvec_to_json(ray));
  std::vector<std::vector<int>> cones;
  for (int idx : f.maximal()) {
    std::vector<int> cone;
    for (const ZVec& r : f.cones()[idx].rays()) cone.push_back(ray_index[r]);
    std::sort(cone.begin(), cone.end());
    cones.push_back(std::move(cone));
  }
  std::sort(cones.begin(), cones.end());
  Json out;
  out["rank"] = f.rank();
  out["rays"] = std::move(rays);
  out["cones"] = cones;
  return out;
}

Fan fan_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("rays") ||
      !j.contains("cones"))
    bad("fan document needs rank, rays, cones");
  int rank = j.at("rank").get<int>();
  ZMat rays;
  for (const Json& r : j.at("rays")) rays.push_back(zvec_from_json(r));
  std::vector<Cone> cones;
  for (const Json& c : j.at("cones")) {
    ZMat gens;
    for (const Json& e : c) {
      int idx = e.get<int>();
      if (idx < 0 || idx >= static_cast<int>(rays.size()))
        bad("cone refers to a ray that is not listed");
      gens.push_back(rays[idx]);
    }
    cones.push_back(gens.empty() ? Cone::zero(rank)
                                 : Cone::from_generators(rank, gens));
  }
  return Fan(rank, std::move(cones));
}

Json cone_to_json(const Cone& c) {
  Json out;
  out["rank"] = c.rank();
  Json rays = Json::array();
  for (const ZVec& r : c.rays()) rays.push_back(zvec_to_json(r));
  out["rays"] = std::move(rays);
  return out;
}

ExponentPolynomial poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("exponents"))
    bad("polynomial document needs vars and exponents");
  ZMat exps;
  for (const Json& e : j.at("exponents")) exps.push_back(zvec_from_json(e));
  return ExponentPolynomial::make(j.at("vars").get<int>(), std::move(exps));
}

Flag flag_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("levels"))
    bad("flag document needs levels");
  std::vector<RealBasis::Element> elems;
  if (j.contains("basis"))
    for (const Json& b : j.at("basis")) {
      RealBasis::Element e;
      e.name = b.at("name").get<std::string>();
      e.lo = rat_from_json(b.at("enclosure").at(0));
      e.hi = rat_from_json(b.at("enclosure").at(1));
      if (b.contains("poly"))
        for (const Json& c : b.at("poly")) e.poly.push_back(rat_from_json(c));
      elems.push_back(std::move(e));
    }
  RealBasisPtr basis =
      elems.empty() ? nullptr : std::make_shared<RealBasis>(std::move(elems));
  int s = basis ? basis->size() : 0;
  Flag x;
  x.rank = -1;
  for (const Json& level : j.at("levels")) {
    FRVec row;
    for (const Json& entry : level) {
      std::vector<Rat> coeffs;
      for (const Json& c : entry) coeffs.push_back(rat_from_json(c));
      if (coeffs.size() != static_cast<size_t>(s + 1))
        bad("flag entry needs one coefficient per basis element plus one");
      bool rational_only = true;
      for (size_t k = 1; k < coeffs.size(); ++k)
        if (coeffs[k] != 0) rational_only = false;
      if (rational_only)
        row.emplace_back(coeffs[0]);
      else
        row.emplace_back(basis, coeffs);
    }
    if (x.rank < 0) x.rank = static_cast<int>(row.size());
    if (row.size() != static_cast<size_t>(x.rank))
      bad("flag levels have inconsistent lengths");
    x.levels.push_back(std::move(row));
  }
  if (x.rank < 0) bad("flag needs at least the ambient rank; give one level");
  return x;
}

Json flag_to_json(const Flag& x) {
  RealBasisPtr basis;
  for (const FRVec& level : x.levels)
    for (const FormalReal& e : level)
      if (e.basis()) basis = e.basis();
  int s = basis ? basis->size() : 0;
  Json out;
  Json basis_doc = Json::array();
  if (basis)
    for (const RealBasis::Element& e : basis->elements()) {
      Json b;
      b["name"] = e.name;
      b["enclosure"] = Json::array({rat_to_json(e.lo), rat_to_json(e.hi)});
      if (!e.poly.empty()) {
        Json poly = Json::array();
        for (const Rat& c : e.poly) poly.push_back(rat_to_json(c));
        b["poly"] = std::move(poly);
      }
      basis_doc.push_back(std::move(b));
    }
  out["basis"] = std::move(basis_doc);
  Json levels = Json::array();
  for (const FRVec& level : x.levels) {
    Json row = Json::array();
    for (const FormalReal& e : level) {
      Json entry = Json::array();
      for (int k = 0; k <= s; ++k) {
        const auto& c = e.coeffs();
        entry.push_back(rat_to_json(
            k < static_cast<int>(c.size()) ? c[k] : Rat(0)));
      }
      row.push_back(std::move(entry));
    }
    levels.push_back(std::move(row));
  }
  out["levels"] = std::move(levels);
  return out;
}

std::vector<SymbolEntry> symbol_from_json(const Json& j, int& vars) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("entries"))
    bad("symbol document needs vars and entries");
  vars = j.at("vars").get<int>();
  std::vector<SymbolEntry> out;
  for (const Json& e : j.at("entries")) {
    SymbolEntry entry;
    if (e.is_array()) {
      entry.kind = SymbolEntry::Monomial;
      entry.exponent = zvec_from_json(e);
    } else if (e.is_object()) {
      entry.kind = SymbolEntry::Factored;
      std::vector<std::pair<Rat, int>> factors;
      const Json& roots = e.at("roots");
      const Json& exps = e.at("exps");
      if (roots.size() != exps.size())
        bad("roots and exps must have equal length");
      for (size_t i = 0; i < roots.size(); ++i)
        factors.emplace_back(rat_from_json(roots.at(i)),
                             exps.at(i).get<int>());
      Rat constant =
          e.contains("constant") ? rat_from_json(e.at("constant")) : Rat(1);
      entry.f = FactoredFunction::make(constant, std::move(factors));
    } else {
      entry.kind = SymbolEntry::Constant;
      entry.c = rat_from_json(e);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

Json k1_wedge_to_json(const K1Wedge& w) {
  Json out;
  out["p"] = w.p;
  Json primes = Json::array();
  for (const Int& q : w.primes) primes.push_back(q.convert_to<long long>());
  out["primes"] = std::move(primes);
  Json coords = Json::array();
  for (const Rat& c : w.coords) coords.push_back(rat_to_json(c));
  out["coords"] = std::move(coords);
  return out;
}

}  // namespace tropk
