#pragma once

#include "tropk/fan.hpp"
#include "tropk/flag.hpp"
#include "tropk/tame.hpp"
#include "tropk/trop.hpp"

#include <json.hpp>

namespace tropk {

// Documents keep their key order, so identical inputs serialize to byte
// identical output.
using Json = nlohmann::ordered_json;

Json rat_to_json(const Rat& x);
Rat rat_from_json(const Json& j);

// {"rank": n, "rays": [[int]], "cones": [[ray indices of maximal cones]]}
Json fan_to_json(const Fan& f);
Fan fan_from_json(const Json& j);

// {"rank": n, "rays": [[int]]} for a single cone
Json cone_to_json(const Cone& c);

// {"vars": n, "exponents": [[int]]}
ExponentPolynomial poly_from_json(const Json& j);

// {"basis": [{"name", "enclosure": [lo, hi], "poly"?: [..]}],
//  "levels": [[[rational coeffs]]]}  (one coeff list of length s+1 per entry)
Flag flag_from_json(const Json& j);
Json flag_to_json(const Flag& x);

// {"vars": n, "entries": [...]} with entries either [int exponents],
// a rational string (constant), or {"roots": [..], "exps": [..],
// "constant"?: "a/b"}.
std::vector<SymbolEntry> symbol_from_json(const Json& j, int& vars);

Json k1_wedge_to_json(const K1Wedge& w);

}  // namespace tropk
