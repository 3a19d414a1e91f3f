#pragma once

// Named fans used across the test binaries.

#include "tropk/fan.hpp"

#include <initializer_list>

namespace fixtures {

using namespace tropk;

inline ZVec zv(std::initializer_list<int> xs) {
  ZVec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

inline QVec qv(std::initializer_list<int> xs) {
  QVec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

// Complete fan with rays e1, e2, -e1-e2.
inline Fan p2_fan() {
  ZVec r0 = zv({1, 0}), r1 = zv({0, 1}), r2 = zv({-1, -1});
  return Fan(2, {Cone::from_generators(2, {r0, r1}),
                 Cone::from_generators(2, {r1, r2}),
                 Cone::from_generators(2, {r2, r0})});
}

// Complete fan with rays +-e1, +-e2 (four quadrants).
inline Fan p1xp1_fan() {
  ZVec r0 = zv({1, 0}), r1 = zv({0, 1}), r2 = zv({-1, 0}), r3 = zv({0, -1});
  return Fan(2, {Cone::from_generators(2, {r0, r1}),
                 Cone::from_generators(2, {r1, r2}),
                 Cone::from_generators(2, {r2, r3}),
                 Cone::from_generators(2, {r3, r0})});
}

// Hirzebruch surface of self-intersection 2: rays e1, e2, -e1+2e2, -e2.
inline Fan hirzebruch2_fan() {
  ZVec r0 = zv({1, 0}), r1 = zv({0, 1}), r2 = zv({-1, 2}), r3 = zv({0, -1});
  return Fan(2, {Cone::from_generators(2, {r0, r1}),
                 Cone::from_generators(2, {r1, r2}),
                 Cone::from_generators(2, {r2, r3}),
                 Cone::from_generators(2, {r3, r0})});
}

// Complete simplicial fan with rays e1, e2, e3, -e1-e2-e3.
inline Fan p3_fan() {
  ZMat r = {zv({1, 0, 0}), zv({0, 1, 0}), zv({0, 0, 1}), zv({-1, -1, -1})};
  std::vector<Cone> maximal;
  for (int skip = 0; skip < 4; ++skip) {
    ZMat gens;
    for (int i = 0; i < 4; ++i)
      if (i != skip) gens.push_back(r[i]);
    maximal.push_back(Cone::from_generators(3, gens));
  }
  return Fan(3, std::move(maximal));
}

// Codim-1 skeleton of the p2 fan: rays e1, e2, -e1-e2 only.
inline Fan tropical_line_fan() {
  return Fan(2, {Cone::from_generators(2, {zv({1, 0})}),
                 Cone::from_generators(2, {zv({0, 1})}),
                 Cone::from_generators(2, {zv({-1, -1})})});
}

}  // namespace fixtures
