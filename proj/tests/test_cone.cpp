#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropk/cone.hpp"
#include "tropk/error.hpp"

#include <random>

using namespace tropk;

namespace {

ZVec zv(std::initializer_list<int> xs) {
  ZVec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

QVec qv(std::initializer_list<int> xs) {
  QVec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("generators are primitivized and deduplicated") {
  Cone c = Cone::from_generators(2, {zv({2, 0}), zv({0, 3})});
  CHECK(c.rays() == ZMat{zv({0, 1}), zv({1, 0})});
  CHECK(c.dim() == 2);
}

TEST_CASE("a line is rejected") {
  CHECK_THROWS_AS(Cone::from_generators(2, {zv({1, 0}), zv({-1, 0})}), Error);
  try {
    Cone::from_generators(2, {zv({1, 0}), zv({-1, 0})});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotStronglyConvex);
  }
}

TEST_CASE("redundant middle ray is dropped") {
  Cone c = Cone::from_generators(2, {zv({1, 0}), zv({1, 1}), zv({0, 1})});
  CHECK(c.rays() == ZMat{zv({0, 1}), zv({1, 0})});
}

TEST_CASE("membership matches the halfspace description") {
  Cone c = Cone::from_generators(2, {zv({1, 0}), zv({1, 2})});
  CHECK(c.contains(qv({1, 1})));
  CHECK(c.contains(qv({1, 0})));
  CHECK_FALSE(c.contains(qv({0, 1})));
  CHECK(c.in_relative_interior(qv({1, 1})));
  CHECK_FALSE(c.in_relative_interior(qv({1, 0})));
  CHECK_FALSE(c.in_relative_interior(qv({0, 0})));
}

TEST_CASE("dual consistency fuzzed") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + t % 3;
    ZMat gens;
    for (int i = 0; i < n + 1; ++i) {
      ZVec g(n);
      for (auto& x : g) x = d(rng);
      gens.push_back(std::move(g));
    }
    Cone c = Cone::zero(n);
    try {
      c = Cone::from_generators(n, gens);
    } catch (const Error&) {
      continue;  // non-pointed random sample
    }
    // random nonnegative combinations of rays are inside
    std::uniform_int_distribution<int> coef(0, 4);
    for (int s = 0; s < 10; ++s) {
      QVec p(n, Rat(0));
      for (const ZVec& r : c.rays()) {
        int a = coef(rng);
        for (int i = 0; i < n; ++i) p[i] += Rat(a) * Rat(r[i]);
      }
      CHECK(c.contains(p));
    }
    // random points violating some facet normal are outside
    for (const ZVec& m : c.facet_normals()) {
      QVec p(n, Rat(0));
      for (int i = 0; i < n; ++i) p[i] = -Rat(m[i]);
      Rat val = 0;
      for (int i = 0; i < n; ++i) val += Rat(m[i]) * p[i];
      if (val < 0) CHECK_FALSE(c.contains(p));
    }
  }
}

TEST_CASE("faces of the simplicial quadrant") {
  Cone c = Cone::from_generators(2, {zv({1, 0}), zv({0, 1})});
  auto fs = c.faces();
  CHECK(fs.size() == 4);  // 0, two rays, itself
}

TEST_CASE("faces of a ray") {
  Cone r = Cone::from_generators(2, {zv({1, 1})});
  auto fs = r.faces();
  CHECK(fs.size() == 2);
  CHECK(fs[0] == Cone::zero(2));
  CHECK(fs[1] == r);
}

TEST_CASE("cone over the square has 10 faces") {
  Cone c = Cone::from_generators(3, {zv({1, 1, 1}), zv({1, -1, 1}),
                                     zv({-1, 1, 1}), zv({-1, -1, 1})});
  CHECK(c.rays().size() == 4);
  CHECK(c.facet_normals().size() == 4);
  CHECK(c.faces().size() == 10);  // 1 + 4 + 4 + 1
}

TEST_CASE("simplicial cones have 2^dim faces") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> d(-4, 4);
  int done = 0;
  while (done < 20) {
    int n = 2 + done % 2;
    ZMat gens;
    for (int i = 0; i < n; ++i) {
      ZVec g(n);
      for (auto& x : g) x = d(rng);
      gens.push_back(std::move(g));
    }
    try {
      Cone c = Cone::from_generators(n, gens);
      if (c.dim() != n || static_cast<int>(c.rays().size()) != n) continue;
      CHECK(c.faces().size() == (size_t{1} << n));
      ++done;
    } catch (const Error&) {
    }
  }
}

TEST_CASE("intersection of cones") {
  Cone a = Cone::from_generators(2, {zv({1, 0}), zv({1, 2})});
  Cone b = Cone::from_generators(2, {zv({2, 1}), zv({0, 1})});
  Cone m = intersect(a, b);
  CHECK(m.rays() == ZMat{zv({1, 2}), zv({2, 1})});
  Cone disjoint = intersect(Cone::from_generators(2, {zv({1, 0})}),
                            Cone::from_generators(2, {zv({0, 1})}));
  CHECK(disjoint == Cone::zero(2));
}

TEST_CASE("halfspace construction round trips") {
  Cone c = Cone::from_generators(3, {zv({1, 0, 0}), zv({1, 1, 0}), zv({1, 1, 1})});
  Cone back = cone_from_halfspaces(3, c.facet_normals(), c.span_equations());
  CHECK(back == c);
  CHECK_THROWS_AS(cone_from_halfspaces(2, {zv({1, 0})}, {}), Error);
}

TEST_CASE("lower dimensional cone carries span equations") {
  Cone c = Cone::from_generators(3, {zv({1, 0, 1}), zv({0, 1, 1})});
  CHECK(c.dim() == 2);
  CHECK(c.span_equations().size() == 1);
  CHECK(c.contains(qv({1, 1, 2})));
  CHECK_FALSE(c.contains(qv({1, 1, 1})));
  CHECK(c.in_relative_interior(qv({1, 1, 2})));
}

TEST_CASE("lexicographic membership replaces epsilon reasoning") {
  Cone quad = Cone::from_generators(2, {zv({1, 0}), zv({0, 1})});
  // (1, eps): on the boundary ray for the constant term, pushed inside by
  // the second level
  LexPoint x{2, {fr_vec(qv({1, 0})), fr_vec(qv({0, 1}))}};
  CHECK(quad.relint_contains_lex(x));
  LexPoint y{2, {fr_vec(qv({1, 0})), fr_vec(qv({0, -1}))}};
  CHECK_FALSE(quad.contains_lex(y));
  LexPoint edge{2, {fr_vec(qv({1, 0}))}};
  CHECK(quad.contains_lex(edge));
  CHECK_FALSE(quad.relint_contains_lex(edge));
}

TEST_CASE("map_cone pushes rays forward") {
  Cone c = Cone::from_generators(2, {zv({1, 0}), zv({0, 1})});
  ZMat proj = {zv({1, 0})};  // project to first coordinate
  Cone img = map_cone(proj, c, 1);
  CHECK(img.rays() == ZMat{zv({1})});
}
