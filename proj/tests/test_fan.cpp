#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "tropk/error.hpp"
#include "tropk/fan.hpp"

#include <random>

using namespace tropk;
using fixtures::qv;
using fixtures::zv;

TEST_CASE("face closure on construction") {
  Fan f = fixtures::p2_fan();
  CHECK(f.cones().size() == 7);  // 0 + 3 rays + 3 two-cones
  CHECK(f.maximal().size() == 3);
  CHECK(check_fan(2, f.cones()).ok);
}

TEST_CASE("single cone with faces is a fan") {
  auto faces = Cone::from_generators(2, {zv({1, 0}), zv({0, 1})}).faces();
  CHECK(check_fan(2, faces).ok);
}

TEST_CASE("overlapping cones are rejected by the axiom check") {
  std::vector<Cone> cones;
  for (const Cone& c : {Cone::from_generators(2, {zv({1, 0}), zv({0, 1})}),
                        Cone::from_generators(2, {zv({1, 1}), zv({1, -1})})}) {
    auto fs = c.faces();
    cones.insert(cones.end(), fs.begin(), fs.end());
  }
  auto result = check_fan(2, cones);
  CHECK_FALSE(result.ok);
  CHECK_FALSE(result.violation.empty());
}

TEST_CASE("missing face is reported") {
  std::vector<Cone> cones = {Cone::from_generators(2, {zv({1, 0}), zv({0, 1})})};
  CHECK_FALSE(check_fan(2, cones).ok);
}

TEST_CASE("stellar subdivision of the quadrant") {
  Fan f = fixtures::p2_fan();
  Fan g = stellar_subdivision(f, zv({1, 1}));
  CHECK(g.maximal().size() == 4);
  CHECK(support_predicates(g, f).equal);
  for (const Cone& c : g.maximal_cones()) {
    bool inside = false;
    for (const Cone& d : f.maximal_cones()) inside = inside || d.contains(c);
    CHECK(inside);
  }
}

TEST_CASE("stellar at an existing ray is the identity") {
  Fan f = fixtures::p2_fan();
  Fan g = stellar_subdivision(f, zv({1, 0}));
  CHECK(g.cones().size() == f.cones().size());
  CHECK(g.maximal().size() == 3);
}

TEST_CASE("stellar outside the support is rejected") {
  Fan line = fixtures::tropical_line_fan();
  CHECK_THROWS_AS(stellar_subdivision(line, zv({1, 2})), Error);
}

TEST_CASE("common refinement is idempotent") {
  Fan f = fixtures::hirzebruch2_fan();
  Fan g = common_refinement(f, f);
  CHECK(g.cones().size() == f.cones().size());
  for (const Cone& c : f.cones()) CHECK(g.has_cone(c));
}

TEST_CASE("common refinement against a subdivision") {
  Fan quad = Fan(2, {Cone::from_generators(2, {zv({1, 0}), zv({0, 1})})});
  Fan sub = Fan(2, {Cone::from_generators(2, {zv({1, 0}), zv({1, 1})}),
                    Cone::from_generators(2, {zv({1, 1}), zv({0, 1})})});
  Fan g = common_refinement(quad, sub);
  CHECK(g.maximal().size() == 2);
  CHECK(g.has_cone(Cone::from_generators(2, {zv({1, 1})})));
  CHECK(support_predicates(g, quad).equal);
}

TEST_CASE("lex point location in the p2 fan") {
  Fan f = fixtures::p2_fan();
  // (1,0) perturbed by (0,1): interior of the first quadrant
  LexPoint a{2, {fr_vec(qv({1, 0})), fr_vec(qv({0, 1}))}};
  CHECK(locate_lex(f, a) == Cone::from_generators(2, {zv({1, 0}), zv({0, 1})}));
  // (1,0) perturbed by (0,-1): interior of the lower cone
  LexPoint b{2, {fr_vec(qv({1, 0})), fr_vec(qv({0, -1}))}};
  CHECK(locate_lex(f, b) ==
        Cone::from_generators(2, {zv({-1, -1}), zv({1, 0})}));
  // unperturbed interior point
  LexPoint c{2, {fr_vec(qv({1, 1}))}};
  CHECK(locate_lex(f, c) == Cone::from_generators(2, {zv({1, 0}), zv({0, 1})}));
  // unperturbed boundary point lands on the ray
  LexPoint d{2, {fr_vec(qv({1, 0}))}};
  CHECK(locate_lex(f, d) == Cone::from_generators(2, {zv({1, 0})}));
  // origin
  LexPoint o{2, {}};
  CHECK(locate_lex(f, o) == Cone::zero(2));
}

TEST_CASE("location outside the support is an error") {
  Fan line = fixtures::tropical_line_fan();
  LexPoint x{2, {fr_vec(qv({2, 1}))}};
  CHECK_THROWS_AS(locate_lex(line, x), Error);
}

TEST_CASE("locate_lex is refinement monotone") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> d(-3, 3);
  Fan f = fixtures::p2_fan();
  Fan g = stellar_subdivision(f, zv({1, 1}));
  Fan h = stellar_subdivision(g, zv({1, 2}));
  for (int t = 0; t < 40; ++t) {
    QVec l1 = {Rat(d(rng)), Rat(d(rng))};
    QVec l2 = {Rat(d(rng)), Rat(d(rng))};
    LexPoint x{2, {fr_vec(l1), fr_vec(l2)}};
    const Cone& cf = locate_lex(f, x);
    const Cone& ch = locate_lex(h, x);
    CHECK(cf.contains(ch));
  }
}

TEST_CASE("support predicates on the spec trio") {
  Fan p2 = fixtures::p2_fan();
  Fan line = fixtures::tropical_line_fan();
  CHECK(support_predicates(p2, line).contains);
  CHECK_FALSE(support_predicates(p2, line).equal);
  CHECK(support_predicates(line, line).equal);
  Fan e1 = Fan(2, {Cone::from_generators(2, {zv({1, 0})})});
  auto r = support_predicates(line, e1);
  CHECK(r.contains);
  CHECK_FALSE(r.equal);
  CHECK_FALSE(support_predicates(e1, line).contains);
}

TEST_CASE("completeness") {
  CHECK(is_complete(fixtures::p2_fan()));
  CHECK(is_complete(fixtures::p1xp1_fan()));
  CHECK(is_complete(fixtures::hirzebruch2_fan()));
  CHECK(is_complete(fixtures::p3_fan()));
  CHECK_FALSE(is_complete(fixtures::tropical_line_fan()));
}

TEST_CASE("refinements preserve support") {
  Fan f = fixtures::p3_fan();
  Fan g = stellar_subdivision(f, zv({1, 1, 1}));
  CHECK(support_predicates(g, f).equal);
  Fan h = common_refinement(f, g);
  CHECK(support_predicates(h, f).equal);
}
