#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropk/error.hpp"
#include "tropk/formal_real.hpp"

#include <random>

using namespace tropk;

namespace {

RealBasisPtr sqrt2_basis() {
  // beta_1 = sqrt(2), enclosure [1.414, 1.415], minimal polynomial x^2 - 2
  return std::make_shared<RealBasis>(std::vector<RealBasis::Element>{
      {"sqrt2", Rat(1414, 1000), Rat(1415, 1000), {Rat(-2), Rat(0), Rat(1)}}});
}

}  // namespace

TEST_CASE("rational fast path") {
  CHECK(FormalReal(Rat(1, 2)).sign() == 1);
  CHECK(FormalReal(Rat(0)).sign() == 0);
  CHECK(FormalReal(Rat(-7)).sign() == -1);
}

TEST_CASE("zero coefficient vector is exactly zero") {
  auto b = sqrt2_basis();
  FormalReal x(b, {Rat(0), Rat(0)});
  CHECK(x.sign() == 0);
  CHECK(x.is_zero());
}

TEST_CASE("interval evaluation decides -3 + 2 sqrt2 < 0") {
  auto b = sqrt2_basis();
  FormalReal x(b, {Rat(-3), Rat(2)});
  CHECK(x.sign() == -1);  // 2 * 1.415 = 2.83 < 3
}

TEST_CASE("bisection refines through the initial enclosure") {
  auto b = sqrt2_basis();
  // 141421/100000 < sqrt2 < 141422/100000; initial enclosure cannot decide
  FormalReal x(b, {Rat(-141421, 100000), Rat(1)});
  CHECK(x.sign() == 1);
  FormalReal y(b, {Rat(-141422, 100000), Rat(1)});
  CHECK(y.sign() == -1);
}

TEST_CASE("indeterminate without a defining polynomial") {
  auto b = std::make_shared<RealBasis>(std::vector<RealBasis::Element>{
      {"alpha", Rat(1), Rat(2), {}}});
  FormalReal x(b, {Rat(-3, 2), Rat(1)});  // alpha - 3/2 straddles zero
  CHECK_THROWS_AS((void)x.sign(), Error);
  try {
    (void)x.sign();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndeterminateSign);
  }
}

TEST_CASE("depth budget bounds refinement") {
  auto b = sqrt2_basis();
  int saved = interval_depth();
  interval_depth() = 0;
  FormalReal x(b, {Rat(-141421, 100000), Rat(1)});
  CHECK_THROWS_AS((void)x.sign(), Error);
  interval_depth() = saved;
  CHECK(x.sign() == 1);
}

TEST_CASE("arithmetic and equality") {
  auto b = sqrt2_basis();
  FormalReal r2(b, {Rat(0), Rat(1)});
  FormalReal x = r2 + r2;
  CHECK(x == FormalReal(b, {Rat(0), Rat(2)}));
  CHECK((x - x).is_zero());
  CHECK((r2 * Rat(-1)).sign() == -1);
  CHECK((r2 + FormalReal(Rat(1))).sign() == 1);
}

TEST_CASE("mixing distinct bases is rejected") {
  auto b1 = sqrt2_basis();
  auto b2 = sqrt2_basis();
  FormalReal x(b1, {Rat(0), Rat(1)}), y(b2, {Rat(0), Rat(1)});
  CHECK_THROWS_AS(x + y, Error);
}

TEST_CASE("sign is total on nonzero rational combinations") {
  auto b = sqrt2_basis();
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int t = 0; t < 200; ++t) {
    Rat c0(d(rng)), c1(d(rng));
    FormalReal x(b, {c0, c1});
    int s = x.sign();
    if (c0 == 0 && c1 == 0) {
      CHECK(s == 0);
    } else {
      CHECK(s != 0);
      CHECK((-x).sign() == -s);
    }
  }
}

TEST_CASE("lexicographic tuple sign") {
  auto b = sqrt2_basis();
  FRVec t1 = {FormalReal(Rat(0)), FormalReal(b, {Rat(0), Rat(1)})};
  CHECK(lex_sign(t1) == 1);
  FRVec t2 = {FormalReal(Rat(-1)), FormalReal(Rat(100))};
  CHECK(lex_sign(t2) == -1);
  FRVec t3 = {FormalReal(Rat(0)), FormalReal(Rat(0))};
  CHECK(lex_sign(t3) == 0);
}

TEST_CASE("coefficient expansion") {
  auto b = sqrt2_basis();
  FRVec v = {FormalReal(b, {Rat(1), Rat(2)}), FormalReal(Rat(5))};
  QVec flat = expand_coeffs(v, 1);
  CHECK(flat == QVec{Rat(1), Rat(2), Rat(5), Rat(0)});
  CHECK(common_basis_size({v}) == 1);
  CHECK(common_basis_size({{FormalReal(Rat(3))}}) == 0);
}
