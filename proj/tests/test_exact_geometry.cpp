#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gitcomb/binary_form.hpp"
#include "gitcomb/projective.hpp"

#include <stdexcept>

using namespace gitcomb;

namespace {

BinaryForm form(int degree, std::vector<int> coeffs) {
  std::vector<Rational> c(coeffs.begin(), coeffs.end());
  return BinaryForm(degree, std::move(c));
}

const BinaryForm x2y = form(3, {0, 1, 0, 0});   // x^2 y
const BinaryForm xy2 = form(3, {0, 0, 1, 0});   // x y^2
const BinaryForm x2 = form(2, {1, 0, 0});
const BinaryForm y2 = form(2, {0, 0, 1});
const BinaryForm xy = form(2, {0, 1, 0});

}  // namespace

TEST_CASE("rational parsing and printing round-trip") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(rational_string(Rational(6, 8)) == "3/4");
  CHECK(rational_string(Rational(-5)) == "-5");
  CHECK(rational_string(parse_rational("22/7")) == "22/7");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("ProjPoint canonicalization") {
  CHECK(ProjPoint(6, 2) == ProjPoint::finite(3));
  CHECK(ProjPoint(5, 0) == ProjPoint::infinity());
  CHECK(ProjPoint(Rational(1, 2), Rational(1, 4)) == ProjPoint::finite(2));
  CHECK(ProjPoint::infinity().is_infinity());
  CHECK_FALSE(ProjPoint::finite(0).is_infinity());
  CHECK_THROWS_AS(ProjPoint(0, 0), std::invalid_argument);
}

TEST_CASE("mobius_apply spec examples") {
  // identity, [3:1] -> [3:1]
  CHECK(mobius_apply(MobiusTransform::identity(), ProjPoint::finite(3)) == ProjPoint::finite(3));
  // swap, [1:0] -> [0:1]
  CHECK(mobius_apply(MobiusTransform::swap_xy(), ProjPoint::infinity()) == ProjPoint::finite(0));
  // ((1,1),(0,1)), [1:1] -> [2:1]
  MobiusTransform shear(1, 1, 0, 1);
  CHECK(mobius_apply(shear, ProjPoint::finite(1)) == ProjPoint::finite(2));
}

TEST_CASE("Mobius group structure") {
  MobiusTransform g(1, 2, 3, 5), h(2, -1, 1, 1);
  ProjPoint p = ProjPoint::finite(Rational(7, 3));
  CHECK(mobius_apply(g, mobius_apply(h, p)) == mobius_apply(g * h, p));
  CHECK(mobius_apply(g.inverse(), mobius_apply(g, p)) == p);
  CHECK_THROWS_AS(MobiusTransform(1, 2, 2, 4), std::invalid_argument);
}

TEST_CASE("mobius_to_infinity sends its point to [1:0]") {
  for (const auto& p : {ProjPoint::infinity(), ProjPoint::finite(0), ProjPoint::finite(-3),
                        ProjPoint::finite(Rational(5, 7))})
    CHECK(mobius_apply(mobius_to_infinity(p), p) == ProjPoint::infinity());
}

TEST_CASE("form_compose spec examples") {
  CHECK(form_compose(x2, MobiusTransform::identity()) == x2);
  CHECK(form_compose(x2, MobiusTransform::swap_xy()) == y2);
  // f = xy, g = ((1,1),(0,1)) -> (x+y)y = xy + y^2
  CHECK(form_compose(xy, MobiusTransform(1, 1, 0, 1)) == form(2, {0, 1, 1}));
}

TEST_CASE("form_compose contravariant composition") {
  BinaryForm f = form(3, {2, -1, 0, 5});
  MobiusTransform g(1, 2, 3, 5), h(0, 1, 1, 4);
  CHECK(form_compose(form_compose(f, h), g) == form_compose(f, h * g));
}

TEST_CASE("vanishing_order spec examples") {
  CHECK(vanishing_order(x2y, ProjPoint::finite(0)) == 2);
  CHECK(vanishing_order(x2y, ProjPoint::infinity()) == 1);
  // (x - y)^2 at [1:1] -> 2
  BinaryForm sq = form(2, {1, -2, 1});
  CHECK(vanishing_order(sq, ProjPoint::finite(1)) == 2);
  CHECK(vanishing_order(sq, ProjPoint::finite(2)) == 0);
  CHECK_THROWS_AS(vanishing_order(BinaryForm::zero(2), ProjPoint::finite(1)),
                  std::invalid_argument);
}

TEST_CASE("vanishing_order is Mobius covariant") {
  BinaryForm f = form(4, {1, 0, -2, 0, 1});
  MobiusTransform g(2, 1, 1, 1);
  for (const auto& p : {ProjPoint::finite(1), ProjPoint::finite(-1), ProjPoint::infinity()})
    CHECK(vanishing_order(f, p) ==
          vanishing_order(form_compose(f, g), mobius_apply(g.inverse(), p)));
}

TEST_CASE("common_vanishing spec examples") {
  std::vector<BinaryForm> pair{x2y, xy2};
  CHECK(common_vanishing(pair, ProjPoint::finite(0)) == 1);
  std::vector<BinaryForm> coprime{x2, y2};
  CHECK(common_vanishing(coprime, ProjPoint::finite(1)) == 0);
  CHECK(common_vanishing(coprime, ProjPoint::finite(0)) == 0);
  // (x^2 y, x^2 (x - y)) at [0:1] -> 2
  std::vector<BinaryForm> two{x2y, form(3, {1, -1, 0, 0})};
  CHECK(common_vanishing(two, ProjPoint::finite(0)) == 2);
  // Zero forms are skipped.
  std::vector<BinaryForm> with_zero{BinaryForm::zero(3), x2y};
  CHECK(common_vanishing(with_zero, ProjPoint::finite(0)) == 2);
  std::vector<BinaryForm> all_zero{BinaryForm::zero(3)};
  CHECK_THROWS_AS(common_vanishing(all_zero, ProjPoint::finite(0)), std::invalid_argument);
}

TEST_CASE("gcd_forms spec examples") {
  // (x^2 y, x y^2) -> xy
  CHECK(gcd_forms(std::vector<BinaryForm>{x2y, xy2}) == xy);
  // coprime -> degree 0
  CHECK(gcd_forms(std::vector<BinaryForm>{x2, y2}).degree() == 0);
  // (f, f) -> f up to scalar, first nonzero coefficient 1
  BinaryForm f = form(3, {2, 4, 0, -2});
  BinaryForm g = gcd_forms(std::vector<BinaryForm>{f, f});
  CHECK(g == f.scaled(Rational(1, 2)));
}

TEST_CASE("gcd_forms divides every input exactly") {
  BinaryForm a = xy * form(2, {1, 1, 1});
  BinaryForm b = xy * form(2, {1, 0, -1});
  BinaryForm g = gcd_forms(std::vector<BinaryForm>{a, b});
  CHECK(g == xy);
  CHECK(divide_exact(a, g).has_value());
  CHECK(divide_exact(b, g).has_value());
  CHECK(*divide_exact(a, g) * g == a);
  CHECK_FALSE(divide_exact(x2, y2).has_value());
}

TEST_CASE("squarefree decomposition reconstructs multiplicities") {
  // g = y^2 * x * (x - y)^3
  BinaryForm g = form(1, {0, 1}).pow(2) * form(1, {1, 0}) * form(1, {1, -1}).pow(3);
  auto factors = squarefree_decompose(g);
  int total = 0;
  for (const auto& [factor, mult] : factors) total += factor.degree() * mult;
  CHECK(total == g.degree());
  bool saw_cube = false;
  for (const auto& [factor, mult] : factors)
    if (mult == 3) {
      saw_cube = true;
      CHECK(vanishing_order(factor, ProjPoint::finite(1)) == 1);
    }
  CHECK(saw_cube);
}

TEST_CASE("rational_roots finds all roots including infinity") {
  // x y (x - 2y) (2x + 3y)
  BinaryForm f =
      form(1, {1, 0}) * form(1, {0, 1}) * form(1, {1, -2}) * form(1, {2, 3});
  auto roots = rational_roots(f);
  REQUIRE(roots.size() == 4);
  for (const auto& p : {ProjPoint::infinity(), ProjPoint::finite(0), ProjPoint::finite(2),
                        ProjPoint::finite(Rational(-3, 2))})
    CHECK(std::count(roots.begin(), roots.end(), p) == 1);
  // x^2 + y^2 has no rational roots
  CHECK(rational_roots(form(2, {1, 0, 1})).empty());
}

TEST_CASE("max_unmarked_multiplicity spec examples") {
  // (x^2 + y^2)^2, no marks -> 2
  BinaryForm irr2 = form(2, {1, 0, 1}).pow(2);
  CHECK(max_unmarked_multiplicity(irr2, {}) == 2);
  // x^3 with its only root marked -> 0
  BinaryForm x3 = form(1, {1, 0}).pow(3);
  CHECK(max_unmarked_multiplicity(x3, {ProjPoint::finite(0)}) == 0);
  // x^3 (x - y) with [0:1] marked -> 1
  BinaryForm f = x3 * form(1, {1, -1});
  CHECK(max_unmarked_multiplicity(f, {ProjPoint::finite(0)}) == 1);
}

TEST_CASE("linear_at vanishes exactly at its point") {
  for (const auto& p : {ProjPoint::infinity(), ProjPoint::finite(0), ProjPoint::finite(5),
                        ProjPoint::finite(Rational(-2, 3))}) {
    BinaryForm l = BinaryForm::linear_at(p);
    CHECK(l.degree() == 1);
    CHECK(vanishing_order(l, p) == 1);
  }
}
