#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "orbitforge/chains.hpp"
#include "orbitforge/errors.hpp"
#include "orbitforge/representation.hpp"

using namespace orbitforge;
using namespace orbitforge::chains;
using hyperbolic::distance;
using testutil::kPi;

namespace {

AngleVector repeat(int n, RationalAngle a) { return AngleVector(n, a); }

}  // namespace

TEST_CASE("RationalAngle") {
  RationalAngle a(24, 14);
  CHECK(a.num == 12);
  CHECK(a.den == 7);
  CHECK(a.str() == "12pi/7");
  CHECK(RationalAngle(1, 1).str() == "pi");
  CHECK(RationalAngle(1, 2).str() == "pi/2");
  CHECK(RationalAngle(0, 5).str() == "0");
  CHECK(a.value() == doctest::Approx(12 * kPi / 7));
  CHECK(in_open_circle(a));
  CHECK_FALSE(in_open_circle(RationalAngle(2, 1)));
}

TEST_CASE("validate_alpha") {
  AngleVector ex{{12, 7}, {12, 7}, {10, 7}, {12, 7}};
  CHECK(validate_alpha(ex) == doctest::Approx(4 * kPi / 7));
  CHECK(lambda_coeff(ex) == Fraction(4, 7));
  CHECK(lambda_coeff(repeat(6, {12, 7})) == Fraction(2, 7));
  CHECK_THROWS_AS(validate_alpha(repeat(4, {1, 1})), NotDTError);
  // Boundary case lambda = 0 is not a DT component.
  AngleVector zero{{12, 7}, {12, 7}, {12, 7}, {12, 7}, {12, 7}, {10, 7}};
  CHECK_THROWS_AS(validate_alpha(zero), NotDTError);
  CHECK_THROWS_AS(validate_alpha(repeat(3, {12, 7})), DomainError);
  CHECK_THROWS_AS(validate_alpha({{12, 7}, {12, 7}, {2, 1}, {12, 7}}), DomainError);
}

TEST_CASE("moment polytope slacks") {
  auto jester = repeat(6, {12, 7});
  auto s = moment_polytope_check(jester, {2 * kPi / 3, kPi, 4 * kPi / 3});
  for (double x : s) CHECK(x > 0);
  CHECK(std::accumulate(s.begin(), s.end(), 0.0) == doctest::Approx(validate_alpha(jester)));

  // Type II north pole: beta = 2 theta_2 - 2pi makes the last triangle a point.
  AngleVector t2{{7, 4}, {7, 4}, {5, 3}, {5, 3}};
  auto n = moment_polytope_check(t2, {2 * 5 * kPi / 3 - 2 * kPi});
  CHECK(std::abs(n.back()) < 1e-12);
  CHECK(degeneracy_mask(t2, {2 * 5 * kPi / 3 - 2 * kPi}) == std::vector<bool>{false, true});

  auto bad = moment_polytope_check(jester, {0.1, kPi, 4 * kPi / 3});
  CHECK(bad[0] < 0);

  auto exact = moment_polytope_check_exact(jester, {Fraction(2, 3), Fraction(1), Fraction(4, 3)});
  CHECK(std::accumulate(exact.begin(), exact.end(), Fraction(0)) == Fraction(2, 7));
}

TEST_CASE("gamma slots follow the degeneracy mask") {
  CHECK(gamma_slots({false, false, false}) == std::vector<bool>{true, true});
  CHECK(gamma_slots({true, false, false}) == std::vector<bool>{false, true});
  CHECK(gamma_slots({false, false, true}) == std::vector<bool>{true, false});
  // Interior degenerate triangle: one merged gamma at the end of the run.
  CHECK(gamma_slots({false, true, false}) == std::vector<bool>{false, true});
  CHECK(gamma_slots({false, true, true, false}) == std::vector<bool>{false, false, true});
}

TEST_CASE("worked example chain round trip") {
  AngleVector ex{{12, 7}, {12, 7}, {10, 7}, {12, 7}};
  auto c = make_coords(ex, {kPi}, {3 * kPi / 4});
  auto ch = build_chain(ex, c);
  CHECK(chain_defect(ch, ex) < 1e-9);
  auto back = extract_coords(ch, ex);
  CHECK(back.beta[0] == doctest::Approx(kPi));
  CHECK(*back.gamma[0] == doctest::Approx(3 * kPi / 4));
  CHECK(ch.exterior[0].x == doctest::Approx(0.0));
  CHECK(ch.exterior[0].y == doctest::Approx(1.0));
}

TEST_CASE("jester basepoint has C3 = C4 and C1 = C6") {
  auto jester = repeat(6, {12, 7});
  auto c = make_coords(jester, {2 * kPi / 3, kPi, 4 * kPi / 3}, {2 * kPi / 3, 0.0, 2 * kPi / 3});
  auto ch = build_chain(jester, c);
  CHECK(distance(ch.exterior[2], ch.exterior[3]) < 1e-9);
  CHECK(distance(ch.exterior[0], ch.exterior[5]) < 1e-9);
  CHECK(distance(ch.exterior[0], ch.exterior[1]) > 0.1);
}

TEST_CASE("single-triangle chain at the north pole") {
  AngleVector t2{{7, 4}, {7, 4}, {5, 3}, {5, 3}};
  double beta = 2 * 5 * kPi / 3 - 2 * kPi;  // alpha_3 + alpha_4 - 2pi
  auto c = make_coords(t2, {beta}, {std::nullopt});
  CHECK_FALSE(c.gamma[0].has_value());
  auto ch = build_chain(t2, c);
  auto back = extract_coords(ch, t2);
  CHECK(back.beta[0] == doctest::Approx(beta));
  CHECK_FALSE(back.gamma[0].has_value());
  auto areas = triangle_areas(ch);
  CHECK(areas[1] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(areas[0] == doctest::Approx(validate_alpha(t2) / 2));
}

TEST_CASE("polytope vertex gives a single positive triangle") {
  auto jester = repeat(6, {12, 7});
  // All slack in the first triangle.
  auto a = values(jester);
  double lam = validate_alpha(jester);
  std::vector<double> beta{4 * kPi - a[0] - a[1] + lam};
  beta.push_back(beta[0] + 2 * kPi - a[2]);
  beta.push_back(beta[1] + 2 * kPi - a[3]);
  auto c = make_coords(jester, beta, {std::nullopt, std::nullopt, std::nullopt});
  CHECK(c.degenerate == std::vector<bool>{false, true, true, true});
  auto ch = build_chain(jester, c);
  auto areas = triangle_areas(ch);
  CHECK(areas[0] == doctest::Approx(lam / 2));
  for (std::size_t t = 1; t < areas.size(); ++t) CHECK(std::abs(areas[t]) < 1e-9);
}

TEST_CASE("build/extract round trip on 500 random interior points") {
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    int n = 4 + k % 4;
    auto alpha = testutil::random_alpha(n);
    auto c = testutil::random_coords(alpha);
    auto ch = build_chain(alpha, c);
    worst = std::max(worst, chain_defect(ch, alpha));
    worst = std::max(worst, representation::coords_distance(extract_coords(ch, alpha), c));
    auto areas = triangle_areas(ch);
    CHECK(std::accumulate(areas.begin(), areas.end(), 0.0) == doctest::Approx(validate_alpha(alpha) / 2).epsilon(1e-9));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("areas are invariant under a global isometry") {
  auto alpha = testutil::random_alpha(5);
  auto ch = build_chain(alpha, testutil::random_coords(alpha));
  auto g = testutil::random_isometry();
  TriangleChain moved = ch;
  for (auto& p : moved.exterior) p = hyperbolic::apply(g, p);
  for (auto& p : moved.shared) p = hyperbolic::apply(g, p);
  auto a = triangle_areas(ch), b = triangle_areas(moved);
  for (std::size_t t = 0; t < a.size(); ++t) CHECK(a[t] == doctest::Approx(b[t]).epsilon(1e-9));
}

TEST_CASE("build_chain errors") {
  auto jester = repeat(6, {12, 7});
  CHECK_THROWS_AS(build_chain(jester, make_coords(jester, {0.1, kPi, 4 * kPi / 3}, {0.0, 0.0, 0.0})),
                  PolytopeViolation);
  CHECK_THROWS_AS(make_coords(jester, {2 * kPi / 3, kPi, 4 * kPi / 3}, {0.0, std::nullopt, 0.0}), DomainError);
  ActionAngle broken;
  broken.beta = {2 * kPi / 3, kPi, 4 * kPi / 3};
  broken.gamma = {0.0, std::nullopt, 0.0};
  broken.degenerate = {false, false, false, false};
  CHECK_THROWS_AS(build_chain(jester, broken), DomainError);
}

TEST_CASE("extract rejects a broken chain") {
  AngleVector ex{{12, 7}, {12, 7}, {10, 7}, {12, 7}};
  auto ch = build_chain(ex, make_coords(ex, {kPi}, {3 * kPi / 4}));
  ch.exterior[2].x += 0.05;
  CHECK_THROWS_AS(extract_coords(ch, ex), ChainInvariantError);
}

TEST_CASE("beta increases and slack-zero pattern equals the mask") {
  for (int k = 0; k < 200; ++k) {
    auto alpha = testutil::random_alpha(6);
    auto c = testutil::random_coords(alpha);
    for (std::size_t t = 1; t < c.beta.size(); ++t) CHECK(c.beta[t] > c.beta[t - 1]);
    auto s = moment_polytope_check(alpha, c.beta);
    for (std::size_t t = 0; t < s.size(); ++t) CHECK((s[t] <= kDegenerateTol) == c.degenerate[t]);
  }
}
