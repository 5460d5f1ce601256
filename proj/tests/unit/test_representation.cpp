#include <doctest.h>

#include "helpers.hpp"
#include "orbitforge/errors.hpp"
#include "orbitforge/representation.hpp"

using namespace orbitforge;
using namespace orbitforge::representation;
using chains::make_coords;
using testutil::kPi;

namespace {

const AngleVector kExample{{12, 7}, {12, 7}, {10, 7}, {12, 7}};

}  // namespace

TEST_CASE("worked example, both routes") {
  auto c = make_coords(kExample, {kPi}, {3 * kPi / 4});
  auto rep = from_coords(kExample, c);
  CHECK(hyperbolic::rotation_angle(product(rep, 1, 2).inverse()) == doctest::Approx(kPi));
  CHECK(hyperbolic::rotation_angle(product(rep, 2, 3).inverse()) == doctest::Approx(4 * kPi / 3));

  auto alg = coords_from_rep(twist_algebraic(rep, {2, 3}));
  CHECK(alg.beta[0] == doctest::Approx(2 * kPi / 3));
  CHECK(*alg.gamma[0] == doctest::Approx(kPi));

  auto geo = twist_geometric_detail(kExample, c, {2, 3});
  CHECK(geo.beta_prime == doctest::Approx(4 * kPi / 3));
  CHECK(coords_distance(geo.coords, alg) < 1e-9);
}

TEST_CASE("from_chain invariants") {
  auto jester = AngleVector(6, {12, 7});
  auto c = make_coords(jester, {2 * kPi / 3, kPi, 4 * kPi / 3}, {2 * kPi / 3, 0.0, 2 * kPi / 3});
  auto ch = chains::build_chain(jester, c);
  auto rep = from_chain(ch, jester);
  CHECK(product_defect(rep) < 1e-9);
  CHECK(peripheral_defect(rep) < 1e-9);
  for (int k = 0; k < 6; ++k) CHECK(hyperbolic::distance(hyperbolic::fixed_point(rep.rho[k]), ch.exterior[k]) < 1e-9);
  chains::TriangleChain bad = ch;
  bad.exterior[1].y *= 1.3;
  CHECK_THROWS_AS(from_chain(bad, jester), ChainInvariantError);
}

TEST_CASE("conjugating the chain conjugates the matrices") {
  auto alpha = testutil::random_alpha(5);
  auto ch = chains::build_chain(alpha, testutil::random_coords(alpha));
  auto h = testutil::random_isometry();
  auto moved = ch;
  for (auto& p : moved.exterior) p = hyperbolic::apply(h, p);
  auto r1 = from_chain(ch, alpha), r2 = from_chain(moved, alpha);
  for (int k = 0; k < 5; ++k) CHECK((h * r1.rho[k] * h.inverse()).approx_equal(r2.rho[k], 1e-8));
}

TEST_CASE("coords_from_rep inverts from_coords") {
  for (int k = 0; k < 200; ++k) {
    auto alpha = testutil::random_alpha(4 + k % 3);
    auto c = testutil::random_coords(alpha);
    CHECK(coords_distance(coords_from_rep(from_coords(alpha, c)), c) < 1e-9);
  }
}

TEST_CASE("twists keep the representation invariants") {
  for (int k = 0; k < 100; ++k) {
    int n = 4 + k % 3;
    auto alpha = testutil::random_alpha(n);
    auto rep = from_coords(alpha, testutil::random_coords(alpha));
    for (const auto& g : surface::generator_set(n)) {
      for (int e : {1, -1}) {
        auto r = twist_algebraic(rep, g, e);
        CHECK(product_defect(r) < 1e-9);
        CHECK(peripheral_defect(r) < 1e-9);
      }
    }
  }
}

TEST_CASE("inverse letter undoes the twist") {
  auto alpha = testutil::random_alpha(5);
  auto c = testutil::random_coords(alpha);
  auto rep = from_coords(alpha, c);
  for (const auto& g : surface::generator_set(5)) {
    auto back = coords_from_rep(twist_algebraic(twist_algebraic(rep, g, 1), g, -1));
    CHECK(coords_distance(back, c) < 1e-9);
    auto geo = twist_geometric(alpha, twist_geometric(alpha, c, g, 1), g, -1);
    CHECK(coords_distance(geo, c) < 1e-8);
  }
}

TEST_CASE("tau_{1,i+1} only moves gamma_i, by -beta_i") {
  for (int k = 0; k < 50; ++k) {
    auto alpha = testutil::random_alpha(6);
    auto c = testutil::random_coords(alpha);
    auto rep = from_coords(alpha, c);
    for (int i = 1; i <= 3; ++i) {
      auto r = coords_from_rep(twist_algebraic(rep, {1, i + 1}));
      for (std::size_t b = 0; b < 3; ++b) CHECK(r.beta[b] == doctest::Approx(c.beta[b]));
      for (std::size_t g = 0; g < 3; ++g) {
        double want = *c.gamma[g];
        if (static_cast<int>(g) == i - 1) want -= c.beta[g];
        CHECK(hyperbolic::circular_distance(*r.gamma[g], want) < 1e-9);
      }
    }
  }
}

TEST_CASE("twist order matches the rotation order of beta'") {
  // beta_1 = p 2pi/q: tau_{1,2}^q returns to the seed.
  auto jester = AngleVector(6, {12, 7});
  auto c = make_coords(jester, {2 * kPi / 3, kPi, 4 * kPi / 3}, {2 * kPi / 3, 0.0, 2 * kPi / 3});
  auto rep = from_coords(jester, c);
  auto w3 = surface::parse_word("t(1,2)^3", 6);
  CHECK(coords_distance(coords_from_rep(apply_word(rep, w3)), c) < 1e-9);
  auto w1 = surface::parse_word("t(1,2)", 6);
  CHECK(coords_distance(coords_from_rep(apply_word(rep, w1)), c) > 0.1);

  AngleVector bat(5, {12, 7});
  auto cb = make_coords(bat, {2 * kPi / 3, 8 * kPi / 7}, {kPi / 3, 4 * kPi / 7});
  auto rb = from_coords(bat, cb);
  auto w7 = surface::parse_word("t(1,3)^7", 5);
  CHECK(coords_distance(coords_from_rep(apply_word(rb, w7)), cb) < 1e-8);
  for (int k = 1; k < 7; ++k) {
    TwistWord w;
    for (int m = 0; m < k; ++m) w.letters.push_back({{1, 3}, 1});
    CHECK(coords_distance(coords_from_rep(apply_word(rb, w)), cb) > 1e-3);
  }
}

TEST_CASE("fixed-point criterion") {
  // Jester basepoint has C3 = C4, so tau_{3,4} fixes it; the chain is singular nowhere else.
  auto jester = AngleVector(6, {12, 7});
  auto c = make_coords(jester, {2 * kPi / 3, kPi, 4 * kPi / 3}, {2 * kPi / 3, 0.0, 2 * kPi / 3});
  auto rep = from_coords(jester, c);
  CHECK(coords_distance(coords_from_rep(twist_algebraic(rep, {3, 4})), c) < 1e-9);
  CHECK(coords_distance(twist_geometric(jester, c, {3, 4}), c) < 1e-9);
  CHECK(coords_distance(coords_from_rep(twist_algebraic(rep, {2, 3})), c) > 1e-3);

  // A regular chain is moved by every generator.
  auto alpha = testutil::random_alpha(5);
  auto r = testutil::random_coords(alpha);
  auto rr = from_coords(alpha, r);
  for (const auto& g : surface::generator_set(5)) CHECK(coords_distance(coords_from_rep(twist_algebraic(rr, g)), r) > 1e-6);
}

TEST_CASE("dual-path agreement on random inputs") {
  double worst = 0.0;
  for (int k = 0; k < 300; ++k) {
    int n = 4 + k % 3;
    auto alpha = testutil::random_alpha(n);
    auto c = testutil::random_coords(alpha);
    auto gens = surface::generator_set(n);
    auto g = gens[k % gens.size()];
    int e = (k / 7) % 2 ? -1 : 1;
    auto alg = coords_from_rep(twist_algebraic(from_coords(alpha, c), g, e));
    auto geo = twist_geometric(alpha, c, g, e);
    worst = std::max(worst, coords_distance(alg, geo));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("coords_distance") {
  chains::ActionAngle a, b;
  a.beta = b.beta = {1.0};
  a.gamma = {0.01};
  b.gamma = {2 * kPi - 0.01};
  a.degenerate = b.degenerate = {false, false};
  CHECK(coords_distance(a, b) == doctest::Approx(0.02));
  b.gamma = {std::nullopt};
  CHECK(std::isinf(coords_distance(a, b)));
}

TEST_CASE("solve_asa") {
  hyperbolic::HPoint p{0, 1}, q{0, 3};
  double A = 0.6, B = 0.7;
  auto r = solve_asa(p, q, A, B);
  // The third angle satisfies the angle-side relations.
  double c = hyperbolic::distance(p, q);
  double C = std::acos(-std::cos(A) * std::cos(B) + std::sin(A) * std::sin(B) * std::cosh(c));
  CHECK(r.angle == doctest::Approx(C));
  CHECK(hyperbolic::distance(p, r.third) == doctest::Approx(hyperbolic::side_from_angles(A, C, B)));
  auto same = solve_asa(p, p, A, B);
  CHECK(same.angle == doctest::Approx(kPi - A - B));
}
