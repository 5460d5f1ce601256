#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "orbitforge/errors.hpp"
#include "orbitforge/io.hpp"
#include "orbitforge/orbits.hpp"

using namespace orbitforge;
using namespace orbitforge::orbits;
using testutil::kPi;

namespace {

// Basepoint of a golden table in the library convention.
ActionAngle table_seed(const GoldenTable& t) {
  ActionAngle b = t.basepoint;
  for (auto& g : b.gamma) {
    if (g) g = hyperbolic::wrap_2pi(t.gamma_sign * *g);
  }
  return chains::make_coords(t.alpha, b.beta, b.gamma);
}

struct Seeded {
  AngleVector alpha;
  ActionAngle seed;
  std::size_t length = 0;
};

Seeded seeded(const io::json& j) {
  Seeded s;
  const auto& src = j.contains("seed") ? j.at("seed") : j;
  for (const auto& a : src.at("alpha")) s.alpha.push_back(io::exact_angle_from_json(a));
  std::vector<double> beta;
  std::vector<std::optional<double>> gamma;
  for (const auto& b : src.at("beta")) beta.push_back(io::angle_from_json(b));
  for (const auto& g : src.at("gamma")) {
    if (g.is_null()) {
      gamma.emplace_back();
    } else {
      gamma.emplace_back(io::angle_from_json(g));
    }
  }
  s.seed = chains::make_coords(s.alpha, beta, gamma);
  s.length = j.at("length").get<std::size_t>();
  return s;
}

ActionAngle jester_seed() {
  return chains::make_coords(AngleVector(6, {12, 7}), {2 * kPi / 3, kPi, 4 * kPi / 3},
                             {2 * kPi / 3, 0.0, 2 * kPi / 3});
}

}  // namespace

TEST_CASE("grid and canonical keys") {
  double g = grid_for(1e-6);
  CHECK(g >= 8e-6);
  CHECK(g < 8.1e-6);
  CHECK(std::abs(std::remainder(2 * kPi, g)) < 1e-9);
  CHECK_THROWS_AS(grid_for(0.0), DomainError);

  ActionAngle a;
  a.beta = {1.0};
  a.gamma = {1e-9};
  a.degenerate = {false, false};
  ActionAngle b = a;
  b.gamma = {2 * kPi - 1e-9};
  CHECK(canonicalize(a, 1e-6) == canonicalize(b, 1e-6));
  b.gamma = {0.5};
  CHECK_FALSE(canonicalize(a, 1e-6) == canonicalize(b, 1e-6));
  ActionAngle c = a;
  c.gamma = {std::nullopt};
  c.degenerate = {false, true};
  CHECK(canonicalize(c, 1e-6).cells.size() == 1);
}

TEST_CASE("jester's hat orbit is finite with 40 points") {
  auto r = enumerate(AngleVector(6, {12, 7}), jester_seed());
  CHECK(r.status == Status::Finite);
  CHECK(r.points.size() == 40);
  std::size_t total = 0;
  for (auto l : r.layers) total += l;
  CHECK(total == 40);
  CHECK(r.layers.front() == 1);
}

TEST_CASE("enumeration is deterministic and thread count does not matter") {
  AngleVector jester(6, {12, 7});
  auto a = enumerate(jester, jester_seed());
  auto b = enumerate(jester, jester_seed());
  OrbitOptions four;
  four.threads = 4;
  auto c = enumerate(jester, jester_seed(), four);
  REQUIRE(a.points.size() == b.points.size());
  REQUIRE(a.points.size() == c.points.size());
  for (std::size_t k = 0; k < a.points.size(); ++k) {
    CHECK(representation::coords_distance(a.points[k].coords, b.points[k].coords) == 0.0);
    CHECK(a.points[k].word == b.points[k].word);
    CHECK(representation::coords_distance(a.points[k].coords, c.points[k].coords) == 0.0);
    CHECK(a.points[k].word == c.points[k].word);
  }
  CHECK(a.layers == c.layers);
}

TEST_CASE("re-seeding at any orbit point gives the same orbit") {
  AngleVector jester(6, {12, 7});
  auto a = enumerate(jester, jester_seed());
  for (std::size_t k : {std::size_t{3}, std::size_t{17}, std::size_t{39}}) {
    auto b = enumerate(jester, a.points[k].coords);
    REQUIRE(b.points.size() == a.points.size());
    for (const auto& p : a.points) {
      double best = 1e9;
      for (const auto& q : b.points) best = std::min(best, representation::coords_distance(p.coords, q.coords));
      CHECK(best < 1e-8);
    }
  }
}

TEST_CASE("witness words replay to their points") {
  AngleVector jester(6, {12, 7});
  auto r = enumerate(jester, jester_seed());
  auto rho = representation::from_coords(jester, jester_seed());
  for (const auto& p : r.points) {
    auto got = representation::coords_from_rep(representation::apply_word(rho, p.word));
    CHECK(representation::coords_distance(got, p.coords) < 1e-8);
    CHECK(static_cast<int>(p.word.size()) == p.discovered_at);
  }
}

TEST_CASE("golden tables verify") {
  for (const char* name : {"jester_12pi7.json", "jester_7pi4.json", "hang_glider.json", "sand_clock.json", "bat.json"}) {
    CAPTURE(name);
    auto t = io::load_table(name);
    auto r = enumerate(t.alpha, table_seed(t));
    CHECK(r.status == Status::Finite);
    REQUIRE(t.expected_length);
    CHECK(r.points.size() == *t.expected_length);
    auto v = verify_against_table(r, t);
    CHECK(v.ok());
    CHECK(v.matched == t.rows.size());
    CHECK(v.max_replay_error < 1e-8);
  }
  auto bat = io::load_table("bat.json");
  CHECK(replay_table(bat).corrected_rows == 2);
}

TEST_CASE("verify reports a perturbed row") {
  auto t = io::load_table("hang_glider.json");
  auto r = enumerate(t.alpha, table_seed(t));
  t.rows[2].beta[0] += 0.01;
  auto v = verify_against_table(r, t);
  CHECK_FALSE(v.ok());
  CHECK(v.missing.size() == 1);
  CHECK(v.extra.size() == 1);
  CHECK(v.replay_failures.size() == 1);
}

TEST_CASE("beta membership on the jester orbit") {
  auto r = enumerate(AngleVector(6, {12, 7}), jester_seed());
  auto m = beta_membership_check(r);
  CHECK(m.ok());
  CHECK(m.regular_points > 0);
  CHECK(admissible_betas().size() == 15);

  auto bad = r;
  for (auto& p : bad.points) {
    bool regular = std::none_of(p.coords.degenerate.begin(), p.coords.degenerate.end(), [](bool x) { return x; });
    if (regular) {
      p.coords.beta[0] = 1.0;
      break;
    }
  }
  CHECK(beta_membership_check(bad).flagged == 1);
}

TEST_CASE("exceptional n = 4 orbits have the listed lengths") {
  auto j = io::json::parse(io::read_file(io::resolve_data_path("n4_exceptional.json")));
  REQUIRE(j.at("rows").size() == 32);
  std::set<int> sols;
  for (const auto& row : j.at("rows")) {
    auto s = seeded(row);
    CAPTURE(row.at("sol").get<int>());
    sols.insert(row.at("sol").get<int>());
    auto r = enumerate(s.alpha, s.seed);
    CHECK(r.status == Status::Finite);
    CHECK(r.points.size() == s.length);
  }
  CHECK(sols.size() == 32);
}

TEST_CASE("named n = 4 orbits") {
  auto j = io::json::parse(io::read_file(io::resolve_data_path("n4_orbits.json")));
  for (const auto& o : j.at("orbits")) {
    CAPTURE(o.at("name").get<std::string>());
    auto s = seeded(o);
    auto r = enumerate(s.alpha, s.seed);
    CHECK(r.status == Status::Finite);
    CHECK(r.points.size() == s.length);
  }
}

TEST_CASE("a generic point exhausts the budget") {
  AngleVector alpha(6, {12, 7});
  alpha.back() = {11, 7};
  auto seed = chains::make_coords(alpha, {17 * kPi / 28, 13 * kPi / 14, 5 * kPi / 4}, {0.0, 0.0, 0.0});
  OrbitOptions o;
  o.max_points = 2000;
  auto r = enumerate(alpha, seed, o);
  CHECK(r.status == Status::Exhausted);
  CHECK(r.points.size() == 2000);
  CHECK_FALSE(r.note.empty());

  o.max_points = 100000;
  o.max_layers = 3;
  auto l = enumerate(alpha, seed, o);
  CHECK(l.status == Status::Exhausted);
  CHECK(l.layers.size() == 4);
}

TEST_CASE("enumerate input errors") {
  CHECK_THROWS_AS(enumerate(AngleVector(6, {1, 1}), jester_seed()), NotDTError);
  OrbitOptions o;
  o.generators = {{1, 5}};
  CHECK_THROWS_AS(enumerate(AngleVector(6, {12, 7}), jester_seed(), o), IndexError);
}
