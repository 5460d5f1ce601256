#include <doctest.h>

#include "helpers.hpp"
#include "orbitforge/errors.hpp"
#include "orbitforge/representation.hpp"
#include "orbitforge/surface.hpp"

using namespace orbitforge;
using namespace orbitforge::surface;

TEST_CASE("generator_set sizes and contents") {
  CHECK(generator_set(4) == std::vector<TwistGen>{{1, 2}, {2, 3}});
  CHECK(generator_set(5) == std::vector<TwistGen>{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(generator_set(6).size() == 9);
  for (int n = 4; n <= 12; ++n) CHECK(generator_set(n).size() == static_cast<std::size_t>((n - 1) * (n - 2) / 2 - 1));
  CHECK_THROWS_AS(generator_set(3), DomainError);
}

TEST_CASE("parse_word") {
  CHECK(parse_word("t(2,3)", 4).letters == std::vector<Letter>{{{2, 3}, 1}});
  auto w = parse_word("t(1,2)^2 t(1,3)", 5);
  CHECK(w.letters == std::vector<Letter>{{{1, 2}, 1}, {{1, 2}, 1}, {{1, 3}, 1}});
  CHECK(parse_word("t(2,4)^-2", 5).letters == std::vector<Letter>{{{2, 4}, -1}, {{2, 4}, -1}});
  CHECK(parse_word("[rho]", 5).empty());
  CHECK(parse_word("", 5).empty());
  CHECK(parse_word("t(1,2)^0", 5).empty());
  CHECK_THROWS_AS(parse_word("t(1,5)", 5), IndexError);
  CHECK_THROWS_AS(parse_word("t(1,4)", 5), IndexError);  // (1, n-1) is excluded
  CHECK_THROWS_AS(parse_word("t(3,2)", 5), IndexError);
  try {
    parse_word("t(1,2)t(2,", 5);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 10);
  }
  CHECK_THROWS_AS(parse_word("x(1,2)", 5), ParseError);
}

TEST_CASE("format_word round trip") {
  for (const char* s : {"t(1,2)^2t(1,3)", "t(2,3)t(2,4)t(1,3)^-1", "[rho]", "t(3,4)"}) {
    auto w = parse_word(s, 5);
    CHECK(format_word(w) == s);
    CHECK(parse_word(format_word(w), 5) == w);
  }
  auto w = parse_word("t(1,2)t(2,3)^-1", 5);
  CHECK(w + w.inverse() == parse_word("t(1,2)t(2,3)^-1t(2,3)t(1,2)^-1", 5));
}

TEST_CASE("sigma_to_tau base cases") {
  CHECK(sigma_to_tau(2, 3, 5) == parse_word("t(2,3)", 5));
  // tau_{1,3} = sigma_{1,2} sigma_{1,3} sigma_{2,3}
  CHECK(sigma_to_tau(1, 3, 5) == parse_word("t(1,2)^-1t(1,3)t(2,3)^-1", 5));
  CHECK_THROWS_AS(sigma_to_tau(2, 2, 5), IndexError);
}

namespace {

// tau_{i,j} rebuilt from the sigma words: (sigma_{i,i+1}...sigma_{i,j})...(sigma_{j-1,j}).
TwistWord tau_from_sigmas(int i, int j, int n) {
  TwistWord w;
  for (int a = i; a < j; ++a) {
    for (int b = a + 1; b <= j; ++b) w = w + sigma_to_tau(a, b, n);
  }
  return w;
}

}  // namespace

TEST_CASE("sigma words reproduce tau on representations") {
  using namespace orbitforge::representation;
  for (int n = 4; n <= 6; ++n) {
    auto alpha = testutil::random_alpha(n);
    auto coords = testutil::random_coords(alpha);
    auto rep = from_coords(alpha, coords);
    for (int i = 1; i < n - 1; ++i) {
      for (int j = i + 1; j <= n - 1; ++j) {
        auto via_sigma = coords_from_rep(apply_word(rep, tau_from_sigmas(i, j, n)));
        auto direct = (i == 1 && j == n - 1) ? coords : coords_from_rep(twist_algebraic(rep, {i, j}));
        CHECK(coords_distance(via_sigma, direct) < 1e-7);
      }
    }
  }
}

TEST_CASE("every fixture word parses") {
  for (const char* s : {"t(1,2)t(1,3)t(3,4)", "t(1,2)^2t(2,4)t(1,2)", "t(2,3)t(2,4)t(1,3)t(3,4)t(2,3)",
                        "t(1,2)t(2,5)t(3,5)"}) {
    CHECK_NOTHROW(parse_word(s, 6));
  }
}
