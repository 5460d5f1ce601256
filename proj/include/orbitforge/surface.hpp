#pragma once

#include <string>
#include <vector>

namespace orbitforge::surface {

// Dehn twist about the curve enclosing punctures i..j (1-based).
struct TwistGen {
  int i = 1;
  int j = 2;

  friend bool operator==(const TwistGen&, const TwistGen&) = default;
  friend auto operator<=>(const TwistGen&, const TwistGen&) = default;
};

struct Letter {
  TwistGen gen;
  int exp = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Letters act left to right: the leftmost letter is applied first.
struct TwistWord {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  TwistWord inverse() const;
  TwistWord operator+(const TwistWord& o) const;

  friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

bool valid_gen(const TwistGen& g, int n);
void check_gen(const TwistGen& g, int n);

// tau_{i,j} for 1 <= i < j <= n-1, (i,j) != (1,n-1), ordered lexicographically.
std::vector<TwistGen> generator_set(int n);

// sigma_{i,j} written in the tau generators.
TwistWord sigma_to_tau(int i, int j, int n);

// Grammar: (t(i,j)[^k])* with optional whitespace; k may be negative. "[rho]" and
// "" both mean the empty word.
TwistWord parse_word(const std::string& text, int n);
// Inverse of parse_word; consecutive equal letters are folded into a power and the
// empty word prints as "[rho]".
std::string format_word(const TwistWord& w);

}  // namespace orbitforge::surface
