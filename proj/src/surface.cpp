#include "orbitforge/surface.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <utility>

#include "orbitforge/errors.hpp"

namespace orbitforge::surface {

TwistWord TwistWord::inverse() const {
  TwistWord out;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back({it->gen, -it->exp});
  return out;
}

TwistWord TwistWord::operator+(const TwistWord& o) const {
  TwistWord out = *this;
  out.letters.insert(out.letters.end(), o.letters.begin(), o.letters.end());
  return out;
}

bool valid_gen(const TwistGen& g, int n) {
  return g.i >= 1 && g.i < g.j && g.j <= n - 1 && !(g.i == 1 && g.j == n - 1);
}

void check_gen(const TwistGen& g, int n) {
  if (!valid_gen(g, n)) {
    throw IndexError("twist t(" + std::to_string(g.i) + "," + std::to_string(g.j) +
                     ") is not a generator for n=" + std::to_string(n));
  }
}

std::vector<TwistGen> generator_set(int n) {
  if (n < 4) throw DomainError("the pure mapping class group acts trivially for n < 4");
  std::vector<TwistGen> out;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 1; j <= n - 1; ++j) {
      if (i == 1 && j == n - 1) continue;
      out.push_back({i, j});
    }
  }
  return out;
}

namespace {

// tau_{i,j} = (s_{i,i+1}...s_{i,j-1}) s_{i,j} R with R = prod_{k=i+1}^{j-1} (s_{k,k+1}...s_{k,j}),
// solved for s_{i,j} recursively. tau_{1,n-1} is trivial and drops out.
TwistWord sigma_rec(int i, int j, int n, std::map<std::pair<int, int>, TwistWord>& memo) {
  auto key = std::make_pair(i, j);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  TwistWord out;
  if (j == i + 1) {
    if (!(i == 1 && j == n - 1)) out.letters.push_back({{i, j}, 1});
  } else {
    TwistWord a;
    for (int m = i + 1; m < j; ++m) a = a + sigma_rec(i, m, n, memo);
    TwistWord r;
    for (int k = i + 1; k < j; ++k) {
      for (int m = k + 1; m <= j; ++m) r = r + sigma_rec(k, m, n, memo);
    }
    TwistWord tau;
    if (!(i == 1 && j == n - 1)) tau.letters.push_back({{i, j}, 1});
    out = a.inverse() + tau + r.inverse();
  }
  memo[key] = out;
  return out;
}

}  // namespace

TwistWord sigma_to_tau(int i, int j, int n) {
  if (!(i >= 1 && i < j && j <= n - 1)) {
    throw IndexError("sigma(" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  }
  std::map<std::pair<int, int>, TwistWord> memo;
  return sigma_rec(i, j, n, memo);
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos);
    }
    ++pos;
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw ParseError("expected integer", start);
    if (pos - digits > 6) throw ParseError("integer too large", start);
    return std::strtol(s.substr(start, pos - start).c_str(), nullptr, 10);
  }
};

}  // namespace

TwistWord parse_word(const std::string& text, int n) {
  Cursor cur{text};
  TwistWord out;
  cur.skip_ws();
  if (text.compare(cur.pos, 5, "[rho]") == 0) {
    cur.pos += 5;
    if (!cur.done()) throw ParseError("trailing input after [rho]", cur.pos);
    return out;
  }
  while (!cur.done()) {
    std::size_t at = cur.pos;
    cur.expect('t');
    cur.expect('(');
    long i = cur.integer();
    cur.expect(',');
    long j = cur.integer();
    cur.expect(')');
    long k = 1;
    if (cur.accept('^')) k = cur.integer();
    TwistGen g{static_cast<int>(i), static_cast<int>(j)};
    if (!valid_gen(g, n)) {
      throw IndexError("t(" + std::to_string(i) + "," + std::to_string(j) +
                       ") at position " + std::to_string(at) + " is not a generator for n=" +
                       std::to_string(n));
    }
    int e = k < 0 ? -1 : 1;
    for (long r = 0; r < std::labs(k); ++r) out.letters.push_back({g, e});
  }
  return out;
}

std::string format_word(const TwistWord& w) {
  if (w.empty()) return "[rho]";
  std::string out;
  std::size_t a = 0;
  while (a < w.letters.size()) {
    std::size_t b = a;
    while (b < w.letters.size() && w.letters[b] == w.letters[a]) ++b;
    long k = static_cast<long>(b - a) * w.letters[a].exp;
    out += "t(" + std::to_string(w.letters[a].gen.i) + "," + std::to_string(w.letters[a].gen.j) + ")";
    if (k != 1) out += "^" + std::to_string(k);
    a = b;
  }
  return out;
}

}  // namespace orbitforge::surface
