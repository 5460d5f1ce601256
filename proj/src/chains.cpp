#include "orbitforge/chains.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "orbitforge/errors.hpp"

namespace orbitforge::chains {

using hyperbolic::circular_distance;
using hyperbolic::direction;
using hyperbolic::distance;
using hyperbolic::kPi;
using hyperbolic::kTwoPi;
using hyperbolic::shoot;
using hyperbolic::side_from_angles;
using hyperbolic::wrap_2pi;
using hyperbolic::wrap_pi;

RationalAngle::RationalAngle(long long n, long long d) {
  if (d == 0) throw DomainError("zero denominator");
  Fraction f(n, d);
  num = f.numerator();
  den = f.denominator();
}

RationalAngle RationalAngle::from_fraction(const Fraction& f) { return {f.numerator(), f.denominator()}; }

double RationalAngle::value() const { return kPi * static_cast<double>(num) / static_cast<double>(den); }

std::string RationalAngle::str() const {
  if (num == 0) return "0";
  std::string s;
  if (num == -1) {
    s = "-pi";
  } else if (num == 1) {
    s = "pi";
  } else {
    s = std::to_string(num) + "pi";
  }
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

bool in_open_circle(const RationalAngle& a) { return a.num > 0 && a.num < 2 * a.den; }

std::vector<double> values(const AngleVector& a) {
  std::vector<double> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(x.value());
  return out;
}

Fraction lambda_coeff(const AngleVector& alpha) {
  Fraction s(0);
  for (const auto& a : alpha) s += a.coeff();
  return s - Fraction(2 * (static_cast<long long>(alpha.size()) - 1));
}

double validate_alpha(const AngleVector& alpha) {
  if (alpha.size() < 4) throw DomainError("need at least 4 punctures");
  for (const auto& a : alpha) {
    if (!in_open_circle(a)) throw DomainError("peripheral angle " + a.str() + " outside (0, 2pi)");
  }
  Fraction lam = lambda_coeff(alpha);
  if (lam <= Fraction(0)) {
    throw NotDTError("angle condition fails: lambda = " + RationalAngle::from_fraction(lam).str());
  }
  return RationalAngle::from_fraction(lam).value();
}

std::vector<double> moment_polytope_check(const AngleVector& alpha, const std::vector<double>& beta) {
  const std::size_t n = alpha.size();
  if (beta.size() + 3 != n) throw DomainError("beta must have n-3 entries");
  auto a = values(alpha);
  std::vector<double> s(n - 2);
  s[0] = beta[0] - (4.0 * kPi - a[0] - a[1]);
  for (std::size_t t = 1; t + 1 < n - 2; ++t) s[t] = beta[t] - beta[t - 1] - (kTwoPi - a[t + 1]);
  s[n - 3] = a[n - 2] + a[n - 1] - kTwoPi - beta[n - 4];
  return s;
}

std::vector<Fraction> moment_polytope_check_exact(const AngleVector& alpha,
                                                  const std::vector<Fraction>& beta) {
  const std::size_t n = alpha.size();
  if (beta.size() + 3 != n) throw DomainError("beta must have n-3 entries");
  std::vector<Fraction> s(n - 2);
  s[0] = beta[0] - (Fraction(4) - alpha[0].coeff() - alpha[1].coeff());
  for (std::size_t t = 1; t + 1 < n - 2; ++t) {
    s[t] = beta[t] - beta[t - 1] - (Fraction(2) - alpha[t + 1].coeff());
  }
  s[n - 3] = alpha[n - 2].coeff() + alpha[n - 1].coeff() - Fraction(2) - beta[n - 4];
  return s;
}

std::vector<bool> degeneracy_mask(const AngleVector& alpha, const std::vector<double>& beta, double tol) {
  auto s = moment_polytope_check(alpha, beta);
  std::vector<bool> m(s.size());
  for (std::size_t t = 0; t < s.size(); ++t) m[t] = s[t] <= tol;
  return m;
}

std::vector<bool> gamma_slots(const std::vector<bool>& mask) {
  std::vector<bool> out(mask.size() - 1, false);
  bool seen_regular = false;
  for (std::size_t g = 0; g + 1 < mask.size(); ++g) {
    if (!mask[g]) seen_regular = true;
    out[g] = seen_regular && !mask[g + 1];
  }
  return out;
}

std::vector<TriangleAngles> triangle_angles(const AngleVector& alpha, const std::vector<double>& beta) {
  const std::size_t n = alpha.size();
  auto a = values(alpha);
  std::vector<TriangleAngles> out(n - 2);
  out[0] = {kPi - a[0] / 2, kPi - a[1] / 2, kPi - beta[0] / 2};
  for (std::size_t t = 1; t + 1 < n - 2; ++t) {
    out[t] = {beta[t - 1] / 2, kPi - a[t + 1] / 2, kPi - beta[t] / 2};
  }
  out[n - 3] = {beta[n - 4] / 2, kPi - a[n - 2] / 2, kPi - a[n - 1] / 2};
  return out;
}

Triangle triangle(const TriangleChain& ch, std::size_t t) {
  const std::size_t n = ch.n();
  HPoint f = t == 0 ? ch.exterior[0] : ch.shared[t - 1];
  HPoint h = t + 3 == n ? ch.exterior[n - 1] : ch.shared[t];
  return {f, ch.exterior[t + 1], h};
}

namespace {

// Sum of the straight-angle corrections (2pi - alpha_{m+1}) over degenerate triangles
// p+1..t-1 sitting between regular triangles p and t.
double run_offset(const std::vector<double>& a, std::size_t p, std::size_t t) {
  double s = 0.0;
  for (std::size_t m = p + 1; m < t; ++m) s += kTwoPi - a[m + 1];
  return s;
}

double angle_at(const HPoint& v, const HPoint& p, const HPoint& q) {
  return circular_distance(direction(v, p), direction(v, q));
}

bool coincide(const HPoint& p, const HPoint& q) { return distance(p, q) < kCoincideTol; }

bool collapsed(const Triangle& tr) {
  return coincide(tr.first, tr.second) && coincide(tr.first, tr.third) && coincide(tr.second, tr.third);
}

}  // namespace

ActionAngle make_coords(const AngleVector& alpha, std::vector<double> beta,
                        std::vector<std::optional<double>> gamma) {
  const std::size_t n = alpha.size();
  if (beta.size() + 3 != n) throw DomainError("beta must have n-3 entries");
  if (gamma.size() + 3 != n) throw DomainError("gamma must have n-3 entries");
  ActionAngle c;
  c.beta = std::move(beta);
  c.degenerate = degeneracy_mask(alpha, c.beta);
  auto slots = gamma_slots(c.degenerate);
  c.gamma.resize(n - 3);
  for (std::size_t g = 0; g + 3 < n; ++g) {
    if (!slots[g]) continue;
    if (!gamma[g]) throw DomainError("gamma_" + std::to_string(g + 1) + " is required at this junction");
    c.gamma[g] = wrap_2pi(*gamma[g]);
  }
  return c;
}

TriangleChain build_chain(const AngleVector& alpha, const ActionAngle& coords) {
  const std::size_t n = alpha.size();
  if (n < 4) throw DomainError("need at least 4 punctures");
  if (coords.beta.size() + 3 != n) throw DomainError("beta must have n-3 entries");
  auto slack = moment_polytope_check(alpha, coords.beta);
  for (std::size_t t = 0; t < slack.size(); ++t) {
    if (slack[t] < -1e-9) {
      throw PolytopeViolation("beta outside the moment polytope at triangle " + std::to_string(t + 1));
    }
  }
  auto mask = degeneracy_mask(alpha, coords.beta);
  auto slots = gamma_slots(mask);
  auto a = values(alpha);
  auto ang = triangle_angles(alpha, coords.beta);

  TriangleChain ch;
  ch.exterior.assign(n, HPoint{0.0, 1.0});
  ch.shared.assign(n - 3, HPoint{0.0, 1.0});

  HPoint first{0.0, 1.0};
  std::optional<std::size_t> last_regular;
  for (std::size_t t = 0; t + 2 < n; ++t) {
    HPoint second = first;
    HPoint third = first;
    if (!mask[t]) {
      double d = kPi / 2;
      if (last_regular) {
        std::size_t p = *last_regular;
        if (!slots[t - 1] || !coords.gamma[t - 1]) {
          throw DomainError("gamma_" + std::to_string(t) + " missing for a regular junction");
        }
        d = direction(first, ch.exterior[p + 1]) + run_offset(a, p, t) - *coords.gamma[t - 1];
      }
      const auto& A = ang[t];
      second = shoot(first, d, side_from_angles(A.first, A.second, A.third));
      third = shoot(first, d - A.first, side_from_angles(A.first, A.third, A.second));
      last_regular = t;
    }
    ch.exterior[t + 1] = second;
    if (t == 0) ch.exterior[0] = first;
    if (t + 3 == n) {
      ch.exterior[n - 1] = third;
    } else {
      ch.shared[t] = third;
    }
    first = third;
  }
  return ch;
}

std::vector<std::optional<double>> measure_gamma(const TriangleChain& ch, const AngleVector& alpha,
                                                 const std::vector<bool>& mask) {
  const std::size_t n = alpha.size();
  auto a = values(alpha);
  auto slots = gamma_slots(mask);
  std::vector<std::optional<double>> out(n - 3);
  std::optional<std::size_t> last_regular;
  for (std::size_t t = 0; t + 2 < n; ++t) {
    if (mask[t]) continue;
    if (last_regular && slots[t - 1]) {
      std::size_t p = *last_regular;
      HPoint f = triangle(ch, t).first;
      double ref = direction(f, ch.exterior[p + 1]) + run_offset(a, p, t);
      out[t - 1] = wrap_2pi(ref - direction(f, ch.exterior[t + 1]));
    }
    last_regular = t;
  }
  return out;
}

ActionAngle extract_coords(const TriangleChain& ch, const AngleVector& alpha) {
  const std::size_t n = alpha.size();
  if (ch.exterior.size() != n || ch.shared.size() + 3 != n) throw DomainError("chain size does not match alpha");
  double defect = chain_defect(ch, alpha);
  if (defect > 1e-6) throw ChainInvariantError("chain violates its invariants by " + std::to_string(defect));

  auto a = values(alpha);
  std::vector<bool> geo(n - 2);
  for (std::size_t t = 0; t + 2 < n; ++t) geo[t] = collapsed(triangle(ch, t));

  std::vector<std::optional<double>> beta(n - 3);
  for (std::size_t b = 0; b + 3 < n; ++b) {
    if (!geo[b + 1]) {
      auto tr = triangle(ch, b + 1);
      beta[b] = 2.0 * angle_at(tr.first, tr.second, tr.third);
    } else if (!geo[b]) {
      auto tr = triangle(ch, b);
      beta[b] = kTwoPi - 2.0 * angle_at(tr.third, tr.first, tr.second);
    }
  }
  for (std::size_t t = 0; t + 3 < n; ++t) {
    if (beta[t]) continue;
    beta[t] = t == 0 ? 4.0 * kPi - a[0] - a[1] : *beta[t - 1] + kTwoPi - a[t + 1];
  }
  ActionAngle c;
  for (auto& b : beta) c.beta.push_back(*b);
  c.degenerate = degeneracy_mask(alpha, c.beta);
  c.gamma = measure_gamma(ch, alpha, c.degenerate);
  return c;
}

std::vector<double> triangle_areas(const TriangleChain& ch) {
  std::vector<double> out;
  for (std::size_t t = 0; t + 2 < ch.n(); ++t) {
    auto tr = triangle(ch, t);
    if (collapsed(tr)) {
      out.push_back(0.0);
      continue;
    }
    double s = angle_at(tr.first, tr.second, tr.third) + angle_at(tr.second, tr.first, tr.third) +
               angle_at(tr.third, tr.first, tr.second);
    out.push_back(std::max(0.0, kPi - s));
  }
  return out;
}

double chain_defect(const TriangleChain& ch, const AngleVector& alpha) {
  const std::size_t n = alpha.size();
  auto a = values(alpha);
  double worst = 0.0;
  std::vector<bool> geo(n - 2);
  for (std::size_t t = 0; t + 2 < n; ++t) geo[t] = collapsed(triangle(ch, t));
  for (std::size_t t = 0; t + 2 < n; ++t) {
    if (geo[t]) continue;
    auto tr = triangle(ch, t);
    // Clockwise: the third vertex lies to the right of the first edge.
    double turn = wrap_pi(direction(tr.first, tr.third) - direction(tr.first, tr.second));
    if (turn >= 0.0) worst = std::max(worst, 1.0 + turn);
    double at_second = angle_at(tr.second, tr.first, tr.third);
    worst = std::max(worst, std::abs(at_second - (kPi - a[t + 1] / 2)));
    if (t == 0) worst = std::max(worst, std::abs(angle_at(tr.first, tr.second, tr.third) - (kPi - a[0] / 2)));
    if (t + 3 == n) {
      worst = std::max(worst, std::abs(angle_at(tr.third, tr.first, tr.second) - (kPi - a[n - 1] / 2)));
    }
  }
  // Angles on the two sides of a shared vertex sum to pi when both triangles are regular.
  for (std::size_t b = 0; b + 3 < n; ++b) {
    if (geo[b] || geo[b + 1]) continue;
    auto left = triangle(ch, b);
    auto right = triangle(ch, b + 1);
    double s = angle_at(left.third, left.first, left.second) + angle_at(right.first, right.second, right.third);
    worst = std::max(worst, std::abs(s - kPi));
  }
  return worst;
}

}  // namespace orbitforge::chains
