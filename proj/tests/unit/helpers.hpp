#pragma once

#include <cmath>
#include <random>

#include "orbitforge/chains.hpp"
#include "orbitforge/hyperbolic.hpp"

namespace testutil {

using orbitforge::chains::ActionAngle;
using orbitforge::chains::AngleVector;
using orbitforge::chains::RationalAngle;
using orbitforge::hyperbolic::HPoint;
using orbitforge::hyperbolic::Isometry;

inline constexpr double kPi = orbitforge::hyperbolic::kPi;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline HPoint random_point() { return {uniform(-3.0, 3.0), std::exp(uniform(-1.5, 1.5))}; }

inline Isometry random_isometry() {
  // a d - b c = 1 with a, b, c random.
  double a = uniform(0.3, 2.0), b = uniform(-2.0, 2.0), c = uniform(-2.0, 2.0);
  return Isometry(a, b, c, (1.0 + b * c) / a);
}

// Random alpha satisfying the angle condition, denominators 60.
inline AngleVector random_alpha(int n) {
  const long long den = 60;
  std::uniform_int_distribution<long long> d(2 * den * (n - 1) / n + 1, 2 * den - 1);
  while (true) {
    AngleVector a;
    long long sum = 0;
    for (int k = 0; k < n; ++k) {
      a.emplace_back(d(rng()), den);
      sum += a.back().num * (den / a.back().den);
    }
    if (sum > 2 * den * (n - 1)) return a;
  }
}

// Interior point of the moment polytope with uniform gammas.
inline ActionAngle random_coords(const AngleVector& alpha) {
  const std::size_t n = alpha.size();
  double lam = orbitforge::chains::validate_alpha(alpha);
  std::vector<double> w(n - 2);
  double total = 0;
  for (auto& x : w) total += (x = uniform(0.05, 1.0));
  auto a = orbitforge::chains::values(alpha);
  std::vector<double> beta(n - 3);
  beta[0] = lam * w[0] / total + 4 * kPi - a[0] - a[1];
  for (std::size_t t = 1; t + 3 < n; ++t) beta[t] = beta[t - 1] + lam * w[t] / total + 2 * kPi - a[t + 1];
  std::vector<std::optional<double>> gamma(n - 3);
  for (auto& g : gamma) g = uniform(0.0, 2 * kPi);
  return orbitforge::chains::make_coords(alpha, beta, gamma);
}

}  // namespace testutil
