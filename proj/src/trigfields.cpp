#include "orbitforge/trigfields.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "orbitforge/errors.hpp"

namespace orbitforge::trigfields {

using hyperbolic::kPi;

CosValue::CosValue(long long pp, long long qq) {
  if (qq <= 0) throw DomainError("cos value needs a positive denominator");
  long long r = ((pp % qq) + qq) % qq;
  if (2 * r > qq) r = qq - r;
  Fraction f(r, qq);
  p = f.numerator();
  q = f.denominator();
}

double CosValue::value() const { return 2.0 * std::cos(2.0 * kPi * static_cast<double>(p) / static_cast<double>(q)); }

long long euler_phi(long long m) {
  long long result = m;
  for (long long d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    while (m % d == 0) m /= d;
    result -= result / d;
  }
  if (m > 1) result -= result / m;
  return result;
}

int field_degree(const FieldSpec& spec) {
  if (spec.N < 3) throw DomainError("field parameter N must be at least 3");
  return static_cast<int>(euler_phi(2LL * spec.N) / 2);
}

bool member(const CosValue& x, const FieldSpec& spec) {
  if (spec.N < 3) throw DomainError("field parameter N must be at least 3");
  const long long two_n = 2LL * spec.N;
  const long long L = std::lcm(x.q, two_n);
  const long long t = x.p * (L / x.q) % L;
  for (long long k = 1; k < L; ++k) {
    long long r = k % two_n;
    if (r != 1 && r != two_n - 1) continue;
    if (std::gcd(k, L) != 1) continue;
    long long kt = (k * t) % L;
    if (kt != t && kt != (L - t) % L) return false;
  }
  return true;
}

std::vector<RationalAngle> list_angles(const FieldSpec& spec) {
  const long long D = field_degree(spec);
  std::vector<RationalAngle> out;
  // phi(m) >= sqrt(m/2), so phi(m) <= 2D forces m <= 8D^2.
  for (long long m = 3; m <= 8 * D * D; ++m) {
    if (euler_phi(m) > 2 * D) continue;
    for (long long p = 1; 2 * p < m; ++p) {
      if (std::gcd(p, m) != 1) continue;
      if (member(CosValue(p, m), spec)) out.emplace_back(4 * p, m);
    }
  }
  std::sort(out.begin(), out.end(), [](const RationalAngle& a, const RationalAngle& b) { return a.coeff() < b.coeff(); });
  return out;
}

Trajectory preper_orbit(const CosValue& x, const FieldSpec& spec) {
  Trajectory tr;
  CosValue cur = x;
  while (true) {
    auto it = std::find_if(tr.steps.begin(), tr.steps.end(), [&](const TrajectoryStep& s) { return s.x == cur; });
    if (it != tr.steps.end()) {
      tr.cycle_start = static_cast<std::size_t>(it - tr.steps.begin());
      return tr;
    }
    tr.steps.push_back({cur, member(cur, spec)});
    cur = CosValue(2 * cur.p, cur.q);
  }
}

int intersection_N(int a, int b) {
  if (a < 3 || b < 3) throw DomainError("field parameters must be at least 3");
  return std::max(std::gcd(a, b), 3);
}

bool is_hyperbolic_triple(const Fraction& p, const Fraction& q, const Fraction& r) {
  return Fraction(1) / p + Fraction(1) / q + Fraction(1) / r < Fraction(1);
}

namespace {

bool is_int(const Fraction& f) { return f.denominator() == 1; }

bool matches_row(const Fraction& x, const Fraction& y, const Fraction& z) {
  const Fraction half(1, 2);
  // (a, b, c)
  if (is_int(x) && is_int(y) && is_int(z)) return true;
  // (a/2, b, b) with 1/a + 1/b < 1/2
  if (is_int(Fraction(2) * x) && is_int(y) && y == z && Fraction(1) / (Fraction(2) * x) + Fraction(1) / y < half) return true;
  // (2, a/2, a), (a/2, a, a), (3, a/3, a), (a/4, a, a), (a/2, a/2, a/2) with a >= 7
  if (is_int(z) && z >= Fraction(7)) {
    if (x == Fraction(2) && y == z / Fraction(2)) return true;
    if (x == z / Fraction(2) && y == z) return true;
    if (x == Fraction(3) && y == z / Fraction(3)) return true;
    if (x == z / Fraction(4) && y == z) return true;
  }
  if (x == y && y == z && is_int(Fraction(2) * x) && 2 * x >= Fraction(7)) return true;
  return x == Fraction(3) && y == Fraction(7, 2) && z == Fraction(7);
}

}  // namespace

bool is_discrete_triangle(const Fraction& p, const Fraction& q, const Fraction& r) {
  if (p <= Fraction(0) || q <= Fraction(0) || r <= Fraction(0)) throw DomainError("triangle parameters must be positive");
  if (!is_hyperbolic_triple(p, q, r)) return false;
  std::array<Fraction, 3> v{p, q, r};
  std::sort(v.begin(), v.end());
  do {
    if (matches_row(v[0], v[1], v[2])) return true;
  } while (std::next_permutation(v.begin(), v.end()));
  return false;
}

std::optional<RationalAngle> recognize_rational_angle(double x, int max_den, double tol) {
  for (int q = 1; q <= max_den; ++q) {
    double s = x * q / kPi;
    auto p = static_cast<long long>(std::llround(s));
    if (std::abs(x - kPi * static_cast<double>(p) / q) < tol) return RationalAngle(p, q);
  }
  return std::nullopt;
}

}  // namespace orbitforge::trigfields
