#pragma once

#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "orbitforge/chains.hpp"

namespace orbitforge::trigfields {

using chains::RationalAngle;
using Fraction = boost::rational<long long>;

// K = Q(cos(pi/N)); N = 3 encodes Q.
struct FieldSpec {
  int N = 3;
};

// The value 2cos(2 pi p/q) with 0 <= p/q <= 1/2.
struct CosValue {
  long long p = 0;
  long long q = 1;

  CosValue() = default;
  CosValue(long long p, long long q);  // reduces and reflects into [0, 1/2]
  double value() const;
  friend bool operator==(const CosValue&, const CosValue&) = default;
};

long long euler_phi(long long m);
int field_degree(const FieldSpec& spec);
bool member(const CosValue& x, const FieldSpec& spec);

// All r in pi*Q inside (0, 2pi) with 2cos(r/2) in K, sorted.
std::vector<RationalAngle> list_angles(const FieldSpec& spec);

struct TrajectoryStep {
  CosValue x;
  bool in_field = false;
};
struct Trajectory {
  std::vector<TrajectoryStep> steps;  // forward orbit up to the first repeat
  std::size_t cycle_start = 0;        // index of the first periodic value
};
// Forward orbit under f(x) = x^2 - 2, which doubles the angle.
Trajectory preper_orbit(const CosValue& x, const FieldSpec& spec);

// Q(cos(pi/a)) ∩ Q(cos(pi/b)) = Q(cos(pi/gcd)), clamped to 3 for Q.
int intersection_N(int a, int b);

// Felikson's list of discrete hyperbolic triangle groups, matched up to permutation.
// Triples that are not hyperbolic are not discrete triangle groups and return false.
bool is_discrete_triangle(const Fraction& p, const Fraction& q, const Fraction& r);
bool is_hyperbolic_triple(const Fraction& p, const Fraction& q, const Fraction& r);

// Smallest-denominator p/q with q <= max_den and |x - p pi/q| < tol.
std::optional<RationalAngle> recognize_rational_angle(double x, int max_den, double tol);

}  // namespace orbitforge::trigfields
