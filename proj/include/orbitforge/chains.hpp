#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "orbitforge/hyperbolic.hpp"

namespace orbitforge::chains {

using Fraction = boost::rational<long long>;
using hyperbolic::HPoint;

// num/den * pi, reduced, den > 0.
struct RationalAngle {
  long long num = 0;
  long long den = 1;

  RationalAngle() = default;
  RationalAngle(long long num, long long den);
  static RationalAngle from_fraction(const Fraction& f);

  Fraction coeff() const { return Fraction(num, den); }
  double value() const;
  std::string str() const;  // "12pi/7", "pi", "0"

  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;
};

bool in_open_circle(const RationalAngle& a);  // 0 < a < 2pi

using AngleVector = std::vector<RationalAngle>;
std::vector<double> values(const AngleVector& a);

// Optional gamma entries are absent at degenerate junctions; they are never stored as 0.
struct ActionAngle {
  std::vector<double> beta;
  std::vector<std::optional<double>> gamma;
  std::vector<bool> degenerate;  // one flag per triangle, n-2 entries
};

struct TriangleChain {
  std::vector<HPoint> exterior;  // C_1..C_n
  std::vector<HPoint> shared;    // B_1..B_{n-3}

  std::size_t n() const { return exterior.size(); }
};

// Slack below this counts as a degenerate triangle.
inline constexpr double kDegenerateTol = 1e-8;
// Vertices closer than this are treated as one point.
inline constexpr double kCoincideTol = 1e-7;

// Returns lambda = sum(alpha) - 2pi(n-1); throws NotDTError unless lambda > 0.
double validate_alpha(const AngleVector& alpha);
Fraction lambda_coeff(const AngleVector& alpha);  // lambda / pi, exact

// Twice the triangle areas, from the polytope inequalities. Negative means outside.
std::vector<double> moment_polytope_check(const AngleVector& alpha, const std::vector<double>& beta);
std::vector<Fraction> moment_polytope_check_exact(const AngleVector& alpha,
                                                  const std::vector<Fraction>& beta);
std::vector<bool> degeneracy_mask(const AngleVector& alpha, const std::vector<double>& beta,
                                  double tol = kDegenerateTol);

// Which gamma slots carry a value for a given degeneracy mask. A run of degenerate
// triangles strictly inside the chain keeps one merged gamma at its last junction;
// runs touching either end keep none.
std::vector<bool> gamma_slots(const std::vector<bool>& mask);

// Interior angles (at first, second, third vertex) of each triangle.
struct TriangleAngles {
  double first, second, third;
};
std::vector<TriangleAngles> triangle_angles(const AngleVector& alpha, const std::vector<double>& beta);

TriangleChain build_chain(const AngleVector& alpha, const ActionAngle& coords);
ActionAngle extract_coords(const TriangleChain& chain, const AngleVector& alpha);
// Gamma measured on a chain whose degeneracy pattern is already known.
std::vector<std::optional<double>> measure_gamma(const TriangleChain& chain, const AngleVector& alpha,
                                                 const std::vector<bool>& mask);
std::vector<double> triangle_areas(const TriangleChain& chain);

// Vertices of triangle t (0-based) in the chain order.
struct Triangle {
  HPoint first, second, third;
};
Triangle triangle(const TriangleChain& chain, std::size_t t);

// Largest deviation from the chain invariants: exterior angles, straight angles at
// shared vertices, clockwise orientation. Zero for an exact chain.
double chain_defect(const TriangleChain& chain, const AngleVector& alpha);

// Seed coordinates with all slacks and gamma values filled from beta/gamma lists.
ActionAngle make_coords(const AngleVector& alpha, std::vector<double> beta,
                        std::vector<std::optional<double>> gamma);

}  // namespace orbitforge::chains
