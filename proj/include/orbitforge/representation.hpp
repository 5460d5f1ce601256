#pragma once

#include <vector>

#include "orbitforge/chains.hpp"
#include "orbitforge/hyperbolic.hpp"
#include "orbitforge/surface.hpp"

namespace orbitforge::representation {

using chains::ActionAngle;
using chains::AngleVector;
using chains::TriangleChain;
using hyperbolic::Isometry;
using surface::TwistGen;
using surface::TwistWord;

struct Representation {
  int n = 0;
  std::vector<Isometry> rho;  // images of c_1..c_n
  AngleVector alpha;
};

Representation from_chain(const TriangleChain& chain, const AngleVector& alpha);
Representation from_coords(const AngleVector& alpha, const ActionAngle& coords);

// rho(c_i ... c_j), 1-based, multiplied left to right.
Isometry product(const Representation& rep, int i, int j);

// exp = +1 conjugates rho(c_i..c_j) by P = rho(c_i...c_j); exp = -1 by P^-1.
Representation twist_algebraic(const Representation& rep, const TwistGen& t, int exp = 1);
// Leftmost letter acts first.
Representation apply_word(const Representation& rep, const TwistWord& w);

ActionAngle coords_from_rep(const Representation& rep);

// Independent route through the cyclically shifted chain; no matrix products.
ActionAngle twist_geometric(const AngleVector& alpha, const ActionAngle& coords, const TwistGen& t, int exp = 1);
// Same, also reporting beta' of the curve c_i...c_j in the shifted chain.
struct GeometricTwist {
  ActionAngle coords;
  double beta_prime;
};
GeometricTwist twist_geometric_detail(const AngleVector& alpha, const ActionAngle& coords, const TwistGen& t,
                                      int exp = 1);
ActionAngle apply_word_geometric(const AngleVector& alpha, const ActionAngle& coords, const TwistWord& w);

// Max-entry distance of rho(c_1)...rho(c_n) from the identity (up to sign).
double product_defect(const Representation& rep);
// Worst of |det - 1| and |rotation angle - alpha_i| over the peripheral images.
double peripheral_defect(const Representation& rep);

// Largest coordinate difference; gamma compared on the circle. Infinite when the
// degeneracy patterns or gamma slots disagree.
double coords_distance(const ActionAngle& x, const ActionAngle& y);

// Third vertex R of the clockwise triangle (P, Q, R) with angles A at P and B at Q.
// Also returns the angle at R. Coincident P and Q give the collapsed triangle.
struct ASAResult {
  hyperbolic::HPoint third;
  double angle;
};
ASAResult solve_asa(const hyperbolic::HPoint& p, const hyperbolic::HPoint& q, double A, double B);

}  // namespace orbitforge::representation
