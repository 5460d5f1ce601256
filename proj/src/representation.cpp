#include "orbitforge/representation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orbitforge/errors.hpp"

namespace orbitforge::representation {

using hyperbolic::HPoint;
using hyperbolic::kPi;
using hyperbolic::kTwoPi;

Representation from_chain(const TriangleChain& chain, const AngleVector& alpha) {
  if (chain.exterior.size() != alpha.size()) throw DomainError("chain size does not match alpha");
  Representation rep;
  rep.n = static_cast<int>(alpha.size());
  rep.alpha = alpha;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    rep.rho.push_back(hyperbolic::elliptic_from(chain.exterior[k], alpha[k].value()));
  }
  if (product_defect(rep) > 1e-6) {
    throw ChainInvariantError("chain does not close up: product defect " + std::to_string(product_defect(rep)));
  }
  return rep;
}

Representation from_coords(const AngleVector& alpha, const ActionAngle& coords) {
  return from_chain(chains::build_chain(alpha, coords), alpha);
}

Isometry product(const Representation& rep, int i, int j) {
  Isometry p;
  for (int k = i; k <= j; ++k) p = p * rep.rho[k - 1];
  return p;
}

Representation twist_algebraic(const Representation& rep, const TwistGen& t, int exp) {
  surface::check_gen(t, rep.n);
  Isometry p = product(rep, t.i, t.j);
  if (exp < 0) p = p.inverse();
  Isometry pinv = p.inverse();
  Representation out = rep;
  for (int k = t.i; k <= t.j; ++k) out.rho[k - 1] = p * rep.rho[k - 1] * pinv;
  return out;
}

Representation apply_word(const Representation& rep, const TwistWord& w) {
  Representation r = rep;
  for (const auto& l : w.letters) r = twist_algebraic(r, l.gen, l.exp);
  return r;
}

ActionAngle coords_from_rep(const Representation& rep) {
  const int n = rep.n;
  TriangleChain ch;
  for (const auto& m : rep.rho) ch.exterior.push_back(hyperbolic::fixed_point(m));
  std::vector<double> beta;
  Isometry p = rep.rho[0];
  for (int b = 0; b + 3 < n; ++b) {
    p = p * rep.rho[b + 1];
    Isometry inv = p.inverse();
    if (hyperbolic::classify(inv, 1e-12) != hyperbolic::IsometryClass::Elliptic) {
      throw NotDTError("interior holonomy rho(c_1...c_" + std::to_string(b + 2) + ") is not elliptic");
    }
    beta.push_back(hyperbolic::rotation_angle(inv));
    ch.shared.push_back(hyperbolic::fixed_point(p));
  }
  ActionAngle c;
  c.beta = beta;
  c.degenerate = chains::degeneracy_mask(rep.alpha, beta);
  c.gamma = chains::measure_gamma(ch, rep.alpha, c.degenerate);
  return c;
}

ASAResult solve_asa(const HPoint& p, const HPoint& q, double A, double B) {
  double c = hyperbolic::distance(p, q);
  if (c < chains::kCoincideTol) return {p, kPi - A - B};
  double cosC = -std::cos(A) * std::cos(B) + std::sin(A) * std::sin(B) * std::cosh(c);
  double C = std::acos(std::clamp(cosC, -1.0, 1.0));
  double coshb = (std::cos(B) + std::cos(A) * std::cos(C)) / (std::sin(A) * std::sin(C));
  double b = std::acosh(std::max(1.0, coshb));
  return {hyperbolic::shoot(p, hyperbolic::direction(p, q) - A, b), C};
}

namespace {

// Shared vertices of the chain on exterior points d[0..], built by successive ASA
// steps. Returns the first `count` shared vertices with their beta values.
void chain_vertices(const std::vector<HPoint>& d, const std::vector<double>& a, std::size_t count,
                    std::vector<HPoint>& shared, std::vector<double>& beta) {
  shared.clear();
  beta.clear();
  auto r = solve_asa(d[0], d[1], kPi - a[0] / 2, kPi - a[1] / 2);
  shared.push_back(r.third);
  beta.push_back(kTwoPi - 2.0 * r.angle);
  for (std::size_t m = 1; m < count; ++m) {
    r = solve_asa(shared.back(), d[m + 1], beta.back() / 2, kPi - a[m + 1] / 2);
    shared.push_back(r.third);
    beta.push_back(kTwoPi - 2.0 * r.angle);
  }
}

}  // namespace

GeometricTwist twist_geometric_detail(const AngleVector& alpha, const ActionAngle& coords, const TwistGen& t,
                                      int exp) {
  const std::size_t n = alpha.size();
  surface::check_gen(t, static_cast<int>(n));
  auto chain = chains::build_chain(alpha, coords);
  auto a = chains::values(alpha);

  // The chain of the cyclic presentation c_i, ..., c_n, c_1, ..., c_{i-1}.
  std::vector<HPoint> d(n);
  std::vector<double> ac(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t src = (t.i - 1 + k) % n;
    d[k] = chain.exterior[src];
    ac[k] = a[src];
  }
  std::size_t m = static_cast<std::size_t>(t.j - t.i);
  std::vector<HPoint> bp;
  std::vector<double> betap;
  chain_vertices(d, ac, m, bp, betap);
  double turn = exp > 0 ? betap[m - 1] : kTwoPi - betap[m - 1];

  // Rotating everything outside i..j about B'_{j-i} realizes the twist up to conjugation.
  Isometry rot = hyperbolic::elliptic_from(bp[m - 1], turn);
  std::vector<HPoint> c = chain.exterior;
  for (std::size_t k = 0; k < n; ++k) {
    int idx = static_cast<int>(k) + 1;
    if (idx < t.i || idx > t.j) c[k] = hyperbolic::apply(rot, c[k]);
  }

  TriangleChain out;
  out.exterior = c;
  std::vector<double> unused;
  chain_vertices(c, a, n - 3, out.shared, unused);
  return {chains::extract_coords(out, alpha), betap[m - 1]};
}

ActionAngle twist_geometric(const AngleVector& alpha, const ActionAngle& coords, const TwistGen& t, int exp) {
  return twist_geometric_detail(alpha, coords, t, exp).coords;
}

ActionAngle apply_word_geometric(const AngleVector& alpha, const ActionAngle& coords, const TwistWord& w) {
  ActionAngle x = coords;
  for (const auto& l : w.letters) x = twist_geometric(alpha, x, l.gen, l.exp);
  return x;
}

double product_defect(const Representation& rep) {
  return product(rep, 1, rep.n).distance_to(Isometry::identity());
}

double peripheral_defect(const Representation& rep) {
  double worst = 0.0;
  for (int k = 0; k < rep.n; ++k) {
    const auto& m = rep.rho[k];
    worst = std::max(worst, std::abs(m.det() - 1.0));
    double r = hyperbolic::rotation_angle(m);
    worst = std::max(worst, std::abs(r - rep.alpha[k].value()));
  }
  return worst;
}

double coords_distance(const ActionAngle& x, const ActionAngle& y) {
  const double inf = std::numeric_limits<double>::infinity();
  if (x.beta.size() != y.beta.size() || x.degenerate != y.degenerate) return inf;
  double worst = 0.0;
  for (std::size_t k = 0; k < x.beta.size(); ++k) worst = std::max(worst, std::abs(x.beta[k] - y.beta[k]));
  for (std::size_t k = 0; k < x.gamma.size(); ++k) {
    if (x.gamma[k].has_value() != y.gamma[k].has_value()) return inf;
    if (x.gamma[k]) worst = std::max(worst, hyperbolic::circular_distance(*x.gamma[k], *y.gamma[k]));
  }
  return worst;
}

}  // namespace orbitforge::representation
