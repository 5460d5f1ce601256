#include "orbitforge/hyperbolic.hpp"

#include <algorithm>
#include <cmath>

#include "orbitforge/errors.hpp"

namespace orbitforge::hyperbolic {

HPoint HPoint::from(std::complex<double> z) { return {z.real(), z.imag()}; }

bool valid(const HPoint& p) { return std::isfinite(p.x) && std::isfinite(p.y) && p.y > 0.0; }

std::ostream& operator<<(std::ostream& os, const HPoint& p) {
  return os << "(" << p.x << ", " << p.y << ")";
}

const char* to_string(IsometryClass c) {
  switch (c) {
    case IsometryClass::Identity: return "identity";
    case IsometryClass::Elliptic: return "elliptic";
    case IsometryClass::Parabolic: return "parabolic";
    case IsometryClass::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

Isometry::Isometry() : m_{1.0, 0.0, 0.0, 1.0} {}

Isometry::Isometry(double a, double b, double c, double d) : m_{a, b, c, d} {
  double det = a * d - b * c;
  if (!(det > 0.0) || !std::isfinite(det)) {
    throw DomainError("isometry needs positive determinant");
  }
  double s = 1.0 / std::sqrt(det);
  for (double& v : m_) v *= s;
  canonicalize();
}

void Isometry::canonicalize() {
  for (double v : m_) {
    if (std::abs(v) > 1e-12) {
      if (v < 0.0) {
        for (double& w : m_) w = -w;
      }
      return;
    }
  }
}

Isometry Isometry::inverse() const { return Isometry(m_[3], -m_[1], -m_[2], m_[0]); }

double Isometry::distance_to(const Isometry& o) const {
  double plus = 0.0;
  double minus = 0.0;
  for (int k = 0; k < 4; ++k) {
    plus = std::max(plus, std::abs(m_[k] - o.m_[k]));
    minus = std::max(minus, std::abs(m_[k] + o.m_[k]));
  }
  return std::min(plus, minus);
}

bool Isometry::approx_equal(const Isometry& o, double tol) const { return distance_to(o) <= tol; }

bool operator==(const Isometry& g, const Isometry& h) { return g.approx_equal(h, 1e-12); }

std::ostream& operator<<(std::ostream& os, const Isometry& g) {
  return os << "[[" << g.a() << ", " << g.b() << "], [" << g.c() << ", " << g.d() << "]]";
}

Isometry compose(const Isometry& g, const Isometry& h) {
  return Isometry(g.a() * h.a() + g.b() * h.c(), g.a() * h.b() + g.b() * h.d(),
                  g.c() * h.a() + g.d() * h.c(), g.c() * h.b() + g.d() * h.d());
}

Isometry operator*(const Isometry& g, const Isometry& h) { return compose(g, h); }

HPoint apply(const Isometry& g, const HPoint& p) {
  std::complex<double> z = p.z();
  std::complex<double> w = (g.a() * z + g.b()) / (g.c() * z + g.d());
  // The real part of the image is exact; the imaginary part is y / |cz+d|^2.
  double den = std::norm(g.c() * z + g.d());
  return {w.real(), p.y / den};
}

IsometryClass classify(const Isometry& g, double tol) {
  double t = std::abs(g.trace());
  if (t < 2.0 - tol) return IsometryClass::Elliptic;
  if (t > 2.0 + tol) return IsometryClass::Hyperbolic;
  if (g.approx_equal(Isometry::identity(), tol)) return IsometryClass::Identity;
  return IsometryClass::Parabolic;
}

Isometry elliptic_from(const HPoint& p, double angle) {
  if (!valid(p)) throw DomainError("point not in the upper half-plane");
  if (!(angle > 0.0 && angle < kTwoPi)) throw DomainError("rotation angle outside (0, 2pi)");
  double c = std::cos(angle / 2.0);
  double s = std::sin(angle / 2.0);
  double r = p.x / p.y;
  return Isometry(c - r * s, (p.x * p.x / p.y + p.y) * s, -s / p.y, c + r * s);
}

double rotation_angle(const Isometry& g) {
  double t = g.trace();
  if (!(std::abs(t) < 2.0)) throw ClassificationError("rotation angle of a non-elliptic element");
  if (g.c() == 0.0) throw DegenerateInput("rotation angle with c = 0");
  double sg = g.c() > 0.0 ? -1.0 : 1.0;
  double t2 = t * t;
  if (std::abs(t2 - 2.0) <= kBranchGuard) return t * sg > 0.0 ? kPi / 2.0 : 3.0 * kPi / 2.0;
  double val = std::atan(sg * t / (t2 - 2.0) * std::sqrt(std::max(0.0, 4.0 - t2)));
  double eps;
  if (t2 < 2.0) {
    eps = kPi;
  } else if (t * sg > 0.0) {
    eps = 0.0;
  } else {
    eps = kTwoPi;
  }
  return val + eps;
}

HPoint fixed_point(const Isometry& g) {
  double t = g.trace();
  if (!(std::abs(t) < 2.0)) throw ClassificationError("fixed point of a non-elliptic element");
  if (g.c() == 0.0) throw DegenerateInput("fixed point with c = 0");
  return {(g.a() - g.d()) / (2.0 * g.c()), std::sqrt(4.0 - t * t) / (2.0 * std::abs(g.c()))};
}

double distance(const HPoint& p, const HPoint& q) {
  double e = std::hypot(p.x - q.x, p.y - q.y);
  return 2.0 * std::asinh(e / (2.0 * std::sqrt(p.y * q.y)));
}

double side_from_angles(double A, double B, double C) {
  if (A + B + C >= kPi) throw NotHyperbolicTriangle("angle sum must be below pi");
  double v = (std::cos(A) * std::cos(B) + std::cos(C)) / (std::sin(A) * std::sin(B));
  return std::acosh(std::max(1.0, v));
}

double direction(const HPoint& p, const HPoint& q) {
  // Move p to i by z -> (z - x_p)/y_p, then read the tangent off the disk picture at 0.
  std::complex<double> w((q.x - p.x) / p.y, q.y / p.y);
  const std::complex<double> i(0.0, 1.0);
  std::complex<double> u = (w - i) / (w + i);
  return wrap_2pi(std::arg(u) + kPi / 2.0);
}

HPoint shoot(const HPoint& p, double phi, double d) {
  std::complex<double> u = std::tanh(d / 2.0) * std::polar(1.0, phi - kPi / 2.0);
  const std::complex<double> i(0.0, 1.0);
  std::complex<double> w = i * (1.0 + u) / (1.0 - u);
  return {p.x + p.y * w.real(), p.y * w.imag()};
}

double wrap_2pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

double wrap_pi(double x) {
  double r = wrap_2pi(x);
  return r > kPi ? r - kTwoPi : r;
}

double circular_distance(double x, double y) { return std::abs(wrap_pi(x - y)); }

}  // namespace orbitforge::hyperbolic
