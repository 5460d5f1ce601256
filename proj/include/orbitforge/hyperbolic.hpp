#pragma once

#include <array>
#include <complex>
#include <ostream>

namespace orbitforge::hyperbolic {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Default absolute tolerance for angle comparisons.
inline constexpr double kAngleTol = 1e-9;
// Guard band around the (a+d)^2 = 2 branch switch of rotation_angle.
inline constexpr double kBranchGuard = 1e-12;

struct HPoint {
  double x = 0.0;
  double y = 1.0;

  std::complex<double> z() const { return {x, y}; }
  static HPoint from(std::complex<double> z);
};

bool valid(const HPoint& p);
std::ostream& operator<<(std::ostream& os, const HPoint& p);

enum class IsometryClass { Identity, Elliptic, Parabolic, Hyperbolic };
const char* to_string(IsometryClass c);

// Element of PSL(2,R). Stored with a canonical sign: the first entry whose
// magnitude exceeds 1e-12 is positive, so M and -M compare equal.
class Isometry {
 public:
  Isometry();
  Isometry(double a, double b, double c, double d);

  static Isometry identity() { return Isometry(); }

  double a() const { return m_[0]; }
  double b() const { return m_[1]; }
  double c() const { return m_[2]; }
  double d() const { return m_[3]; }
  const std::array<double, 4>& entries() const { return m_; }

  double trace() const { return m_[0] + m_[3]; }
  double det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  Isometry inverse() const;

  // Sign-quotient comparison, max-entry norm.
  bool approx_equal(const Isometry& o, double tol = 1e-9) const;
  double distance_to(const Isometry& o) const;

 private:
  void canonicalize();
  std::array<double, 4> m_;
};

bool operator==(const Isometry& g, const Isometry& h);
std::ostream& operator<<(std::ostream& os, const Isometry& g);

Isometry compose(const Isometry& g, const Isometry& h);
Isometry operator*(const Isometry& g, const Isometry& h);
HPoint apply(const Isometry& g, const HPoint& p);

IsometryClass classify(const Isometry& g, double tol = 1e-9);

// The elliptic element fixing p with counter-clockwise rotation angle `angle`.
Isometry elliptic_from(const HPoint& p, double angle);
double rotation_angle(const Isometry& g);
HPoint fixed_point(const Isometry& g);

double distance(const HPoint& p, const HPoint& q);

// Length of the side opposite C in a hyperbolic triangle with angles A, B, C.
double side_from_angles(double A, double B, double C);

// Direction (tangent angle, counter-clockwise from the positive real axis) of
// the geodesic ray from p towards q. Upward vertical is pi/2.
double direction(const HPoint& p, const HPoint& q);
// The point at distance d from p along the ray leaving p in direction phi.
HPoint shoot(const HPoint& p, double phi, double d);

// Reduce to [0, 2pi).
double wrap_2pi(double x);
// Reduce to (-pi, pi].
double wrap_pi(double x);
// Distance on the circle R/2piZ.
double circular_distance(double x, double y);

}  // namespace orbitforge::hyperbolic
