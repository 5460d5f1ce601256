#include "orbitforge/fricke.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "orbitforge/errors.hpp"

namespace orbitforge::fricke {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBoundary = 1e-12;
constexpr double kDedup = 1e-12;

std::array<double, 3> sorted_abc(const FrickeCoeffs& f) {
  std::array<double, 3> v{f.A, f.B, f.C};
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

void check_quad(const TraceQuad& t) {
  for (double x : t) {
    if (!std::isfinite(x) || std::abs(x) > 2.0) throw DomainError("trace outside [-2, 2]: " + std::to_string(x));
  }
}

FrickeCoeffs fricke_coeffs(const TraceQuad& t) {
  check_quad(t);
  const auto [a, b, c, d] = t;
  FrickeCoeffs f;
  f.A = a * b + c * d;
  f.B = b * c + a * d;
  f.C = a * c + b * d;
  f.D = 4.0 - a * a - b * b - c * c - d * d - a * b * c * d;
  return f;
}

double fricke_residual(double X, double Y, double Z, const FrickeCoeffs& F) {
  return X * X + Y * Y + Z * Z + X * Y * Z - F.A * X - F.B * Y - F.C * Z - F.D;
}

double coeffs_distance(const FrickeCoeffs& f, const FrickeCoeffs& g) {
  auto u = sorted_abc(f);
  auto v = sorted_abc(g);
  double worst = std::abs(f.D - g.D);
  for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(u[k] - v[k]));
  return worst;
}

TraceQuad traces(const ThetaQuad& theta) {
  TraceQuad t;
  for (int k = 0; k < 4; ++k) t[k] = 2.0 * std::cos(kPi * theta[k]);
  return t;
}

ThetaQuad okamoto(const ThetaQuad& th) {
  const double s = th[0] + th[1] + th[2] + th[3];
  ThetaQuad out;
  // Row k of the matrix is +1 on the diagonal and -1 elsewhere.
  for (int k = 0; k < 4; ++k) out[k] = 0.5 * (2.0 * th[k] - s) + 1.0;
  return out;
}

ThetaQuad okamoto_tilde(const ThetaQuad& th) {
  const auto [a, b, c, d] = th;
  return {0.5 * (a - b - c + d), 0.5 * (-a + b - c + d), 0.5 * (-a - b + c + d), 0.5 * (a + b + c + d)};
}

std::vector<TraceQuad> quad_variants(const ThetaQuad& theta) {
  std::vector<TraceQuad> out;
  auto push = [&](const TraceQuad& q) {
    for (double x : q) {
      if (std::abs(x) >= 2.0 - kBoundary) return;
    }
    for (const auto& o : out) {
      bool same = true;
      for (int k = 0; k < 4 && same; ++k) same = std::abs(o[k] - q[k]) <= kDedup;
      if (same) return;
    }
    out.push_back(q);
  };
  for (const auto& base : {theta, okamoto(theta), okamoto_tilde(theta)}) {
    TraceQuad t = traces(base);
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      TraceQuad q{t[perm[0]], t[perm[1]], t[perm[2]], t[perm[3]]};
      push(q);
      push({-q[0], -q[1], -q[2], -q[3]});
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

const char* to_string(Verdict v) { return v == Verdict::SL2R ? "SL2R" : "SU2"; }

Verdict benedetto_goldman(const TraceQuad& t) {
  for (double x : t) {
    if (!(std::abs(x) < 2.0)) throw DomainError("benedetto_goldman needs |t| < 2, got " + std::to_string(x));
  }
  const auto [a, b, c, d] = t;
  double lhs = 2.0 * (a * a + b * b + c * c + d * d) - a * b * c * d - 16.0;
  double rhs = std::sqrt((4 - a * a) * (4 - b * b) * (4 - c * c) * (4 - d * d));
  return lhs > rhs ? Verdict::SL2R : Verdict::SU2;
}

std::array<double, 4> angle_vector_from_traces(const TraceQuad& t) {
  if (benedetto_goldman(t) != Verdict::SL2R) throw DomainError("trace quadruple is of SU2 type");
  std::array<double, 4> alpha;
  for (int k = 0; k < 4; ++k) {
    double th = 2.0 * std::acos(t[k] / 2.0);
    alpha[k] = std::max(th, 2.0 * kPi - th);
  }
  auto d = static_cast<std::size_t>(std::min_element(alpha.begin(), alpha.end()) - alpha.begin());
  if (std::abs(alpha[d] - kPi) < 1e-12) return alpha;
  if (t[0] * t[1] * t[2] * t[3] > 0) alpha[d] = 2.0 * kPi - alpha[d];
  return alpha;
}

TraceQuad traces_from_alpha(const std::array<double, 4>& alpha) {
  TraceQuad t;
  for (int k = 0; k < 4; ++k) t[k] = 2.0 * std::cos(alpha[k] / 2.0);
  if (t[0] * t[1] * t[2] * t[3] > 0) t[0] = -t[0];
  return t;
}

std::vector<ScanEntry> scan(const std::vector<ThetaQuad>& thetas) {
  std::vector<ScanEntry> out;
  for (const auto& th : thetas) {
    for (const auto& q : quad_variants(th)) {
      ScanEntry e{th, q, benedetto_goldman(q), std::nullopt};
      if (e.verdict == Verdict::SL2R) e.alpha = angle_vector_from_traces(q);
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace orbitforge::fricke
