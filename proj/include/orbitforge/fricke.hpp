#pragma once

#include <array>
#include <optional>
#include <vector>

namespace orbitforge::fricke {

// Peripheral traces (a, b, c, d) of an n = 4 representation, each in [-2, 2].
using TraceQuad = std::array<double, 4>;
// Trace parameters with t = 2cos(pi theta). Okamoto images may leave [0, 2].
using ThetaQuad = std::array<double, 4>;

struct FrickeCoeffs {
  double A = 0, B = 0, C = 0, D = 0;
};

// Throws DomainError if an entry has |t| > 2.
void check_quad(const TraceQuad& t);

FrickeCoeffs fricke_coeffs(const TraceQuad& t);
double fricke_residual(double X, double Y, double Z, const FrickeCoeffs& F);
// Distance between coefficient sets up to a permutation of (A, B, C).
double coeffs_distance(const FrickeCoeffs& f, const FrickeCoeffs& g);

TraceQuad traces(const ThetaQuad& theta);
ThetaQuad okamoto(const ThetaQuad& theta);
ThetaQuad okamoto_tilde(const ThetaQuad& theta);

// {theta, Ok(theta), Ok~(theta)} as traces, closed under permutations and the global
// sign flip, without quads having an entry outside (-2, 2).
std::vector<TraceQuad> quad_variants(const ThetaQuad& theta);

enum class Verdict { SL2R, SU2 };
const char* to_string(Verdict v);

// Throws DomainError on |t| >= 2.
Verdict benedetto_goldman(const TraceQuad& t);

// Angle vector (alpha_1..alpha_4) in the original entry order. Throws DomainError on
// boundary traces or an SU2 verdict.
std::array<double, 4> angle_vector_from_traces(const TraceQuad& t);

// Traces of an angle vector: 2cos(alpha/2), with the first sign flipped so abcd < 0.
TraceQuad traces_from_alpha(const std::array<double, 4>& alpha);

struct ScanEntry {
  ThetaQuad theta;
  TraceQuad quad;
  Verdict verdict = Verdict::SU2;
  std::optional<std::array<double, 4>> alpha;
};
std::vector<ScanEntry> scan(const std::vector<ThetaQuad>& thetas);

}  // namespace orbitforge::fricke
