#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitforge/chains.hpp"
#include "orbitforge/representation.hpp"
#include "orbitforge/surface.hpp"

namespace orbitforge::orbits {

using chains::ActionAngle;
using chains::AngleVector;
using surface::TwistGen;
using surface::TwistWord;

// Quantized coordinates: betas, then the defined gammas (circular cell index).
struct CanonicalKey {
  std::vector<std::int64_t> cells;
  std::vector<bool> mask;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator<(const CanonicalKey& a, const CanonicalKey& b) {
    if (a.mask != b.mask) return a.mask < b.mask;
    return a.cells < b.cells;
  }
};

// Cell width used for a tolerance: the largest 2pi/M not below 8*tol.
double grid_for(double tol);
CanonicalKey canonicalize(const ActionAngle& coords, double tol);

struct OrbitPoint {
  ActionAngle coords;
  TwistWord word;
  int discovered_at = 0;
};

enum class Status { Finite, Exhausted };
const char* to_string(Status s);

struct OrbitOptions {
  double tol = 1e-6;
  std::size_t max_points = 20000;
  int max_layers = 200;
  unsigned threads = 1;
  // Empty means generator_set(n).
  std::vector<TwistGen> generators;
};

struct OrbitResult {
  Status status = Status::Finite;
  std::vector<OrbitPoint> points;  // sorted by canonical key
  std::vector<std::size_t> layers;
  std::string note;
};

OrbitResult enumerate(const AngleVector& alpha, const ActionAngle& seed, const OrbitOptions& opts = {});

// Golden table: rows of Appendix-style orbit listings. Gamma values are stored as
// printed; gamma_sign converts them to the library convention.
struct TableRow {
  std::vector<double> beta;
  std::vector<std::optional<double>> gamma;
  TwistWord word;
  std::string word_text;
  std::string word_as_printed;  // non-empty when the printed word was corrected
};

struct GoldenTable {
  std::string name;
  int n = 0;
  AngleVector alpha;
  double tol = 1e-6;
  int gamma_sign = 1;
  ActionAngle basepoint;
  std::optional<std::size_t> expected_length;
  std::vector<TableRow> rows;
};

// Coordinates of a row in the library convention (gamma wrapped, mask from beta).
ActionAngle row_coords(const GoldenTable& t, const TableRow& r);

struct VerifyReport {
  std::size_t rows = 0;
  std::size_t replay_ok = 0;
  std::size_t matched = 0;  // bijection pairs
  std::size_t corrected_rows = 0;
  std::vector<std::string> replay_failures;
  std::vector<std::string> missing;  // table rows without a computed point
  std::vector<std::string> extra;    // computed points without a table row
  double max_replay_error = 0.0;
  bool ok() const;
  std::string summary() const;
};

VerifyReport verify_against_table(const OrbitResult& result, const GoldenTable& table);
// Word replay only, without a computed orbit.
VerifyReport replay_table(const GoldenTable& table);

struct MembershipReport {
  std::size_t regular_points = 0;
  std::size_t flagged = 0;
  std::vector<std::string> details;
  bool ok() const { return flagged == 0; }
};

// The fifteen admissible beta values for finite orbits.
std::vector<chains::RationalAngle> admissible_betas();
MembershipReport beta_membership_check(const OrbitResult& result, double tol = 1e-6, int max_den = 7);

}  // namespace orbitforge::orbits
