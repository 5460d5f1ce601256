#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbitforge/chains.hpp"
#include "orbitforge/orbits.hpp"

namespace orbitforge::io {

using nlohmann::json;

// Exact grammar: "12pi/7", "pi", "-pi/3", "2pi", "pi/2", "0". Throws ParseError.
chains::RationalAngle parse_angle(const std::string& text);
// Exact grammar or a decimal number (radians).
double parse_angle_value(const std::string& text);
bool is_exact_angle(const std::string& text);

std::vector<std::string> split_list(const std::string& text, char sep = ',');
chains::AngleVector parse_alpha(const std::string& text);
std::vector<double> parse_values(const std::string& text);
// Like parse_values, but "-" or "none" marks a missing entry.
std::vector<std::optional<double>> parse_optional_values(const std::string& text);

// JSON angle: exact string, plain number, {"num": p, "den": q} or {"float": x}.
double angle_from_json(const json& j);
chains::RationalAngle exact_angle_from_json(const json& j);
// {"num", "den"} when x is a small rational multiple of pi, else {"float"}.
json angle_to_json(double x);

json coords_to_json(const chains::ActionAngle& c);

orbits::GoldenTable table_from_json(const json& j);
orbits::GoldenTable load_table(const std::filesystem::path& path);

// Orbit file: n, alpha, tol, status, layers, basepoint and points. table_from_json reads
// it back (points in place of rows), so an orbit file can be verified like a golden table.
json orbit_to_json(const orbits::OrbitResult& r, const chains::AngleVector& alpha, const chains::ActionAngle& seed,
                   double tol);
std::string orbit_to_csv(const orbits::OrbitResult& r);

// ORBITFORGE_DATA if set, else the data directory of the source tree.
std::filesystem::path data_dir();
// Relative paths that do not exist are looked up in data_dir().
std::filesystem::path resolve_data_path(const std::filesystem::path& p);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& content);

}  // namespace orbitforge::io
