#include "orbitforge/io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "orbitforge/errors.hpp"
#include "orbitforge/surface.hpp"
#include "orbitforge/trigfields.hpp"

#ifndef ORBITFORGE_DEFAULT_DATA_DIR
#define ORBITFORGE_DEFAULT_DATA_DIR "data"
#endif

namespace orbitforge::io {

using chains::RationalAngle;
using hyperbolic::kPi;

namespace {

const std::regex& exact_re() {
  static const std::regex re(R"(^\s*(-?)(\d*)\s*pi\s*(?:/\s*(\d+))?\s*$)");
  return re;
}

std::optional<double> parse_decimal(const std::string& text) {
  std::size_t used = 0;
  try {
    double v = std::stod(text, &used);
    while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
    if (used != text.size() || !std::isfinite(v)) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

bool is_exact_angle(const std::string& text) {
  auto t = trim(text);
  return t == "0" || std::regex_match(t, exact_re());
}

RationalAngle parse_angle(const std::string& text) {
  auto t = trim(text);
  if (t == "0") return {0, 1};
  std::smatch m;
  if (!std::regex_match(t, m, exact_re())) {
    throw ParseError("expected an exact angle like 12pi/7, got '" + text + "'", 0);
  }
  long long num = m[2].length() ? std::stoll(m[2].str()) : 1;
  long long den = m[3].matched ? std::stoll(m[3].str()) : 1;
  if (den == 0) throw ParseError("zero denominator in '" + text + "'", 0);
  if (m[1].length()) num = -num;
  return {num, den};
}

double parse_angle_value(const std::string& text) {
  if (is_exact_angle(text)) return parse_angle(text).value();
  if (auto v = parse_decimal(text)) return *v;
  throw ParseError("expected an angle, got '" + text + "'", 0);
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

chains::AngleVector parse_alpha(const std::string& text) {
  chains::AngleVector out;
  for (const auto& s : split_list(text)) out.push_back(parse_angle(s));
  return out;
}

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  for (const auto& s : split_list(text)) out.push_back(parse_angle_value(s));
  return out;
}

std::vector<std::optional<double>> parse_optional_values(const std::string& text) {
  std::vector<std::optional<double>> out;
  for (const auto& s : split_list(text)) {
    if (s == "-" || s == "none") {
      out.emplace_back();
    } else {
      out.emplace_back(parse_angle_value(s));
    }
  }
  return out;
}

double angle_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_angle_value(j.get<std::string>());
  if (j.is_object()) {
    if (j.contains("float")) return j.at("float").get<double>();
    if (j.contains("num")) return exact_angle_from_json(j).value();
  }
  throw DomainError("unsupported angle in JSON: " + j.dump());
}

RationalAngle exact_angle_from_json(const json& j) {
  if (j.is_string()) return parse_angle(j.get<std::string>());
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    return {j.at("num").get<long long>(), j.at("den").get<long long>()};
  }
  throw DomainError("expected an exact angle, got " + j.dump());
}

json angle_to_json(double x) {
  if (auto r = trigfields::recognize_rational_angle(x, 60, 1e-10)) return {{"num", r->num}, {"den", r->den}};
  return {{"float", x}};
}

json coords_to_json(const chains::ActionAngle& c) {
  json beta = json::array();
  json gamma = json::array();
  for (double b : c.beta) beta.push_back(angle_to_json(b));
  for (const auto& g : c.gamma) gamma.push_back(g ? angle_to_json(*g) : json(nullptr));
  return {{"beta", beta}, {"gamma", gamma}};
}

namespace {

std::vector<std::optional<double>> optional_list(const json& j) {
  std::vector<std::optional<double>> out;
  for (const auto& g : j) {
    if (g.is_null()) {
      out.emplace_back();
    } else {
      out.emplace_back(angle_from_json(g));
    }
  }
  return out;
}

std::vector<double> value_list(const json& j) {
  std::vector<double> out;
  for (const auto& x : j) out.push_back(angle_from_json(x));
  return out;
}

}  // namespace

orbits::GoldenTable table_from_json(const json& j) {
  orbits::GoldenTable t;
  try {
    t.name = j.value("name", std::string());
    t.n = j.at("n").get<int>();
    for (const auto& a : j.at("alpha")) t.alpha.push_back(exact_angle_from_json(a));
    if (static_cast<int>(t.alpha.size()) != t.n) throw DomainError("alpha has the wrong length");
    t.tol = j.value("tol", 1e-6);
    t.gamma_sign = j.value("gamma_sign", 1);
    if (t.gamma_sign != 1 && t.gamma_sign != -1) throw DomainError("gamma_sign must be 1 or -1");
    const auto& bp = j.at("basepoint");
    t.basepoint.beta = value_list(bp.at("beta"));
    t.basepoint.gamma = optional_list(bp.at("gamma"));
    if (j.contains("expected_length") && !j.at("expected_length").is_null()) {
      t.expected_length = j.at("expected_length").get<std::size_t>();
    }
    const auto& rows = j.contains("rows") ? j.at("rows") : j.at("points");
    for (const auto& r : rows) {
      orbits::TableRow row;
      row.beta = value_list(r.at("beta"));
      row.gamma = optional_list(r.at("gamma"));
      row.word_text = r.at("word").get<std::string>();
      row.word = surface::parse_word(row.word_text, t.n);
      row.word_as_printed = r.value("word_as_printed", std::string());
      if (row.beta.size() + 3 != static_cast<std::size_t>(t.n) || row.gamma.size() != row.beta.size()) {
        throw DomainError("row " + row.word_text + " has the wrong number of coordinates");
      }
      t.rows.push_back(std::move(row));
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed table: ") + e.what());
  }
  return t;
}

orbits::GoldenTable load_table(const std::filesystem::path& path) {
  auto p = resolve_data_path(path);
  json j;
  try {
    j = json::parse(read_file(p));
  } catch (const json::parse_error& e) {
    throw DomainError(p.string() + ": " + e.what());
  }
  return table_from_json(j);
}

json orbit_to_json(const orbits::OrbitResult& r, const chains::AngleVector& alpha, const chains::ActionAngle& seed,
                   double tol) {
  json alpha_j = json::array();
  for (const auto& a : alpha) alpha_j.push_back({{"num", a.num}, {"den", a.den}});
  json points = json::array();
  for (const auto& p : r.points) {
    json row = coords_to_json(p.coords);
    row["mask"] = p.coords.degenerate;
    row["word"] = surface::format_word(p.word);
    row["layer"] = p.discovered_at;
    points.push_back(row);
  }
  json out = {{"name", "orbit"},
              {"n", alpha.size()},
              {"alpha", alpha_j},
              {"tol", tol},
              {"gamma_sign", 1},
              {"basepoint", coords_to_json(seed)},
              {"status", orbits::to_string(r.status)},
              {"layers", r.layers},
              {"points", points}};
  out["expected_length"] = r.status == orbits::Status::Finite ? json(r.points.size()) : json(nullptr);
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

std::string orbit_to_csv(const orbits::OrbitResult& r) {
  std::ostringstream os;
  os.precision(17);
  if (r.points.empty()) return "word\n";
  const auto& c0 = r.points.front().coords;
  os << "word,layer";
  for (std::size_t k = 0; k < c0.beta.size(); ++k) os << ",beta" << k + 1;
  for (std::size_t k = 0; k < c0.gamma.size(); ++k) os << ",gamma" << k + 1;
  os << "\n";
  for (const auto& p : r.points) {
    os << surface::format_word(p.word) << "," << p.discovered_at;
    for (double b : p.coords.beta) os << "," << b;
    for (const auto& g : p.coords.gamma) {
      os << ",";
      if (g) os << *g;
    }
    os << "\n";
  }
  return os.str();
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("ORBITFORGE_DATA"); env && *env) return env;
  return ORBITFORGE_DEFAULT_DATA_DIR;
}

std::filesystem::path resolve_data_path(const std::filesystem::path& p) {
  if (std::filesystem::exists(p) || p.is_absolute()) return p;
  auto alt = data_dir() / p;
  if (std::filesystem::exists(alt)) return alt;
  auto leaf = data_dir() / p.filename();
  if (std::filesystem::exists(leaf)) return leaf;
  return p;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw DomainError("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw DomainError("cannot write " + p.string());
  out << content;
}

}  // namespace orbitforge::io
