#include "orbitforge/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

#include <CLI11.hpp>

#include "orbitforge/errors.hpp"
#include "orbitforge/fricke.hpp"
#include "orbitforge/io.hpp"
#include "orbitforge/orbits.hpp"
#include "orbitforge/render.hpp"
#include "orbitforge/representation.hpp"
#include "orbitforge/trigfields.hpp"

namespace orbitforge::cli {

namespace {

using chains::ActionAngle;
using chains::AngleVector;

std::string show(double x) {
  if (auto r = trigfields::recognize_rational_angle(x, 60, 1e-7)) return r->str();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  return buf;
}

std::string show_num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string show_coords(const ActionAngle& c) {
  std::string s = "(";
  bool first = true;
  auto add = [&](const std::string& v) {
    s += (first ? "" : ", ") + v;
    first = false;
  };
  for (double b : c.beta) add(show(b));
  for (const auto& g : c.gamma) {
    if (g) add(show(*g));
  }
  return s + ")";
}

struct SeedArgs {
  std::string alpha, beta, gamma;
  int n = 0;
  int gamma_sign = 1;
};

void add_seed_options(CLI::App* cmd, SeedArgs& a, bool required) {
  auto* o = cmd->add_option("--alpha", a.alpha, "cone angles, exact (e.g. 12pi/7,12pi/7,...)");
  if (required) o->required();
  cmd->add_option("--n", a.n, "number of punctures (checked against alpha)");
  cmd->add_option("--beta", a.beta, "beta_1..beta_{n-3}");
  cmd->add_option("--gamma", a.gamma, "gamma_1..gamma_{n-3}; '-' for a missing entry");
  cmd->add_option("--gamma-sign", a.gamma_sign, "-1 to read gamma in the mirrored convention")
      ->check(CLI::IsMember({-1, 1}));
}

struct Seed {
  AngleVector alpha;
  ActionAngle coords;
};

Seed build_seed(const SeedArgs& a) {
  Seed s;
  s.alpha = io::parse_alpha(a.alpha);
  if (a.n != 0 && static_cast<int>(s.alpha.size()) != a.n) {
    throw DomainError("--n " + std::to_string(a.n) + " but alpha has " + std::to_string(s.alpha.size()) + " entries");
  }
  chains::validate_alpha(s.alpha);
  auto beta = io::parse_values(a.beta);
  auto gamma = io::parse_optional_values(a.gamma);
  if (gamma.empty()) gamma.assign(beta.size(), std::nullopt);
  if (beta.size() + 3 != s.alpha.size() || gamma.size() != beta.size()) {
    throw DomainError("need n-3 = " + std::to_string(s.alpha.size() - 3) + " beta and gamma entries");
  }
  for (auto& g : gamma) {
    if (g) g = a.gamma_sign * *g;
  }
  s.coords = chains::make_coords(s.alpha, beta, gamma);
  return s;
}

std::string layer_text(const std::vector<std::size_t>& layers) {
  std::string s;
  for (auto l : layers) s += (s.empty() ? "" : " ") + std::to_string(l);
  return s;
}

int cmd_orbit(const SeedArgs& sa, const orbits::OrbitOptions& opts, const std::string& verify, const std::string& out_path,
              const std::string& csv_path, bool require_finite, bool check_betas, std::ostream& out) {
  AngleVector alpha;
  ActionAngle seed;
  std::optional<orbits::GoldenTable> table;
  orbits::OrbitOptions o = opts;
  if (!verify.empty()) {
    table = io::load_table(verify);
    alpha = table->alpha;
    std::vector<std::optional<double>> g = table->basepoint.gamma;
    for (auto& x : g) {
      if (x) x = table->gamma_sign * *x;
    }
    seed = chains::make_coords(alpha, table->basepoint.beta, g);
    o.tol = table->tol;
  } else {
    auto s = build_seed(sa);
    alpha = s.alpha;
    seed = s.coords;
  }
  auto res = orbits::enumerate(alpha, seed, o);
  out << orbits::to_string(res.status) << ", " << res.points.size() << " points\n";
  out << "layers: " << layer_text(res.layers) << "\n";
  if (!res.note.empty()) out << "note: " << res.note << "\n";
  if (!out_path.empty()) io::write_file(out_path, io::orbit_to_json(res, alpha, seed, o.tol).dump(1) + "\n");
  if (!csv_path.empty()) io::write_file(csv_path, io::orbit_to_csv(res));

  int code = kOk;
  if (require_finite && res.status != orbits::Status::Finite) code = kCheckFailed;
  if (check_betas) {
    auto m = orbits::beta_membership_check(res, o.tol);
    out << "beta check: " << m.flagged << " of " << m.regular_points << " regular points flagged\n";
    for (const auto& d : m.details) out << "  " << d << "\n";
    if (!m.ok()) code = kCheckFailed;
  }
  if (table) {
    auto rep = orbits::verify_against_table(res, *table);
    out << rep.summary() << "\n";
    for (const auto& f : rep.replay_failures) out << "  replay: " << f << "\n";
    for (const auto& f : rep.missing) out << "  missing: " << f << "\n";
    for (const auto& f : rep.extra) out << "  extra: " << f << "\n";
    bool length_ok = !table->expected_length || *table->expected_length == res.points.size();
    if (!length_ok) out << "expected " << *table->expected_length << " points\n";
    if (!rep.ok() || !length_ok) code = kCheckFailed;
  }
  return code;
}

int cmd_twist(const SeedArgs& sa, const std::string& word_text, std::ostream& out) {
  auto s = build_seed(sa);
  auto word = surface::parse_word(word_text, static_cast<int>(s.alpha.size()));
  auto rep = representation::from_coords(s.alpha, s.coords);
  auto alg = representation::coords_from_rep(representation::apply_word(rep, word));
  auto geo = representation::apply_word_geometric(s.alpha, s.coords, word);
  double dev = representation::coords_distance(alg, geo);
  out << "word: " << surface::format_word(word) << "\n";
  out << "algebraic: " << show_coords(alg) << "\n";
  out << "geometric: " << show_coords(geo) << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "max deviation: %.3g", dev);
  out << buf << "\n";
  return dev <= 1e-6 ? kOk : kCheckFailed;
}

int cmd_render(const SeedArgs& sa, const std::string& model, const std::string& out_path, int width, int height,
               std::ostream& out) {
  auto s = build_seed(sa);
  render::RenderOptions ro;
  ro.model = render::parse_model(model);
  ro.width = width;
  ro.height = height;
  auto chain = chains::build_chain(s.alpha, s.coords);
  auto svg = render::render_svg(chain, ro);
  if (out_path.empty() || out_path == "-") {
    out << svg;
  } else {
    io::write_file(out_path, svg);
    out << "wrote " << out_path << " (" << render::visible_triangles(chain).size() << " triangles)\n";
  }
  return kOk;
}

chains::Fraction parse_fraction(const std::string& text) {
  auto parts = io::split_list(text, '/');
  try {
    if (parts.size() == 1) return chains::Fraction(std::stoll(parts[0]));
    if (parts.size() == 2) return chains::Fraction(std::stoll(parts[0]), std::stoll(parts[1]));
  } catch (const std::exception&) {
  }
  throw ParseError("expected a fraction p/q, got '" + text + "'", 0);
}

int cmd_trigfield(int N, const std::string& preper, const std::string& discrete, std::ostream& out) {
  if (!discrete.empty()) {
    auto parts = io::split_list(discrete);
    if (parts.size() != 3) throw DomainError("--discrete needs three entries p,q,r");
    bool d = trigfields::is_discrete_triangle(parse_fraction(parts[0]), parse_fraction(parts[1]), parse_fraction(parts[2]));
    out << "D(" << discrete << ") " << (d ? "discrete" : "not discrete") << "\n";
    return kOk;
  }
  trigfields::FieldSpec spec{N};
  out << "K = Q(cos(pi/" << N << ")), degree " << trigfields::field_degree(spec) << "\n";
  if (!preper.empty()) {
    auto f = parse_fraction(preper);
    auto tr = trigfields::preper_orbit(trigfields::CosValue(f.numerator(), f.denominator()), spec);
    for (std::size_t k = 0; k < tr.steps.size(); ++k) {
      const auto& st = tr.steps[k];
      out << (k == tr.cycle_start ? "* " : "  ") << "2cos(2pi*" << st.x.p << "/" << st.x.q << ") = " << show_num(st.x.value())
          << (st.in_field ? "  in K" : "") << "\n";
    }
    return kOk;
  }
  auto angles = trigfields::list_angles(spec);
  out << angles.size() << " angles:";
  for (const auto& a : angles) out << " " << a.str();
  out << "\n";
  return kOk;
}

std::array<double, 4> parse_quad(const std::string& text) {
  auto parts = io::split_list(text);
  if (parts.size() != 4) throw DomainError("expected four comma-separated values");
  std::array<double, 4> q;
  for (int k = 0; k < 4; ++k) {
    try {
      std::size_t used = 0;
      q[k] = std::stod(parts[k], &used);
      if (used != parts[k].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("bad number '" + parts[k] + "'", 0);
    }
  }
  return q;
}

void print_alpha(const std::array<double, 4>& a, std::ostream& out) {
  out << "alpha = (";
  for (int k = 0; k < 4; ++k) out << (k ? ", " : "") << show(a[k]);
  out << ")";
}

int cmd_fricke(const std::string& traces, const std::string& theta_file, std::ostream& out) {
  if (!traces.empty()) {
    auto t = parse_quad(traces);
    auto f = fricke::fricke_coeffs(t);
    out << "A B C D = " << show_num(f.A) << " " << show_num(f.B) << " " << show_num(f.C) << " " << show_num(f.D) << "\n";
    bool interior = std::all_of(t.begin(), t.end(), [](double x) { return std::abs(x) < 2.0; });
    if (!interior) {
      out << "Benedetto-Goldman: boundary trace, no verdict\n";
      return kOk;
    }
    auto v = fricke::benedetto_goldman(t);
    out << "Benedetto-Goldman: " << fricke::to_string(v) << "\n";
    if (v == fricke::Verdict::SL2R) {
      print_alpha(fricke::angle_vector_from_traces(t), out);
      out << "\n";
    }
    return kOk;
  }
  if (theta_file.empty()) throw DomainError("fricke needs --traces or --theta-file");
  auto j = io::json::parse(io::read_file(io::resolve_data_path(theta_file)));
  const auto& list = j.is_object() ? j.at("theta") : j;
  std::vector<fricke::ThetaQuad> thetas;
  for (const auto& row : list) {
    if (row.size() != 4) throw DomainError("each theta entry needs four values");
    fricke::ThetaQuad th;
    for (int k = 0; k < 4; ++k) {
      if (row[k].is_string()) {
        auto f = parse_fraction(row[k].get<std::string>());
        th[k] = static_cast<double>(f.numerator()) / static_cast<double>(f.denominator());
      } else {
        th[k] = row[k].get<double>();
      }
    }
    thetas.push_back(th);
  }
  std::size_t hits = 0;
  auto entries = fricke::scan(thetas);
  for (const auto& e : entries) {
    if (!e.alpha) continue;
    ++hits;
    out << "t = (" << show_num(e.quad[0]) << ", " << show_num(e.quad[1]) << ", " << show_num(e.quad[2]) << ", "
        << show_num(e.quad[3]) << ")  ";
    print_alpha(*e.alpha, out);
    out << "\n";
  }
  out << hits << " SL2R quadruples from " << thetas.size() << " theta entries (" << entries.size() << " variants)\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mapping class group orbits of DT representations", "orbitforge"};
  app.require_subcommand(1);

  SeedArgs orbit_seed;
  orbits::OrbitOptions oopts;
  std::string verify, out_path, csv_path;
  bool require_finite = false, check_betas = false;
  auto* orbit = app.add_subcommand("orbit", "enumerate an orbit, or verify a golden table");
  add_seed_options(orbit, orbit_seed, false);
  orbit->add_option("--tol", oopts.tol, "coordinate tolerance")->check(CLI::PositiveNumber);
  orbit->add_option("--max-points", oopts.max_points, "stop after this many points")->check(CLI::PositiveNumber);
  orbit->add_option("--max-layers", oopts.max_layers, "stop after this many BFS layers")->check(CLI::PositiveNumber);
  orbit->add_option("--threads", oopts.threads, "worker threads")->check(CLI::PositiveNumber);
  orbit->add_option("--verify", verify, "golden table JSON (relative names use ORBITFORGE_DATA)");
  orbit->add_option("--out", out_path, "write the orbit as JSON");
  orbit->add_option("--csv", csv_path, "write the orbit as CSV");
  orbit->add_flag("--require-finite", require_finite, "exit 3 unless the orbit closes");
  orbit->add_flag("--check-betas", check_betas, "check regular points against the admissible beta list");

  SeedArgs twist_seed;
  std::string word;
  auto* twist = app.add_subcommand("twist", "apply a twist word along both routes");
  add_seed_options(twist, twist_seed, true);
  twist->add_option("--word", word, "e.g. t(2,3) or t(1,2)^2t(3,4)^-1")->required();

  SeedArgs render_seed;
  std::string model = "halfplane", svg_path;
  int width = 800, height = 600;
  auto* rend = app.add_subcommand("render", "draw the triangle chain as SVG");
  add_seed_options(rend, render_seed, true);
  rend->add_option("--model", model, "halfplane or disk");
  rend->add_option("--out", svg_path, "output file (stdout if omitted)");
  rend->add_option("--width", width)->check(CLI::PositiveNumber);
  rend->add_option("--height", height)->check(CLI::PositiveNumber);

  int N = 3;
  std::string preper, discrete;
  auto* trig = app.add_subcommand("trigfield", "angles r with 2cos(r/2) in Q(cos(pi/N))");
  trig->add_option("--N", N, "field parameter")->check(CLI::Range(3, 100000));
  trig->add_option("--preper", preper, "forward orbit of 2cos(2pi p/q) under x^2-2");
  trig->add_option("--discrete", discrete, "triangle group test for p,q,r (fractions allowed)");

  std::string traces, theta_file;
  auto* fr = app.add_subcommand("fricke", "Fricke coefficients and the SL2R/SU2 test for n = 4");
  fr->add_option("--traces", traces, "a,b,c,d");
  fr->add_option("--theta-file", theta_file, "JSON list of theta quadruples");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*orbit) return cmd_orbit(orbit_seed, oopts, verify, out_path, csv_path, require_finite, check_betas, out);
    if (*twist) return cmd_twist(twist_seed, word, out);
    if (*rend) return cmd_render(render_seed, model, svg_path, width, height, out);
    if (*trig) return cmd_trigfield(N, preper, discrete, out);
    if (*fr) return cmd_fricke(traces, theta_file, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace orbitforge::cli
