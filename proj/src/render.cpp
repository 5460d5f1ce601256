#include "orbitforge/render.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "orbitforge/errors.hpp"

namespace orbitforge::render {

using hyperbolic::HPoint;

Model parse_model(const std::string& s) {
  if (s == "halfplane") return Model::HalfPlane;
  if (s == "disk") return Model::Disk;
  throw DomainError("unknown model '" + s + "' (expected halfplane or disk)");
}

std::complex<double> to_disk(std::complex<double> z) {
  const std::complex<double> i(0.0, 1.0);
  return (z - i) / (z + i);
}

std::complex<double> to_model(const HPoint& p, Model m) {
  std::complex<double> z(p.x, p.y);
  return m == Model::Disk ? to_disk(z) : z;
}

namespace {

struct Labeled {
  std::string label;
  HPoint p;
};

std::vector<Labeled> chain_points(const chains::TriangleChain& chain) {
  std::vector<Labeled> pts;
  for (std::size_t k = 0; k < chain.exterior.size(); ++k) pts.push_back({"C" + std::to_string(k + 1), chain.exterior[k]});
  for (std::size_t k = 0; k < chain.shared.size(); ++k) pts.push_back({"B" + std::to_string(k + 1), chain.shared[k]});
  return pts;
}

bool coincide(const HPoint& a, const HPoint& b) { return hyperbolic::distance(a, b) < chains::kCoincideTol; }

std::vector<HPoint> geodesic(const HPoint& p, const HPoint& q, int samples) {
  double d = hyperbolic::distance(p, q);
  if (d < chains::kCoincideTol) return {p};
  double dir = hyperbolic::direction(p, q);
  std::vector<HPoint> out;
  for (int k = 0; k <= samples; ++k) out.push_back(hyperbolic::shoot(p, dir, d * k / samples));
  out.back() = q;
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::vector<Vertex> model_vertices(const chains::TriangleChain& chain, Model m) {
  std::vector<Vertex> out;
  std::vector<HPoint> reps;
  for (const auto& lp : chain_points(chain)) {
    bool merged = false;
    for (std::size_t k = 0; k < reps.size(); ++k) {
      if (coincide(reps[k], lp.p)) {
        out[k].label += "=" + lp.label;
        merged = true;
        break;
      }
    }
    if (!merged) {
      reps.push_back(lp.p);
      out.push_back({lp.label, to_model(lp.p, m)});
    }
  }
  return out;
}

std::vector<std::size_t> visible_triangles(const chains::TriangleChain& chain) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t + 2 < chain.n(); ++t) {
    auto tr = chains::triangle(chain, t);
    bool point = coincide(tr.first, tr.second) && coincide(tr.first, tr.third) && coincide(tr.second, tr.third);
    if (!point) out.push_back(t);
  }
  return out;
}

std::string render_svg(const chains::TriangleChain& chain, const RenderOptions& opts) {
  const Model m = opts.model;
  std::vector<std::vector<std::complex<double>>> polys;
  std::vector<std::size_t> tri_index;
  for (std::size_t t : visible_triangles(chain)) {
    auto tr = chains::triangle(chain, t);
    std::vector<std::complex<double>> poly;
    for (const auto& [a, b] : {std::pair{tr.first, tr.second}, {tr.second, tr.third}, {tr.third, tr.first}}) {
      for (const auto& p : geodesic(a, b, opts.samples)) poly.push_back(to_model(p, m));
    }
    polys.push_back(std::move(poly));
    tri_index.push_back(t);
  }
  auto verts = model_vertices(chain, m);

  double xmin, xmax, ymin, ymax;
  if (m == Model::Disk) {
    xmin = ymin = -1.05;
    xmax = ymax = 1.05;
  } else {
    xmin = ymin = std::numeric_limits<double>::infinity();
    xmax = ymax = -std::numeric_limits<double>::infinity();
    auto grow = [&](std::complex<double> z) {
      xmin = std::min(xmin, z.real());
      xmax = std::max(xmax, z.real());
      ymin = std::min(ymin, z.imag());
      ymax = std::max(ymax, z.imag());
    };
    for (const auto& poly : polys) std::for_each(poly.begin(), poly.end(), grow);
    for (const auto& v : verts) grow(v.z);
    ymin = 0.0;
    double pad = 0.08 * std::max(xmax - xmin, ymax - ymin) + 1e-9;
    xmin -= pad;
    xmax += pad;
    ymax += pad;
  }
  const double margin = 30.0;
  double sx = (opts.width - 2 * margin) / (xmax - xmin);
  double sy = (opts.height - 2 * margin) / (ymax - ymin);
  double s = std::min(sx, sy);
  auto X = [&](std::complex<double> z) { return margin + (z.real() - xmin) * s; };
  auto Y = [&](std::complex<double> z) { return opts.height - margin - (z.imag() - ymin) * s; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.width << "\" height=\"" << opts.height
     << "\" data-model=\"" << (m == Model::Disk ? "disk" : "halfplane") << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (m == Model::Disk) {
    std::complex<double> o(0, 0);
    os << "<circle class=\"boundary\" cx=\"" << fmt(X(o)) << "\" cy=\"" << fmt(Y(o)) << "\" r=\"" << fmt(s)
       << "\" fill=\"none\" stroke=\"#888\"/>\n";
  } else {
    os << "<line class=\"boundary\" x1=\"0\" x2=\"" << opts.width << "\" y1=\"" << fmt(Y({0, 0})) << "\" y2=\""
       << fmt(Y({0, 0})) << "\" stroke=\"#888\"/>\n";
  }
  for (std::size_t k = 0; k < polys.size(); ++k) {
    os << "<polygon class=\"triangle\" data-index=\"" << tri_index[k] + 1 << "\" points=\"";
    for (std::size_t q = 0; q < polys[k].size(); ++q) os << (q ? " " : "") << fmt(X(polys[k][q])) << "," << fmt(Y(polys[k][q]));
    os << "\" fill=\"#cfe2f3\" fill-opacity=\"0.6\" stroke=\"#1f4e79\" stroke-width=\"1.2\"/>\n";
  }
  for (const auto& v : verts) {
    bool merged = v.label.find('=') != std::string::npos;
    os << "<circle class=\"vertex" << (merged ? " coincident" : "") << "\" data-label=\"" << v.label << "\" data-x=\""
       << fmt_full(v.z.real()) << "\" data-y=\"" << fmt_full(v.z.imag()) << "\" cx=\"" << fmt(X(v.z)) << "\" cy=\""
       << fmt(Y(v.z)) << "\" r=\"" << (merged ? 5 : 3) << "\" fill=\"" << (merged ? "#c00000" : "black") << "\"/>\n";
    os << "<text x=\"" << fmt(X(v.z) + 6) << "\" y=\"" << fmt(Y(v.z) - 6) << "\" font-size=\"13\">" << v.label
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace orbitforge::render
