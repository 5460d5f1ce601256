#pragma once

#include <complex>
#include <string>
#include <vector>

#include "orbitforge/chains.hpp"

namespace orbitforge::render {

enum class Model { HalfPlane, Disk };
Model parse_model(const std::string& s);  // "halfplane" or "disk"

struct RenderOptions {
  Model model = Model::HalfPlane;
  int width = 800;
  int height = 600;
  int samples = 48;  // points per geodesic edge
};

struct Vertex {
  std::string label;  // "C1", "B2", or "C3=C4" for coincident vertices
  std::complex<double> z;
};

// Half-plane to disk, sending i to 0.
std::complex<double> to_disk(std::complex<double> z);
std::complex<double> to_model(const hyperbolic::HPoint& p, Model m);

// Labeled vertices in model coordinates; coincident vertices are merged.
std::vector<Vertex> model_vertices(const chains::TriangleChain& chain, Model m);
// Triangles with positive size, as indices into the chain order.
std::vector<std::size_t> visible_triangles(const chains::TriangleChain& chain);

std::string render_svg(const chains::TriangleChain& chain, const RenderOptions& opts = {});

}  // namespace orbitforge::render
