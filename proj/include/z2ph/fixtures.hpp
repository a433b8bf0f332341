#pragma once

// Built-in complexes: the cell structure of the non-orientable surfaces N_g,
// Delta-complex and simplicial surfaces, and height-filtered Klein bottle and
// vertical torus.

#include <string_view>

#include "z2ph/complex.hpp"

namespace z2ph {

// One 0-cell, g loop 1-cells and one 2-cell glued along a1 a1 ... ag ag. All
// mod-2 boundaries vanish. Requires g >= 1.
FilteredComplex ng_cw(int g);

// Delta-complex Klein bottle: v; a, b, c; U, L with dU = dL = a + b + c.
FilteredComplex klein_delta();

// 3x3 grid triangulation of the torus (9 vertices, 27 edges, 18 triangles).
FilteredComplex torus_delta();

// Simplicial N_g as a connected sum of g six-vertex projective planes.
FilteredComplex ng_simplicial(int g);

// A skeleton together with a height function on its vertices.
struct HeightSurface {
  FilteredComplex skeleton;
  VertexFunction height;

  FilteredComplex filtration() const { return lower_star(skeleton, height); }
};

// Triangulated Klein bottle (3x4 grid, ends glued by a reflection) whose
// lower-star filtration has critical values -M, -A, M: a point at -M, a
// one-sided loop at -A, the rest of the surface at M. Requires 0 < A < M.
HeightSurface klein_height_surface(double M, double A);
FilteredComplex klein_height(double M, double A);

// Vertical torus on the same grid: minimum -M, saddles -A and A, maximum M.
HeightSurface torus_height_surface(double M, double A);

struct FixtureParams {
  int genus = 2;
  double bound = 2.0;
  double level = 1.0;
};

// Dispatch by name: ng_cw, ng_simplicial, klein_delta, torus_delta,
// klein_height, torus_height. Throws ValidationError on unknown names or
// invalid parameters.
FilteredComplex generate(std::string_view name, const FixtureParams& params = {});

}  // namespace z2ph
