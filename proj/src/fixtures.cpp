#include "z2ph/fixtures.hpp"

#include <array>
#include <cmath>
#include <string>

#include "z2ph/errors.hpp"

namespace z2ph {

FilteredComplex ng_cw(int g) {
  if (g < 1) throw ValidationError("ng_cw: genus must be at least 1");
  FilteredComplex c;
  const CellId v = c.add_cell(0, 0.0, {}, "v");
  for (int i = 1; i <= g; ++i) c.add_cell(1, 0.0, {}, "a" + std::to_string(i), {v});
  c.add_cell(2, 0.0, {}, "D", {v});
  return c;
}

FilteredComplex klein_delta() {
  FilteredComplex c;
  const CellId v = c.add_cell(0, 0.0, {}, "v");
  const CellId a = c.add_cell(1, 0.0, {}, "a", {v});
  const CellId b = c.add_cell(1, 0.0, {}, "b", {v});
  const CellId e = c.add_cell(1, 0.0, {}, "c", {v});
  c.add_cell(2, 0.0, {a, b, e}, "U");
  c.add_cell(2, 0.0, {a, b, e}, "L");
  return c;
}

namespace {

// m x n grid on the cylinder Z_n x [0, m], column m glued to column 0 either
// directly (torus) or through the reflection j -> -j (Klein bottle). Vertex
// (i, j) has label i * n + j.
std::vector<Simplex> grid_surface(int m, int n, bool klein) {
  auto vertex = [=](int i, int j) -> std::uint32_t {
    j = ((j % n) + n) % n;
    if (i == m) {
      i = 0;
      if (klein) j = (n - j) % n;
    }
    return static_cast<std::uint32_t>(i * n + j);
  };
  std::vector<Simplex> tris;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto a = vertex(i, j), b = vertex(i + 1, j), c = vertex(i + 1, j + 1),
                 d = vertex(i, j + 1);
      tris.push_back(Simplex{{a, b, c}, 0.0});
      tris.push_back(Simplex{{a, c, d}, 0.0});
    }
  }
  return tris;
}

constexpr int kGridColumns = 3;
constexpr int kGridRows = 4;

void check_levels(double M, double A, const char* who) {
  if (!(0.0 < A && A < M) || !std::isfinite(M)) {
    throw ValidationError(std::string(who) + ": requires 0 < A < M");
  }
}

}  // namespace

FilteredComplex torus_delta() { return simplicial_complex(grid_surface(3, 3, false)); }

HeightSurface klein_height_surface(double M, double A) {
  check_levels(M, A, "klein_height");
  HeightSurface s{simplicial_complex(grid_surface(kGridColumns, kGridRows, true)), {}};
  // Row 0 is fixed by the reflection, so it closes up into a one-sided loop;
  // its complement retracts onto the other one-sided loop (row n/2).
  std::map<CellId, double> f;
  for (int i = 0; i < kGridColumns; ++i) {
    for (int j = 0; j < kGridRows; ++j) {
      const auto v = static_cast<CellId>(i * kGridRows + j);
      f[v] = (i == 0 && j == 0) ? -M : (j == 0 ? -A : M);
    }
  }
  s.height = VertexFunction(std::move(f));
  return s;
}

FilteredComplex klein_height(double M, double A) {
  return klein_height_surface(M, A).filtration();
}

HeightSurface torus_height_surface(double M, double A) {
  check_levels(M, A, "torus_height");
  HeightSurface s{simplicial_complex(grid_surface(kGridColumns, kGridRows, false)), {}};
  std::map<CellId, double> f;
  for (int i = 0; i < kGridColumns; ++i) {
    for (int j = 0; j < kGridRows; ++j) {
      const auto v = static_cast<CellId>(i * kGridRows + j);
      double x = A;
      if (j == 0) x = (i == 0) ? -M : -A;
      if (i == 1 && j == 2) x = M;
      f[v] = x;
    }
  }
  s.height = VertexFunction(std::move(f));
  return s;
}

FilteredComplex ng_simplicial(int g) {
  if (g < 1) throw ValidationError("ng_simplicial: genus must be at least 1");
  using Tri = std::array<std::uint32_t, 3>;
  static constexpr std::array<Tri, 10> kProjectivePlane{{{0, 1, 2},
                                                         {0, 2, 3},
                                                         {0, 3, 4},
                                                         {0, 4, 5},
                                                         {0, 5, 1},
                                                         {1, 2, 4},
                                                         {2, 3, 5},
                                                         {3, 4, 1},
                                                         {4, 5, 2},
                                                         {5, 1, 3}}};
  std::vector<Tri> surface(kProjectivePlane.begin(), kProjectivePlane.end());
  std::uint32_t next_label = 6;
  for (int copy = 1; copy < g; ++copy) {
    // Cut out the most recent triangle and glue in a projective plane minus
    // its first triangle along the same three vertices.
    const Tri hole = surface.back();
    surface.pop_back();
    std::array<std::uint32_t, 6> relabel{hole[0], hole[1], hole[2], 0, 0, 0};
    for (std::size_t v = 3; v < 6; ++v) relabel[v] = next_label++;
    for (std::size_t t = 1; t < kProjectivePlane.size(); ++t) {
      const Tri& tri = kProjectivePlane[t];
      surface.push_back({relabel[tri[0]], relabel[tri[1]], relabel[tri[2]]});
    }
  }
  std::vector<Simplex> declared;
  declared.reserve(surface.size());
  for (const auto& t : surface) declared.push_back(Simplex{{t[0], t[1], t[2]}, 0.0});
  return simplicial_complex(declared);
}

FilteredComplex generate(std::string_view name, const FixtureParams& params) {
  if (name == "ng_cw") return ng_cw(params.genus);
  if (name == "ng_simplicial") return ng_simplicial(params.genus);
  if (name == "klein_delta") return klein_delta();
  if (name == "torus_delta") return torus_delta();
  if (name == "klein_height") return klein_height(params.bound, params.level);
  if (name == "torus_height") return torus_height_surface(params.bound, params.level).filtration();
  throw ValidationError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace z2ph
