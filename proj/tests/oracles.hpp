#pragma once

// Independent reference implementations for the tests. Everything here is
// dense and brute force; nothing calls the library's reduction code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "z2ph/complex.hpp"
#include "z2ph/persistence.hpp"

namespace oracle {

using Bits = std::vector<std::uint8_t>;

// Rank of a list of equal-length GF(2) vectors by Gaussian elimination.
inline std::size_t dense_rank(std::vector<Bits> vecs) {
  if (vecs.empty()) return 0;
  const std::size_t n = vecs.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < vecs.size(); ++col) {
    std::size_t piv = r;
    while (piv < vecs.size() && !vecs[piv][col]) ++piv;
    if (piv == vecs.size()) continue;
    std::swap(vecs[r], vecs[piv]);
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      if (i != r && vecs[i][col]) {
        for (std::size_t c = 0; c < n; ++c) vecs[i][c] ^= vecs[r][c];
      }
    }
    ++r;
  }
  return r;
}

// Basis of {x : sum_j x_j cols[j] = 0}, vectors indexed by column.
inline std::vector<Bits> dense_kernel(const std::vector<Bits>& cols, std::size_t rows) {
  const std::size_t m = cols.size();
  // Augmented rows [col_j | e_j]; eliminate on the first `rows` entries.
  std::vector<Bits> aug(m, Bits(rows + m, 0));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < rows; ++i) aug[j][i] = cols[j][i];
    aug[j][rows + j] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < rows && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && !aug[piv][c]) ++piv;
    if (piv == m) continue;
    std::swap(aug[r], aug[piv]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i != r && aug[i][c]) {
        for (std::size_t k = 0; k < rows + m; ++k) aug[i][k] ^= aug[r][k];
      }
    }
    ++r;
  }
  std::vector<Bits> kernel;
  for (std::size_t i = r; i < m; ++i) kernel.emplace_back(aug[i].begin() + rows, aug[i].end());
  return kernel;
}

using CellSet = std::vector<bool>;  // indexed by cell id

// Rank of H_k(X_a, A_a) -> H_k(X_b, A_b) induced by inclusion, for
// subcomplexes A_a ⊆ X_a, A_b ⊆ X_b, X_a ⊆ X_b, A_a ⊆ A_b.
inline std::size_t relative_map_rank(const z2ph::FilteredComplex& c, int k, const CellSet& xa,
                                     const CellSet& aa, const CellSet& xb, const CellSet& ab) {
  const std::size_t n = c.size();
  auto unit = [n](z2ph::CellId id) {
    Bits v(n, 0);
    v[id] = 1;
    return v;
  };
  auto boundary_vec = [&](z2ph::CellId id) {
    Bits v(n, 0);
    for (auto f : c[id].boundary) v[f] ^= 1;
    return v;
  };
  // Relative cycles of (X_a, A_a): k-chains of X_a whose boundary lies in A_a.
  std::vector<z2ph::CellId> ka;
  for (const auto& cell : c.cells()) {
    if (cell.dim == k && xa[cell.id]) ka.push_back(cell.id);
  }
  std::vector<Bits> cols;
  for (auto id : ka) {
    Bits b = boundary_vec(id);
    for (std::size_t i = 0; i < n; ++i) {
      if (aa[i]) b[i] = 0;
    }
    cols.push_back(std::move(b));
  }
  std::vector<Bits> cycles;
  for (const auto& x : dense_kernel(cols, n)) {
    Bits chain(n, 0);
    for (std::size_t j = 0; j < ka.size(); ++j) {
      if (x[j]) chain[ka[j]] ^= 1;
    }
    cycles.push_back(std::move(chain));
  }
  // Denominator in C_k(X_b): boundaries of X_b plus chains of A_b.
  std::vector<Bits> denom;
  for (const auto& cell : c.cells()) {
    if (!xb[cell.id]) continue;
    if (cell.dim == k + 1) denom.push_back(boundary_vec(cell.id));
    if (cell.dim == k && ab[cell.id]) denom.push_back(unit(cell.id));
  }
  const std::size_t base = dense_rank(denom);
  denom.insert(denom.end(), cycles.begin(), cycles.end());
  return dense_rank(denom) - base;
}

inline CellSet sublevel_set(const z2ph::FilteredComplex& c, double a) {
  CellSet s(c.size());
  for (const auto& cell : c.cells()) s[cell.id] = cell.value <= a;
  return s;
}

// Betti number of a subcomplex by rank-nullity on dense matrices.
inline std::size_t subcomplex_betti(const z2ph::FilteredComplex& c, const CellSet& x, int k) {
  const CellSet none(c.size(), false);
  return relative_map_rank(c, k, x, none, x, none);
}

// Bottleneck distance by enumerating every partial matching.
inline double exhaustive_bottleneck(const std::vector<z2ph::Interval>& left,
                                    const std::vector<z2ph::Interval>& right) {
  const double inf = std::numeric_limits<double>::infinity();
  auto del = [inf](const z2ph::Interval& i) {
    return i.finite() ? (i.death - i.birth) / 2.0 : inf;
  };
  auto match = [inf](const z2ph::Interval& i, const z2ph::Interval& j) {
    const double db = std::abs(i.birth - j.birth);
    if (!i.finite() && !j.finite()) return db;
    if (i.finite() != j.finite()) return inf;
    return std::max(db, std::abs(i.death - j.death));
  };
  double best = inf;
  std::vector<bool> used(right.size(), false);
  std::function<void(std::size_t, double)> go = [&](std::size_t i, double worst) {
    if (worst >= best) return;
    if (i == left.size()) {
      for (std::size_t j = 0; j < right.size(); ++j) {
        if (!used[j]) worst = std::max(worst, del(right[j]));
      }
      best = std::min(best, worst);
      return;
    }
    go(i + 1, std::max(worst, del(left[i])));
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      go(i + 1, std::max(worst, match(left[i], right[j])));
      used[j] = false;
    }
  };
  go(0, 0.0);
  return best;
}

// A random invertible n x n GF(2) matrix and its inverse, as a product of
// elementary row additions and swaps. Row-major.
struct Invertible {
  std::vector<Bits> m, inv;
};

inline Invertible random_invertible(std::size_t n, std::mt19937& rng) {
  Invertible r;
  r.m.assign(n, Bits(n, 0));
  r.inv.assign(n, Bits(n, 0));
  for (std::size_t i = 0; i < n; ++i) r.m[i][i] = r.inv[i][i] = 1;
  if (n < 2) return r;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t step = 0; step < 3 * n; ++step) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    // m <- E m and inv <- inv E^{-1}; E adds row j into row i (self-inverse).
    for (std::size_t c = 0; c < n; ++c) r.m[i][c] ^= r.m[j][c];
    for (std::size_t c = 0; c < n; ++c) r.inv[c][j] ^= r.inv[c][i];
  }
  return r;
}

inline std::vector<Bits> multiply(const std::vector<Bits>& a, const std::vector<Bits>& b,
                                  std::size_t inner, std::size_t cols) {
  std::vector<Bits> out(a.size(), Bits(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (!a[i][k]) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] ^= b[k][j];
    }
  }
  return out;
}

// Rank of V_a -> V_b in the direct sum of interval modules, computed as the
// composite V_a -> V_c -> V_b through a random intermediate level c, with each
// V_t written in a random basis.
inline std::size_t interval_module_rank(const std::vector<z2ph::Interval>& bars, double a,
                                        double b, std::mt19937& rng) {
  auto alive = [&](double t) {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < bars.size(); ++i) {
      if (bars[i].contains(t)) ids.push_back(i);
    }
    return ids;
  };
  // Structure map V_s -> V_t in the standard bases: identity on shared bars.
  auto structure = [&](const std::vector<std::size_t>& from, const std::vector<std::size_t>& to) {
    std::vector<Bits> m(to.size(), Bits(from.size(), 0));
    for (std::size_t i = 0; i < to.size(); ++i) {
      for (std::size_t j = 0; j < from.size(); ++j) m[i][j] = to[i] == from[j];
    }
    return m;
  };
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double c = a + (b - a) * u(rng);
  const auto va = alive(a), vc = alive(c), vb = alive(b);
  if (va.empty() || vb.empty()) return 0;
  const auto pa = random_invertible(va.size(), rng);
  const auto pc = random_invertible(vc.size(), rng);
  const auto pb = random_invertible(vb.size(), rng);
  // In random bases: P_t S P_s^{-1}.
  auto change = [&](const Invertible& to, const std::vector<Bits>& s, const Invertible& from,
                    std::size_t n_from) {
    const auto left = multiply(to.m, s, to.m.size(), n_from);
    return multiply(left, from.inv, n_from, n_from);
  };
  const auto ac = change(pc, structure(va, vc), pa, va.size());
  const auto cb = change(pb, structure(vc, vb), pc, vc.size());
  std::vector<Bits> composite =
      vc.empty() ? std::vector<Bits>(vb.size(), Bits(va.size(), 0))
                 : multiply(cb, ac, vc.size(), va.size());
  return dense_rank(composite);
}

// Random simplicial complex (closure of random simplices on `vertices`
// vertices, dimension <= max_dim) with at most max_cells cells, all values 0.
inline z2ph::FilteredComplex random_simplicial(std::mt19937& rng, std::size_t vertices,
                                               int max_dim, std::size_t max_cells) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(vertices - 1));
  std::uniform_int_distribution<int> size_dist(1, max_dim + 1);
  std::set<std::vector<std::uint32_t>> closure;
  std::vector<z2ph::Simplex> declared;
  for (std::uint32_t v = 0; v < vertices; ++v) {
    closure.insert({v});
    declared.push_back({{v}, 0.0});
  }
  for (int attempt = 0; attempt < 60; ++attempt) {
    std::set<std::uint32_t> vs;
    const int size = size_dist(rng);
    while (static_cast<int>(vs.size()) < size) vs.insert(pick(rng));
    const std::vector<std::uint32_t> s(vs.begin(), vs.end());
    if (closure.contains(s)) continue;
    std::set<std::vector<std::uint32_t>> added = closure;
    for (std::uint32_t mask = 1; mask < (1u << s.size()); ++mask) {
      std::vector<std::uint32_t> face;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (mask & (1u << i)) face.push_back(s[i]);
      }
      added.insert(face);
    }
    if (added.size() > max_cells) continue;
    closure = std::move(added);
    declared.push_back({s, 0.0});
  }
  return z2ph::simplicial_complex(declared);
}

// Random vertex function with values on a coarse grid (ties are common).
inline z2ph::VertexFunction random_vertex_function(const z2ph::FilteredComplex& c,
                                                   std::mt19937& rng, double lo = -2.0,
                                                   double hi = 2.0, int levels = 9) {
  std::uniform_int_distribution<int> level(0, levels - 1);
  std::map<z2ph::CellId, double> values;
  for (auto v : c.cells_of_dim(0)) {
    values[v] = lo + (hi - lo) * level(rng) / static_cast<double>(levels - 1);
  }
  return z2ph::VertexFunction(std::move(values));
}

// Random monotone filtration: random values on every cell raised to the max of
// their faces, then sorted.
inline z2ph::FilteredComplex random_filtration(const z2ph::FilteredComplex& skeleton,
                                               std::mt19937& rng) {
  std::uniform_int_distribution<int> level(0, 6);
  std::vector<double> values(skeleton.size());
  for (const auto& cell : skeleton.cells()) {
    double v = level(rng) * 0.5;
    for (auto f : cell.boundary) v = std::max(v, values[f]);
    values[cell.id] = v;
  }
  return skeleton.with_values(values);
}

inline std::vector<z2ph::Interval> random_intervals(std::mt19937& rng, std::size_t max_bars,
                                                    bool allow_infinite = true,
                                                    int grid = 8) {
  std::uniform_int_distribution<std::size_t> count(0, max_bars);
  std::uniform_int_distribution<int> point(0, grid);
  std::bernoulli_distribution infinite(allow_infinite ? 0.25 : 0.0);
  std::vector<z2ph::Interval> out;
  const std::size_t n = count(rng);
  while (out.size() < n) {
    const int x = point(rng), y = point(rng);
    if (x == y) continue;
    z2ph::Interval i{0.5 * std::min(x, y), 0.5 * std::max(x, y)};
    if (infinite(rng)) i.death = z2ph::kInfinity;
    out.push_back(i);
  }
  return out;
}

}  // namespace oracle
