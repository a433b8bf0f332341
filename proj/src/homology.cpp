#include "z2ph/homology.hpp"

#include "z2ph/errors.hpp"

namespace z2ph {

namespace {

// Position of every cell among the cells of its own dimension.
std::vector<RowIndex> index_within_dim(const FilteredComplex& c) {
  std::vector<RowIndex> index(c.size());
  std::vector<RowIndex> next(static_cast<std::size_t>(c.top_dim() + 1), 0);
  for (const auto& cell : c.cells()) index[cell.id] = next[static_cast<std::size_t>(cell.dim)]++;
  return index;
}

}  // namespace

SparseZ2Matrix boundary_matrix(const FilteredComplex& c, int k) {
  const auto counts = c.cell_counts();
  auto count = [&](int d) -> std::size_t {
    return (d >= 0 && d < static_cast<int>(counts.size())) ? counts[static_cast<std::size_t>(d)] : 0;
  };
  SparseZ2Matrix m(count(k - 1));
  if (k < 0 || k > c.top_dim()) return m;
  const auto index = index_within_dim(c);
  for (CellId id : c.cells_of_dim(k)) {
    std::vector<RowIndex> rows;
    for (CellId f : c[id].boundary) rows.push_back(index[f]);
    m.push_back(Z2Column(std::move(rows)));
  }
  return m;
}

Chain boundary_of(const FilteredComplex& c, const Chain& chain) {
  std::vector<RowIndex> rows;
  for (CellId id : chain) rows.insert(rows.end(), c[id].boundary.begin(), c[id].boundary.end());
  const Z2Column col(std::move(rows));
  return Chain(col.rows().begin(), col.rows().end());
}

std::size_t betti(const FilteredComplex& c, int k) {
  require_valid(c, ValidationScope::structure);
  if (k < 0 || k > c.top_dim()) return 0;
  const auto cells_k = c.cells_of_dim(k).size();
  const auto kernel = cells_k - rank(boundary_matrix(c, k));
  return kernel - rank(boundary_matrix(c, k + 1));
}

std::vector<std::size_t> betti_numbers(const FilteredComplex& c) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= c.top_dim(); ++k) out.push_back(betti(c, k));
  return out;
}

namespace {

// Reduce the full boundary matrix in complex order, tracking the transform.
// Cells whose reduced column vanishes and which are never a pivot row are
// essential; their transform columns are cycles spanning homology.
std::map<int, std::vector<Chain>> essential_cycles(const FilteredComplex& c) {
  require_valid(c, ValidationScope::structure);
  SparseZ2Matrix full(c.size());
  for (const auto& cell : c.cells()) {
    full.push_back(Z2Column(std::vector<RowIndex>(cell.boundary.begin(), cell.boundary.end())));
  }
  const auto red = reduce_columns(full, true);
  std::map<int, std::vector<Chain>> out;
  for (const auto& cell : c.cells()) {
    if (!red.reduced[cell.id].empty() || red.pivot_col[cell.id]) continue;
    const auto& t = red.transform[cell.id];
    out[cell.dim].emplace_back(t.rows().begin(), t.rows().end());
  }
  return out;
}

}  // namespace

std::vector<Chain> generators(const FilteredComplex& c, int k) {
  auto all = essential_cycles(c);
  auto it = all.find(k);
  return it == all.end() ? std::vector<Chain>{} : std::move(it->second);
}

HomologySummary homology(const FilteredComplex& c) {
  HomologySummary s;
  s.generators = essential_cycles(c);
  for (int k = 0; k <= c.top_dim(); ++k) {
    s.betti[k] = betti(c, k);
    s.generators[k];  // present even when empty
  }
  return s;
}

DualityReport duality_check(const FilteredComplex& c, int n) {
  if (n < 0) throw ValidationError("duality_check: manifold dimension must be nonnegative");
  DualityReport r;
  for (int k = 0; k <= n; ++k) {
    if (betti(c, k) != betti(c, n - k)) r.mismatched_degrees.push_back(k);
  }
  r.ok = r.mismatched_degrees.empty();
  return r;
}

}  // namespace z2ph
