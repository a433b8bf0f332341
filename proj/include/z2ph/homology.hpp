#pragma once

// Absolute Z/2 homology of a finite cell complex.

#include <map>
#include <vector>

#include "z2ph/complex.hpp"
#include "z2ph/z2_linear.hpp"

namespace z2ph {

// A GF(2) chain: ascending cell ids with coefficient 1.
using Chain = std::vector<CellId>;

// Matrix of the boundary map from k-cells to (k-1)-cells. Columns follow the
// order of cells_of_dim(k); row r is the r-th (k-1)-cell in complex order.
SparseZ2Matrix boundary_matrix(const FilteredComplex& c, int k);

// Boundary of a chain, mod 2.
Chain boundary_of(const FilteredComplex& c, const Chain& chain);

// dim ker d_k - rank d_{k+1}. Zero for k outside [0, top_dim].
std::size_t betti(const FilteredComplex& c, int k);
std::vector<std::size_t> betti_numbers(const FilteredComplex& c);

// Cycles whose classes form a basis of H_k. The choice is not canonical: these
// are the representatives the column reduction produces in complex order.
std::vector<Chain> generators(const FilteredComplex& c, int k);

struct HomologySummary {
  std::map<int, std::size_t> betti;
  std::map<int, std::vector<Chain>> generators;
};

HomologySummary homology(const FilteredComplex& c);

struct DualityReport {
  bool ok = true;
  std::vector<int> mismatched_degrees;  // k with betti(k) != betti(n-k)
};

// Betti symmetry of a closed n-manifold over Z/2. The caller asserts that c is
// one; nothing here checks it.
DualityReport duality_check(const FilteredComplex& c, int n);

}  // namespace z2ph
