#pragma once

// Filtered cell complexes with explicit mod-2 boundaries.
//
// A complex is an ordered list of cells; position in the list is the cell id
// and also the filtration order. Boundaries list the (dim-1)-faces that occur
// with odd incidence, so a loop edge attached at a single vertex has an empty
// boundary. Such cells can carry an explicit vertex support for the
// vertex-function machinery (lower-star values, cone construction).

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace z2ph {

using CellId = std::uint32_t;

struct Cell {
  CellId id = 0;
  int dim = 0;
  double value = 0.0;
  std::vector<CellId> boundary;
  // Explicit vertex support. Empty means "derive from the boundary".
  std::vector<CellId> vertices;
  std::string label;
};

enum class Violation {
  none,
  id_order,
  negative_dimension,
  unknown_face,
  dimension_mismatch,
  duplicate_face,
  non_finite_value,
  monotonicity,
  filtration_order,
  boundary_not_cycle,
};

std::string_view to_string(Violation v);

struct ValidationReport {
  Violation kind = Violation::none;
  CellId cell = 0;
  std::string message;

  bool ok() const noexcept { return kind == Violation::none; }
};

class FilteredComplex {
 public:
  FilteredComplex() = default;
  explicit FilteredComplex(std::vector<Cell> cells) : cells_(std::move(cells)) {}

  // Appends a cell with the next free id. No checks; see validate().
  CellId add_cell(int dim, double value, std::vector<CellId> boundary,
                  std::string label = {}, std::vector<CellId> vertices = {});

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  const Cell& cell(CellId id) const { return cells_.at(id); }
  const Cell& operator[](CellId id) const { return cells_[id]; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }

  // -1 for the empty complex.
  int top_dim() const;
  std::vector<std::size_t> cell_counts() const;
  long euler_characteristic() const;
  std::vector<CellId> cells_of_dim(int k) const;
  std::optional<CellId> find_label(std::string_view label) const;

  // Vertex ids (0-cells) under each cell, ascending. Requires faces to precede
  // cofaces.
  std::vector<std::vector<CellId>> vertex_supports() const;

  // Stable order by (value, dim): sort_permutation()[new_id] = old id.
  std::vector<std::size_t> sort_permutation() const;
  // Cells listed by old id in the given order; ids and boundaries renumbered.
  FilteredComplex reordered(std::span<const std::size_t> order) const;
  FilteredComplex sorted() const { return reordered(sort_permutation()); }
  // Cells with value <= a, renumbered in order. Requires a monotone complex.
  FilteredComplex sublevel(double a) const;
  // Same cells, values replaced (one per cell), then sorted().
  FilteredComplex with_values(std::span<const double> values) const;

 private:
  std::vector<Cell> cells_;
};

enum class ValidationScope {
  structure,  // ids, faces, dimensions, duplicates, d∘d = 0
  filtration  // structure plus finite values, monotonicity and order
};

// First violated invariant, or an ok report.
ValidationReport validate(const FilteredComplex& c,
                          ValidationScope scope = ValidationScope::filtration);
// Throws ValidationError carrying the report message.
void require_valid(const FilteredComplex& c,
                   ValidationScope scope = ValidationScope::filtration);

// Real values on the 0-cells of a complex with a strict bound |f| < bound.
class VertexFunction {
 public:
  VertexFunction() = default;
  // bound defaults to max|f| + 1.
  explicit VertexFunction(std::map<CellId, double> values);
  VertexFunction(std::map<CellId, double> values, double bound);

  double operator()(CellId v) const;
  bool contains(CellId v) const { return values_.contains(v); }
  const std::map<CellId, double>& values() const noexcept { return values_; }
  double bound() const noexcept { return bound_; }
  double max_abs() const;

  // max_v |f(v) - g(v)|; throws ValidationError if the vertex sets differ.
  double sup_distance(const VertexFunction& other) const;
  VertexFunction shifted(double delta) const;

 private:
  std::map<CellId, double> values_;
  double bound_ = 1.0;
};

// Each cell takes the max of f over its vertex support; output is sorted.
// Throws ValidationError if a vertex has no value or a cell has no support.
FilteredComplex lower_star(const FilteredComplex& skeleton, const VertexFunction& f);

// A simplex given by its vertex labels and filtration value.
struct Simplex {
  std::vector<std::uint32_t> vertices;
  double value = 0.0;
};

// Closes a list of simplices under faces. Undeclared faces take the minimum
// value over the declared cofaces containing them. A declared face whose value
// exceeds a coface's is a ValidationError. Vertex cells are labelled with the
// vertex number; higher cells with "{v0,v1,...}". Before sorting, cells are
// created by dimension then lexicographically, so with equal values the k-th
// smallest vertex label gets cell id k.
FilteredComplex simplicial_complex(std::span<const Simplex> declared);

// Barycentric subdivision of a simplicial complex (every cell determined by
// its vertex support). Values are all zero. The result is a flag complex.
FilteredComplex barycentric_subdivision(const FilteredComplex& simplicial);

}  // namespace z2ph
