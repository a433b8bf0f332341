#pragma once

// Sparse linear algebra over the two-element field.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace z2ph {

using RowIndex = std::uint32_t;

// A GF(2) column stored as the strictly increasing list of rows holding a 1.
class Z2Column {
 public:
  Z2Column() = default;
  // Sorts the input and cancels repeated indices in pairs (1 + 1 = 0).
  explicit Z2Column(std::vector<RowIndex> rows);
  Z2Column(std::initializer_list<RowIndex> rows);

  std::span<const RowIndex> rows() const noexcept { return rows_; }
  bool empty() const noexcept { return rows_.empty(); }
  std::size_t size() const noexcept { return rows_.size(); }
  bool contains(RowIndex r) const noexcept;

  // In-place GF(2) addition (symmetric difference of supports).
  Z2Column& operator+=(const Z2Column& other);

  friend bool operator==(const Z2Column&, const Z2Column&) = default;

 private:
  std::vector<RowIndex> rows_;
};

Z2Column add_into(const Z2Column& target, const Z2Column& source);

// Largest row index holding a 1, absent for the zero column.
std::optional<RowIndex> low(const Z2Column& col);

class SparseZ2Matrix {
 public:
  SparseZ2Matrix() = default;
  explicit SparseZ2Matrix(std::size_t num_rows) : num_rows_(num_rows) {}
  // Throws ValidationError if a row index is out of range.
  SparseZ2Matrix(std::size_t num_rows, std::vector<Z2Column> columns);

  std::size_t num_rows() const noexcept { return num_rows_; }
  std::size_t num_cols() const noexcept { return columns_.size(); }
  const Z2Column& column(std::size_t j) const { return columns_[j]; }
  std::span<const Z2Column> columns() const noexcept { return columns_; }

  void push_back(Z2Column col);

 private:
  std::size_t num_rows_ = 0;
  std::vector<Z2Column> columns_;
};

// Result of the standard left-to-right column reduction. `reduced` has the
// property that nonzero columns have pairwise distinct lows; `pivot_col[r]`
// names the column whose low is r (if any).
struct ColumnReduction {
  std::vector<Z2Column> reduced;
  std::vector<std::optional<std::size_t>> pivot_col;
  // When tracking is requested, column j of `transform` records which original
  // columns were summed to produce reduced column j.
  std::vector<Z2Column> transform;
};

ColumnReduction reduce_columns(const SparseZ2Matrix& m, bool track_transform = false);

std::size_t rank(const SparseZ2Matrix& m);

}  // namespace z2ph
