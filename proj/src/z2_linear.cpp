#include "z2ph/z2_linear.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "z2ph/errors.hpp"

namespace z2ph {

Z2Column::Z2Column(std::vector<RowIndex> rows) {
  std::sort(rows.begin(), rows.end());
  rows_.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size();) {
    std::size_t j = i;
    while (j < rows.size() && rows[j] == rows[i]) ++j;
    if ((j - i) % 2 == 1) rows_.push_back(rows[i]);
    i = j;
  }
}

Z2Column::Z2Column(std::initializer_list<RowIndex> rows)
    : Z2Column(std::vector<RowIndex>(rows)) {}

bool Z2Column::contains(RowIndex r) const noexcept {
  return std::binary_search(rows_.begin(), rows_.end(), r);
}

Z2Column& Z2Column::operator+=(const Z2Column& other) {
  std::vector<RowIndex> sum;
  sum.reserve(rows_.size() + other.rows_.size());
  std::set_symmetric_difference(rows_.begin(), rows_.end(), other.rows_.begin(),
                                other.rows_.end(), std::back_inserter(sum));
  rows_ = std::move(sum);
  return *this;
}

Z2Column add_into(const Z2Column& target, const Z2Column& source) {
  Z2Column out = target;
  out += source;
  return out;
}

std::optional<RowIndex> low(const Z2Column& col) {
  if (col.empty()) return std::nullopt;
  return col.rows().back();
}

SparseZ2Matrix::SparseZ2Matrix(std::size_t num_rows, std::vector<Z2Column> columns)
    : num_rows_(num_rows) {
  columns_.reserve(columns.size());
  for (auto& c : columns) push_back(std::move(c));
}

void SparseZ2Matrix::push_back(Z2Column col) {
  if (auto l = low(col); l && *l >= num_rows_) {
    throw ValidationError("row index " + std::to_string(*l) + " out of range for " +
                          std::to_string(num_rows_) + " rows");
  }
  columns_.push_back(std::move(col));
}

ColumnReduction reduce_columns(const SparseZ2Matrix& m, bool track_transform) {
  ColumnReduction out;
  out.reduced.assign(m.columns().begin(), m.columns().end());
  out.pivot_col.assign(m.num_rows(), std::nullopt);
  if (track_transform) {
    out.transform.reserve(m.num_cols());
    for (std::size_t j = 0; j < m.num_cols(); ++j) {
      out.transform.emplace_back(Z2Column{static_cast<RowIndex>(j)});
    }
  }
  for (std::size_t j = 0; j < out.reduced.size(); ++j) {
    Z2Column& col = out.reduced[j];
    while (auto l = low(col)) {
      auto& owner = out.pivot_col[*l];
      if (!owner) {
        owner = j;
        break;
      }
      col += out.reduced[*owner];
      if (track_transform) out.transform[j] += out.transform[*owner];
    }
  }
  return out;
}

std::size_t rank(const SparseZ2Matrix& m) {
  const auto red = reduce_columns(m);
  return static_cast<std::size_t>(
      std::count_if(red.reduced.begin(), red.reduced.end(),
                    [](const Z2Column& c) { return !c.empty(); }));
}

}  // namespace z2ph
