#include "z2ph/persistence.hpp"

#include <algorithm>
#include <cmath>

#include "z2ph/errors.hpp"
#include "z2ph/z2_linear.hpp"

namespace z2ph {

Barcode::Barcode(std::vector<Bar> bars) : bars_(std::move(bars)) {
  for (const auto& b : bars_) {
    if (b.dim < 0) throw ValidationError("bar with negative dimension");
    if (std::isnan(b.interval.birth) || std::isnan(b.interval.death) ||
        !(b.interval.birth < b.interval.death) || b.interval.birth == kInfinity) {
      throw ValidationError("bar interval must satisfy birth < death");
    }
  }
  std::sort(bars_.begin(), bars_.end());
}

int Barcode::max_dim() const noexcept {
  int m = -1;
  for (const auto& b : bars_) m = std::max(m, b.dim);
  return m;
}

std::vector<Interval> Barcode::in_dim(int k) const {
  std::vector<Interval> out;
  for (const auto& b : bars_) {
    if (b.dim == k) out.push_back(b.interval);
  }
  return out;
}

Barcode Barcode::shifted(double delta) const {
  auto bars = bars_;
  for (auto& b : bars) {
    b.interval.birth += delta;
    b.interval.death += delta;
  }
  return Barcode(std::move(bars));
}

Pairing reduce(const FilteredComplex& c) {
  require_valid(c, ValidationScope::filtration);
  SparseZ2Matrix full(c.size());
  for (const auto& cell : c.cells()) {
    full.push_back(Z2Column(std::vector<RowIndex>(cell.boundary.begin(), cell.boundary.end())));
  }
  const auto red = reduce_columns(full);
  Pairing p;
  for (std::size_t j = 0; j < red.reduced.size(); ++j) {
    if (auto l = low(red.reduced[j])) {
      p.pairs.push_back({static_cast<CellId>(*l), static_cast<CellId>(j)});
    } else if (!red.pivot_col[j]) {
      p.essential.push_back(static_cast<CellId>(j));
    }
  }
  return p;
}

Barcode barcode(const FilteredComplex& c, const Pairing& pairing) {
  std::vector<Bar> bars;
  for (const auto& [b, d] : pairing.pairs) {
    const double birth = c[b].value, death = c[d].value;
    if (birth < death) bars.push_back({c[b].dim, {birth, death}});
  }
  for (CellId e : pairing.essential) bars.push_back({c[e].dim, {c[e].value, kInfinity}});
  return Barcode(std::move(bars));
}

Barcode barcode(const FilteredComplex& c) { return barcode(c, reduce(c)); }

std::size_t persistent_betti(const Barcode& b, int k, double a, double p) {
  if (!(p >= 0.0)) throw ValidationError("persistence p must be nonnegative");
  std::size_t n = 0;
  for (const auto& bar : b.bars()) {
    if (bar.dim == k && bar.interval.birth <= a && bar.interval.death > a + p) ++n;
  }
  return n;
}

std::size_t DimensionFunction::at(double t) const {
  const auto piece = std::upper_bound(critical_values.begin(), critical_values.end(), t) -
                     critical_values.begin();
  return dims[static_cast<std::size_t>(piece)];
}

DimensionFunction dimension_function(std::span<const Interval> intervals) {
  DimensionFunction f;
  for (const auto& i : intervals) {
    if (!(i.birth < i.death)) continue;
    f.critical_values.push_back(i.birth);
    if (i.finite()) f.critical_values.push_back(i.death);
  }
  std::sort(f.critical_values.begin(), f.critical_values.end());
  f.critical_values.erase(std::unique(f.critical_values.begin(), f.critical_values.end()),
                          f.critical_values.end());
  f.dims.assign(f.critical_values.size() + 1, 0);
  for (std::size_t piece = 1; piece < f.dims.size(); ++piece) {
    const double t = f.critical_values[piece - 1];
    f.dims[piece] = static_cast<std::size_t>(std::count_if(
        intervals.begin(), intervals.end(), [t](const Interval& i) { return i.contains(t); }));
  }
  return f;
}

DimensionFunction dimension_function(const Barcode& b, int k) {
  const auto intervals = b.in_dim(k);
  return dimension_function(intervals);
}

bool characteristic_sum_identity_check(std::span<const Interval> lhs,
                                       std::span<const Interval> rhs) {
  const auto f = dimension_function(lhs);
  const auto g = dimension_function(rhs);
  // Both are constant between consecutive points of the merged critical set.
  std::vector<double> probes = f.critical_values;
  probes.insert(probes.end(), g.critical_values.begin(), g.critical_values.end());
  if (f.dims.front() != g.dims.front()) return false;
  return std::all_of(probes.begin(), probes.end(),
                     [&](double t) { return f.at(t) == g.at(t); });
}

}  // namespace z2ph
