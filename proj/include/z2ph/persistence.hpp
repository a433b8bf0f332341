#pragma once

// Persistence of a filtered complex: boundary-matrix reduction, barcodes,
// persistent Betti numbers and pointwise dimension functions.

#include <compare>
#include <limits>
#include <span>
#include <vector>

#include "z2ph/complex.hpp"

namespace z2ph {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Half-open [birth, death); death may be +infinity.
struct Interval {
  double birth = 0.0;
  double death = kInfinity;

  bool finite() const noexcept { return death != kInfinity; }
  double length() const noexcept { return death - birth; }
  bool contains(double t) const noexcept { return birth <= t && t < death; }

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

struct Bar {
  int dim = 0;
  Interval interval;

  friend auto operator<=>(const Bar&, const Bar&) = default;
};

// Multiset of bars, kept sorted by (dim, birth, death).
class Barcode {
 public:
  Barcode() = default;
  // Throws ValidationError unless every bar has dim >= 0 and birth < death.
  explicit Barcode(std::vector<Bar> bars);

  const std::vector<Bar>& bars() const noexcept { return bars_; }
  std::size_t size() const noexcept { return bars_.size(); }
  bool empty() const noexcept { return bars_.empty(); }
  // -1 when empty.
  int max_dim() const noexcept;
  std::vector<Interval> in_dim(int k) const;

  // Every endpoint moved by delta.
  Barcode shifted(double delta) const;

  friend bool operator==(const Barcode&, const Barcode&) = default;

 private:
  std::vector<Bar> bars_;
};

struct PersistencePair {
  CellId birth = 0;
  CellId death = 0;
};

struct Pairing {
  std::vector<PersistencePair> pairs;
  std::vector<CellId> essential;
};

// Standard left-to-right reduction of the full boundary matrix in filtration
// order. Column j pairs with row low(j); cells that are neither create
// essential classes. Throws ValidationError on an invalid complex.
Pairing reduce(const FilteredComplex& c);

// [value(birth), value(death)) per pair of distinct values, [value, inf) per
// essential cell. Zero-length pairs are dropped.
Barcode barcode(const FilteredComplex& c);
Barcode barcode(const FilteredComplex& c, const Pairing& pairing);

// Number of k-bars with birth <= a and death > a + p (rank of the map from
// level a to level a + p). Throws ValidationError if p < 0.
std::size_t persistent_betti(const Barcode& b, int k, double a, double p);

// Piecewise-constant a -> dim of the degree-k diagram. dims[0] covers
// (-inf, critical[0]); dims[i] covers [critical[i-1], critical[i]).
struct DimensionFunction {
  std::vector<double> critical_values;
  std::vector<std::size_t> dims{0};

  std::size_t at(double t) const;
};

DimensionFunction dimension_function(const Barcode& b, int k);
DimensionFunction dimension_function(std::span<const Interval> intervals);

// True iff both interval multisets have the same pointwise dimension
// function. Empty intervals (birth >= death) contribute nothing.
bool characteristic_sum_identity_check(std::span<const Interval> lhs,
                                       std::span<const Interval> rhs);

}  // namespace z2ph
