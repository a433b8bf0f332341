#pragma once

// Bottleneck distance between barcodes, which for finite-type diagrams is the
// interleaving distance.
//
// Matching two bars costs the larger endpoint gap; leaving a bar unmatched
// costs half its length. Bars of infinite length can only be matched with one
// another.

#include <optional>
#include <span>
#include <vector>

#include "z2ph/complex.hpp"
#include "z2ph/extended.hpp"
#include "z2ph/persistence.hpp"

namespace z2ph {

// max(|b_I - b_J|, |d_I - d_J|), with inf - inf read as 0.
double matching_cost(const Interval& i, const Interval& j);
// Half the length of the bar; infinite for an infinite bar.
double deletion_cost(const Interval& i);
// min(matching_cost, max of the two deletion costs).
double interval_distance(const Interval& i, const Interval& j);

struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> unmatched_left;
  std::vector<std::size_t> unmatched_right;
};

struct BottleneckResult {
  double distance = 0.0;
  Matching matching;  // a witness attaining `distance`; empty when infinite
};

// Exact: the optimum is one of the finitely many matching/deletion costs, so
// a binary search over those with a perfect-matching feasibility test finds it.
BottleneckResult bottleneck_matching(std::span<const Interval> left,
                                     std::span<const Interval> right);

// Per degree.
double bottleneck(const Barcode& a, const Barcode& b, int k);
// Maximum over all degrees present in either barcode.
double bottleneck(const Barcode& a, const Barcode& b);

// Decision form of the eps-interleaving. Throws ValidationError if eps < 0.
bool interleaved(const Barcode& a, const Barcode& b, int k, double eps);

enum class StabilityMode { ordinary, extended };

struct StabilityReport {
  double lhs = 0.0;  // bottleneck distance
  double rhs = 0.0;  // sup-norm |f - g|
  bool ok = true;
};

inline constexpr double kStabilityTolerance = 1e-9;

// Compares barcodes of f and g on the same skeleton against |f - g|_inf. In
// extended mode both use the bound M = max(|f|, |g|) + 1 unless one is given.
// With k absent the distance is the maximum over degrees.
StabilityReport stability_harness(const FilteredComplex& skeleton, const VertexFunction& f,
                                  const VertexFunction& g, std::optional<int> k,
                                  StabilityMode mode = StabilityMode::ordinary,
                                  std::optional<double> bound = std::nullopt,
                                  double spacing = 1.0);

}  // namespace z2ph
