#pragma once

// Extended persistence of a vertex function f with |f| <= M.
//
// The diagram of pairs a -> (X_a, A_a), with X_a the sublevel set f <= a and
// A_a the superlevel set f >= 2M + spacing - a, is realized as one filtration
// of the cone complex X ∪ C(A_a): relative homology of the pair equals the
// reduced homology of the coned space. The apex enters first (at -M) so that
// reduced homology also covers the phase where A_a is empty; its essential
// 0-bar is the artifact of passing to reduced homology and is dropped.
//
// Cell entry values:
//   sigma        at max_{v in sigma} f(v)
//   cone(sigma)  at 2M + spacing - min_{v in sigma} f(v)
// so everything is present by M, coning starts at M + spacing and the whole of
// X is coned off by 3M + spacing.

#include <vector>

#include "z2ph/complex.hpp"
#include "z2ph/persistence.hpp"

namespace z2ph {

struct BifiltrationSpec {
  FilteredComplex skeleton;
  VertexFunction f;
  double bound = 1.0;    // M, with |f| <= M on every vertex
  double spacing = 1.0;  // lambda > 0
};

// Throws ValidationError on a bad skeleton, missing vertex values, |f| > M or
// spacing <= 0.
void validate_spec(const BifiltrationSpec& spec);

enum class ConeCellKind { apex, ascending, cone };

struct ConeFiltration {
  FilteredComplex complex;
  // Per cell of `complex`: what it is and which skeleton cell it comes from
  // (unused for the apex).
  std::vector<ConeCellKind> kind;
  std::vector<CellId> source;
  CellId apex = 0;
};

ConeFiltration build_cone_filtration(const BifiltrationSpec& spec);

// Bars of the relative diagram. All deaths are finite and every bar lies in
// [-M, 3M + spacing).
class ExtendedBarcode {
 public:
  ExtendedBarcode() = default;
  // Throws ValidationError if a bar is infinite or leaves [lower, upper).
  ExtendedBarcode(Barcode bars, double lower, double upper);

  const Barcode& barcode() const noexcept { return bars_; }
  const std::vector<Bar>& bars() const noexcept { return bars_.bars(); }
  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }

 private:
  Barcode bars_;
  double lower_ = 0.0;
  double upper_ = 0.0;
};

ExtendedBarcode extended_barcode(const BifiltrationSpec& spec);

// Rank of the map from level a to level a + p: k-bars with
// birth <= a and a + p < death. Throws ValidationError if p < 0.
std::size_t extended_rank(const ExtendedBarcode& b, int k, double a, double p);

// The same rule for the single bar [s, t). Requires s < t, t finite, p >= 0.
std::size_t single_interval_rank(double s, double t, double a, double p);

}  // namespace z2ph
