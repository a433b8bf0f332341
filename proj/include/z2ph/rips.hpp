#pragma once

// Vietoris-Rips filtrations of Euclidean point clouds and Betti curves.
//
// The scale axis is the simplex diameter: two balls of radius r meet when
// their centres are at most 2r apart, so a radius step s is a diameter step 2s.

#include <optional>
#include <span>
#include <vector>

#include "z2ph/complex.hpp"
#include "z2ph/persistence.hpp"

namespace z2ph {

class PointCloud {
 public:
  PointCloud() = default;
  // Throws ValidationError unless nonempty, of uniform dimension and finite.
  explicit PointCloud(std::vector<std::vector<double>> points);

  std::size_t size() const noexcept { return points_.size(); }
  std::size_t dim() const noexcept { return points_.empty() ? 0 : points_.front().size(); }
  const std::vector<double>& point(std::size_t i) const { return points_[i]; }
  const std::vector<std::vector<double>>& points() const noexcept { return points_; }
  double distance(std::size_t i, std::size_t j) const;

  PointCloud scaled(double factor) const;
  PointCloud with_point(std::vector<double> p) const;

 private:
  std::vector<std::vector<double>> points_;
};

struct RipsParams {
  int max_dim = 1;
  // Stepped mode: N radius increments of size s. Values snap up to the next
  // multiple of 2s and the default threshold becomes 2Ns.
  std::optional<int> steps;
  std::optional<double> step_size;
  // Largest diameter kept; unlimited when absent in exact mode.
  std::optional<double> threshold;
};

// Throws ValidationError on max_dim < 0, only one of steps/step_size, steps < 1,
// step_size <= 0 or a negative threshold.
void validate(const RipsParams& params);
double effective_threshold(const RipsParams& params);

// Vertices at 0; every simplex of dimension <= max_dim enters at its (possibly
// snapped) diameter. Cliques are expanded in vertex-id order.
FilteredComplex rips_filtration(const PointCloud& pc, const RipsParams& params);

// Count of k-bars containing each grid value. Throws ValidationError if the
// grid is not sorted.
std::vector<std::size_t> betti_curve(const Barcode& b, int k, std::span<const double> grid);

// Grid start, start + step, ... up to stop (inclusive within rounding).
std::vector<double> make_grid(double start, double stop, double step);

// n evenly spaced points on a circle.
PointCloud circle_points(std::size_t n, double radius = 1.0);

// The m x n product grid on the Clifford torus S^1 x S^1 in R^4.
PointCloud clifford_torus_grid(std::size_t m, std::size_t n);

// Points whose pairwise distances take two values: sqrt(2D) for edges of the
// 1-skeleton and sqrt(2D + 2) otherwise (D = maximum vertex degree). For scales
// in [edge_scale, gap_scale) the Rips complex is the clique complex of the
// 1-skeleton, which for a flag complex is the complex itself.
struct FlagRealization {
  PointCloud cloud;
  double edge_scale = 0.0;
  double gap_scale = 0.0;
};
FlagRealization flag_realization(const FilteredComplex& simplicial);

}  // namespace z2ph
