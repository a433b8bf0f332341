#include "z2ph/rips.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "z2ph/errors.hpp"

namespace z2ph {

PointCloud::PointCloud(std::vector<std::vector<double>> points) : points_(std::move(points)) {
  if (points_.empty()) throw ValidationError("point cloud is empty");
  const std::size_t d = points_.front().size();
  if (d == 0) throw ValidationError("points must have at least one coordinate");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != d) {
      throw ValidationError("point " + std::to_string(i) + " has dimension " +
                            std::to_string(points_[i].size()) + ", expected " +
                            std::to_string(d));
    }
    for (double x : points_[i]) {
      if (!std::isfinite(x)) {
        throw ValidationError("point " + std::to_string(i) + " has a non-finite coordinate");
      }
    }
  }
}

double PointCloud::distance(std::size_t i, std::size_t j) const {
  double s = 0.0;
  const auto& p = points_[i];
  const auto& q = points_[j];
  for (std::size_t c = 0; c < p.size(); ++c) s += (p[c] - q[c]) * (p[c] - q[c]);
  return std::sqrt(s);
}

PointCloud PointCloud::scaled(double factor) const {
  auto pts = points_;
  for (auto& p : pts) {
    for (auto& x : p) x *= factor;
  }
  return PointCloud(std::move(pts));
}

PointCloud PointCloud::with_point(std::vector<double> p) const {
  auto pts = points_;
  pts.push_back(std::move(p));
  return PointCloud(std::move(pts));
}

void validate(const RipsParams& params) {
  if (params.max_dim < 0) throw ValidationError("max_dim must be nonnegative");
  if (params.steps.has_value() != params.step_size.has_value()) {
    throw ValidationError("steps and step size must be given together");
  }
  if (params.steps && *params.steps < 1) throw ValidationError("steps must be at least 1");
  if (params.step_size && !(*params.step_size > 0.0 && std::isfinite(*params.step_size))) {
    throw ValidationError("step size must be positive");
  }
  if (params.threshold && !(*params.threshold >= 0.0)) {
    throw ValidationError("threshold must be nonnegative");
  }
}

double effective_threshold(const RipsParams& params) {
  if (params.threshold) return *params.threshold;
  if (params.steps) return 2.0 * *params.steps * *params.step_size;
  return kInfinity;
}

namespace {

class CliqueBuilder {
 public:
  CliqueBuilder(const PointCloud& pc, const RipsParams& params)
      : n_(pc.size()), max_dim_(params.max_dim), threshold_(effective_threshold(params)) {
    if (params.step_size) diameter_step_ = 2.0 * *params.step_size;
    dist_.assign(n_ * n_, 0.0);
    higher_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        const double d = snap(pc.distance(i, j));
        dist_[i * n_ + j] = dist_[j * n_ + i] = d;
        if (d <= threshold_) higher_[i].push_back(static_cast<std::uint32_t>(j));
      }
    }
  }

  FilteredComplex build() {
    // Level by level, so every face exists before its cofaces.
    std::vector<Partial> level;
    for (std::size_t v = 0; v < n_; ++v) {
      const auto u = static_cast<std::uint32_t>(v);
      ids_[{u}] = out_.add_cell(0, 0.0, {}, std::to_string(v));
      level.push_back({{u}, 0.0, higher_[v]});
    }
    for (int d = 1; d <= max_dim_ && !level.empty(); ++d) level = expand(level);
    return out_.sorted();
  }

 private:
  struct Partial {
    std::vector<std::uint32_t> simplex;
    double value;
    // Vertices above the last one that are adjacent to every vertex.
    std::vector<std::uint32_t> candidates;
  };

  double snap(double d) const {
    if (!diameter_step_) return d;
    // Tolerate rounding just above an exact step boundary.
    const double steps = std::ceil(d / *diameter_step_ - 1e-9);
    return std::max(0.0, steps) * *diameter_step_;
  }

  std::vector<Partial> expand(const std::vector<Partial>& level) {
    std::vector<Partial> next_level;
    for (const auto& [simplex, value, candidates] : level) {
      for (std::uint32_t c : candidates) {
        double v = value;
        for (std::uint32_t u : simplex) v = std::max(v, dist_[u * n_ + c]);
        auto next = simplex;
        next.push_back(c);
        std::vector<CellId> boundary;
        boundary.reserve(next.size());
        for (std::size_t skip = 0; skip < next.size(); ++skip) {
          std::vector<std::uint32_t> face = next;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(skip));
          boundary.push_back(ids_.at(face));
        }
        std::sort(boundary.begin(), boundary.end());
        ids_[next] = out_.add_cell(static_cast<int>(next.size()) - 1, v, std::move(boundary));
        std::vector<std::uint32_t> common;
        std::set_intersection(candidates.begin(), candidates.end(), higher_[c].begin(),
                              higher_[c].end(), std::back_inserter(common));
        next_level.push_back({std::move(next), v, std::move(common)});
      }
    }
    return next_level;
  }

  std::size_t n_;
  int max_dim_;
  double threshold_;
  std::optional<double> diameter_step_;
  std::vector<double> dist_;
  std::vector<std::vector<std::uint32_t>> higher_;
  std::map<std::vector<std::uint32_t>, CellId> ids_;
  FilteredComplex out_;
};

}  // namespace

FilteredComplex rips_filtration(const PointCloud& pc, const RipsParams& params) {
  validate(params);
  if (pc.size() == 0) throw ValidationError("point cloud is empty");
  return CliqueBuilder(pc, params).build();
}

std::vector<std::size_t> betti_curve(const Barcode& b, int k, std::span<const double> grid) {
  if (!std::is_sorted(grid.begin(), grid.end())) throw ValidationError("grid is not sorted");
  const auto bars = b.in_dim(k);
  std::vector<std::size_t> out;
  out.reserve(grid.size());
  for (double t : grid) {
    out.push_back(static_cast<std::size_t>(
        std::count_if(bars.begin(), bars.end(), [t](const Interval& i) { return i.contains(t); })));
  }
  return out;
}

std::vector<double> make_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop)) {
    throw ValidationError("grid needs finite bounds and a positive step");
  }
  std::vector<double> grid;
  for (std::size_t i = 0;; ++i) {
    const double t = start + static_cast<double>(i) * step;
    if (t > stop + 1e-9 * step) break;
    grid.push_back(t);
  }
  return grid;
}

PointCloud circle_points(std::size_t n, double radius) {
  std::vector<std::vector<double>> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    pts.push_back({radius * std::cos(theta), radius * std::sin(theta)});
  }
  return PointCloud(std::move(pts));
}

PointCloud clifford_torus_grid(std::size_t m, std::size_t n) {
  std::vector<std::vector<double>> pts;
  for (std::size_t i = 0; i < m; ++i) {
    const double u = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m);
    for (std::size_t j = 0; j < n; ++j) {
      const double v = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
      pts.push_back({std::cos(u), std::sin(u), std::cos(v), std::sin(v)});
    }
  }
  return PointCloud(std::move(pts));
}

FlagRealization flag_realization(const FilteredComplex& simplicial) {
  require_valid(simplicial, ValidationScope::structure);
  const auto vertices = simplicial.cells_of_dim(0);
  const auto edges = simplicial.cells_of_dim(1);
  std::map<CellId, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;
  std::vector<std::size_t> degree(vertices.size(), 0);
  for (CellId e : edges) {
    for (CellId v : simplicial[e].boundary) ++degree[index.at(v)];
  }
  const std::size_t max_degree = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
  // Coordinates: one per edge (1 on both endpoints), then one private
  // coordinate per vertex padding its squared norm up to max_degree + 1.
  const std::size_t dim = edges.size() + vertices.size();
  std::vector<std::vector<double>> pts(vertices.size(), std::vector<double>(dim, 0.0));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (CellId v : simplicial[edges[e]].boundary) pts[index.at(v)][e] = 1.0;
  }
  const double norm2 = static_cast<double>(max_degree) + 1.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    pts[i][edges.size() + i] = std::sqrt(norm2 - static_cast<double>(degree[i]));
  }
  FlagRealization r;
  r.cloud = PointCloud(std::move(pts));
  r.edge_scale = std::sqrt(2.0 * norm2 - 2.0);
  r.gap_scale = std::sqrt(2.0 * norm2);
  return r;
}

}  // namespace z2ph
