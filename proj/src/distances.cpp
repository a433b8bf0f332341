#include "z2ph/distances.hpp"

#include <algorithm>
#include <cmath>

#include "z2ph/errors.hpp"

namespace z2ph {

double matching_cost(const Interval& i, const Interval& j) {
  const double births = std::abs(i.birth - j.birth);
  if (!i.finite() || !j.finite()) {
    return (!i.finite() && !j.finite()) ? births : kInfinity;
  }
  return std::max(births, std::abs(i.death - j.death));
}

double deletion_cost(const Interval& i) {
  return i.finite() ? (i.death - i.birth) / 2.0 : kInfinity;
}

double interval_distance(const Interval& i, const Interval& j) {
  return std::min(matching_cost(i, j), std::max(deletion_cost(i), deletion_cost(j)));
}

namespace {

// Bipartite graph: left = bars of A then one diagonal slot per bar of B;
// right = bars of B then one diagonal slot per bar of A. A diagonal slot may
// take its own bar (deletion) or any other diagonal slot.
class FeasibilityGraph {
 public:
  FeasibilityGraph(std::span<const Interval> a, std::span<const Interval> b) : a_(a), b_(b) {}

  // Kuhn's augmenting paths; returns the right partner of each left vertex
  // when a perfect matching exists at threshold eps.
  std::optional<std::vector<std::size_t>> perfect_matching(double eps) const {
    const std::size_t n = a_.size() + b_.size();
    std::vector<std::size_t> match_right(n, kNone);
    std::vector<char> visited(n);
    for (std::size_t u = 0; u < n; ++u) {
      std::fill(visited.begin(), visited.end(), 0);
      if (!augment(u, eps, match_right, visited)) return std::nullopt;
    }
    std::vector<std::size_t> match_left(n, kNone);
    for (std::size_t v = 0; v < n; ++v) match_left[match_right[v]] = v;
    return match_left;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool allowed(std::size_t u, std::size_t v, double eps) const {
    const std::size_t na = a_.size(), nb = b_.size();
    const bool u_bar = u < na, v_bar = v < nb;
    if (u_bar && v_bar) return matching_cost(a_[u], b_[v]) <= eps;
    if (u_bar) return v - nb == u && deletion_cost(a_[u]) <= eps;
    if (v_bar) return u - na == v && deletion_cost(b_[v]) <= eps;
    return true;
  }

  bool augment(std::size_t u, double eps, std::vector<std::size_t>& match_right,
               std::vector<char>& visited) const {
    const std::size_t n = match_right.size();
    for (std::size_t v = 0; v < n; ++v) {
      if (visited[v] || !allowed(u, v, eps)) continue;
      visited[v] = 1;
      if (match_right[v] == kNone || augment(match_right[v], eps, match_right, visited)) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  }

  std::span<const Interval> a_;
  std::span<const Interval> b_;
};

}  // namespace

BottleneckResult bottleneck_matching(std::span<const Interval> left,
                                     std::span<const Interval> right) {
  BottleneckResult result;
  const auto infinite = [](const Interval& i) { return !i.finite(); };
  if (std::count_if(left.begin(), left.end(), infinite) !=
      std::count_if(right.begin(), right.end(), infinite)) {
    result.distance = kInfinity;
    return result;
  }
  std::vector<double> candidates{0.0};
  for (const auto& i : left) {
    if (i.finite()) candidates.push_back(deletion_cost(i));
    for (const auto& j : right) {
      const double c = matching_cost(i, j);
      if (std::isfinite(c)) candidates.push_back(c);
    }
  }
  for (const auto& j : right) {
    if (j.finite()) candidates.push_back(deletion_cost(j));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const FeasibilityGraph graph(left, right);
  // The largest candidate is always feasible: every finite bar can be deleted
  // and infinite bars pair up by count.
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (graph.perfect_matching(candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  result.distance = candidates[lo];
  const auto match = graph.perfect_matching(result.distance);
  if (!match) throw std::logic_error("bottleneck: optimal threshold not feasible");
  const std::size_t na = left.size(), nb = right.size();
  for (std::size_t u = 0; u < na; ++u) {
    const std::size_t v = (*match)[u];
    if (v < nb) {
      result.matching.pairs.emplace_back(u, v);
    } else {
      result.matching.unmatched_left.push_back(u);
    }
  }
  for (std::size_t u = na; u < na + nb; ++u) {
    if ((*match)[u] < nb) result.matching.unmatched_right.push_back((*match)[u]);
  }
  std::sort(result.matching.unmatched_right.begin(), result.matching.unmatched_right.end());
  return result;
}

double bottleneck(const Barcode& a, const Barcode& b, int k) {
  const auto left = a.in_dim(k);
  const auto right = b.in_dim(k);
  return bottleneck_matching(left, right).distance;
}

double bottleneck(const Barcode& a, const Barcode& b) {
  double d = 0.0;
  for (int k = 0; k <= std::max(a.max_dim(), b.max_dim()); ++k) {
    d = std::max(d, bottleneck(a, b, k));
  }
  return d;
}

bool interleaved(const Barcode& a, const Barcode& b, int k, double eps) {
  if (!(eps >= 0.0)) throw ValidationError("eps must be nonnegative");
  return bottleneck(a, b, k) <= eps;
}

StabilityReport stability_harness(const FilteredComplex& skeleton, const VertexFunction& f,
                                  const VertexFunction& g, std::optional<int> k,
                                  StabilityMode mode, std::optional<double> bound,
                                  double spacing) {
  StabilityReport r;
  r.rhs = f.sup_distance(g);
  Barcode bf, bg;
  if (mode == StabilityMode::ordinary) {
    bf = barcode(lower_star(skeleton, f));
    bg = barcode(lower_star(skeleton, g));
  } else {
    const double m = bound.value_or(std::max(f.max_abs(), g.max_abs()) + 1.0);
    bf = extended_barcode({skeleton, f, m, spacing}).barcode();
    bg = extended_barcode({skeleton, g, m, spacing}).barcode();
  }
  r.lhs = k ? bottleneck(bf, bg, *k) : bottleneck(bf, bg);
  r.ok = r.lhs <= r.rhs + kStabilityTolerance;
  return r;
}

}  // namespace z2ph
