#include "z2ph/extended.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "z2ph/errors.hpp"

namespace z2ph {

void validate_spec(const BifiltrationSpec& spec) {
  require_valid(spec.skeleton, ValidationScope::structure);
  if (!(spec.spacing > 0.0) || !std::isfinite(spec.spacing)) {
    throw ValidationError("spacing must be positive");
  }
  if (!(spec.bound > 0.0) || !std::isfinite(spec.bound)) {
    throw ValidationError("bound M must be positive");
  }
  for (CellId v : spec.skeleton.cells_of_dim(0)) {
    if (!spec.f.contains(v)) throw ValidationError("missing value for vertex " + std::to_string(v));
    if (std::abs(spec.f(v)) > spec.bound) {
      throw ValidationError("vertex " + std::to_string(v) + " exceeds the bound M");
    }
  }
}

ConeFiltration build_cone_filtration(const BifiltrationSpec& spec) {
  validate_spec(spec);
  const FilteredComplex& x = spec.skeleton;
  const auto supports = x.vertex_supports();
  const double top = 2.0 * spec.bound + spec.spacing;

  FilteredComplex raw;
  std::vector<ConeCellKind> kind;
  std::vector<CellId> source;
  // Ids in `raw`: apex = 0, skeleton cell i = 1 + i, cone(i) = 1 + n + i.
  const auto n = static_cast<CellId>(x.size());
  raw.add_cell(0, -spec.bound, {}, "apex");
  kind.push_back(ConeCellKind::apex);
  source.push_back(0);

  std::vector<double> lo(x.size()), hi(x.size());
  for (CellId i = 0; i < n; ++i) {
    if (supports[i].empty()) {
      throw ValidationError("cell " + std::to_string(i) + " has no vertex support");
    }
    lo[i] = hi[i] = spec.f(supports[i].front());
    for (CellId v : supports[i]) {
      lo[i] = std::min(lo[i], spec.f(v));
      hi[i] = std::max(hi[i], spec.f(v));
    }
  }
  for (CellId i = 0; i < n; ++i) {
    const Cell& c = x[i];
    std::vector<CellId> boundary;
    for (CellId f : c.boundary) boundary.push_back(1 + f);
    std::vector<CellId> vertices;
    for (CellId v : c.vertices) vertices.push_back(1 + v);
    raw.add_cell(c.dim, hi[i], std::move(boundary), c.label, std::move(vertices));
    kind.push_back(ConeCellKind::ascending);
    source.push_back(i);
  }
  for (CellId i = 0; i < n; ++i) {
    const Cell& c = x[i];
    // d(cone s) = s + cone(d s), and cone of a vertex ends at the apex.
    std::vector<CellId> boundary{1 + i};
    if (c.dim == 0) boundary.push_back(0);
    for (CellId f : c.boundary) boundary.push_back(1 + n + f);
    std::vector<CellId> vertices;
    if (!c.vertices.empty()) {
      vertices.push_back(0);
      for (CellId v : c.vertices) vertices.push_back(1 + v);
    }
    raw.add_cell(c.dim + 1, top - lo[i], std::move(boundary),
                 c.label.empty() ? std::string{} : "cone(" + c.label + ")", std::move(vertices));
    kind.push_back(ConeCellKind::cone);
    source.push_back(i);
  }

  // Stable sort keeps the apex ahead of any vertex sitting exactly at -M.
  const auto order = raw.sort_permutation();
  ConeFiltration out;
  out.complex = raw.reordered(order);
  out.kind.reserve(order.size());
  out.source.reserve(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    out.kind.push_back(kind[order[pos]]);
    out.source.push_back(source[order[pos]]);
    if (order[pos] == 0) out.apex = static_cast<CellId>(pos);
  }
  require_valid(out.complex);
  return out;
}

ExtendedBarcode::ExtendedBarcode(Barcode bars, double lower, double upper)
    : bars_(std::move(bars)), lower_(lower), upper_(upper) {
  for (const auto& b : bars_.bars()) {
    if (!b.interval.finite()) throw ValidationError("extended bar with infinite death");
    if (b.interval.birth < lower_ || b.interval.death > upper_) {
      throw ValidationError("extended bar outside the parameter axis");
    }
  }
}

ExtendedBarcode extended_barcode(const BifiltrationSpec& spec) {
  const auto cone = build_cone_filtration(spec);
  auto pairing = reduce(cone.complex);
  // The cone over all of X is contractible, so the apex is the only
  // essential class.
  if (pairing.essential.size() != 1 || pairing.essential.front() != cone.apex) {
    throw std::logic_error("cone filtration has unexpected essential classes");
  }
  pairing.essential.clear();
  return ExtendedBarcode(barcode(cone.complex, pairing), -spec.bound,
                         3.0 * spec.bound + spec.spacing);
}

std::size_t extended_rank(const ExtendedBarcode& b, int k, double a, double p) {
  return persistent_betti(b.barcode(), k, a, p);
}

std::size_t single_interval_rank(double s, double t, double a, double p) {
  if (!(s < t) || !std::isfinite(t)) throw ValidationError("interval must satisfy s < t < inf");
  if (!(p >= 0.0)) throw ValidationError("persistence p must be nonnegative");
  return (s <= a && a < t && a + p < t) ? 1 : 0;
}

}  // namespace z2ph
