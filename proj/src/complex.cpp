#include "z2ph/complex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "z2ph/errors.hpp"
#include "z2ph/z2_linear.hpp"

namespace z2ph {

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::none: return "ok";
    case Violation::id_order: return "id order";
    case Violation::negative_dimension: return "negative dimension";
    case Violation::unknown_face: return "unknown face";
    case Violation::dimension_mismatch: return "dimension mismatch";
    case Violation::duplicate_face: return "duplicate face";
    case Violation::non_finite_value: return "non-finite value";
    case Violation::monotonicity: return "monotonicity";
    case Violation::filtration_order: return "filtration order";
    case Violation::boundary_not_cycle: return "boundary of boundary is nonzero";
  }
  return "unknown";
}

CellId FilteredComplex::add_cell(int dim, double value, std::vector<CellId> boundary,
                                 std::string label, std::vector<CellId> vertices) {
  const auto id = static_cast<CellId>(cells_.size());
  cells_.push_back(Cell{id, dim, value, std::move(boundary), std::move(vertices),
                        std::move(label)});
  return id;
}

int FilteredComplex::top_dim() const {
  int top = -1;
  for (const auto& c : cells_) top = std::max(top, c.dim);
  return top;
}

std::vector<std::size_t> FilteredComplex::cell_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(top_dim() + 1), 0);
  for (const auto& c : cells_) ++counts[static_cast<std::size_t>(c.dim)];
  return counts;
}

long FilteredComplex::euler_characteristic() const {
  long chi = 0;
  for (const auto& c : cells_) chi += (c.dim % 2 == 0) ? 1 : -1;
  return chi;
}

std::vector<CellId> FilteredComplex::cells_of_dim(int k) const {
  std::vector<CellId> out;
  for (const auto& c : cells_) {
    if (c.dim == k) out.push_back(c.id);
  }
  return out;
}

std::optional<CellId> FilteredComplex::find_label(std::string_view label) const {
  for (const auto& c : cells_) {
    if (c.label == label) return c.id;
  }
  return std::nullopt;
}

std::vector<std::vector<CellId>> FilteredComplex::vertex_supports() const {
  std::vector<std::vector<CellId>> supports(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const Cell& c = cells_[i];
    auto& s = supports[i];
    if (c.dim == 0) {
      s.push_back(c.id);
      continue;
    }
    s = c.vertices;
    for (CellId f : c.boundary) {
      if (f < i) s.insert(s.end(), supports[f].begin(), supports[f].end());
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return supports;
}

namespace {

FilteredComplex reindex(const std::vector<Cell>& cells, std::span<const std::size_t> order) {
  std::vector<CellId> new_id(cells.size(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    new_id[order[pos]] = static_cast<CellId>(pos);
  }
  std::vector<Cell> out;
  out.reserve(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    Cell c = cells[order[pos]];
    c.id = static_cast<CellId>(pos);
    for (auto& f : c.boundary) f = new_id[f];
    for (auto& v : c.vertices) v = new_id[v];
    std::sort(c.boundary.begin(), c.boundary.end());
    std::sort(c.vertices.begin(), c.vertices.end());
    out.push_back(std::move(c));
  }
  return FilteredComplex(std::move(out));
}

}  // namespace

std::vector<std::size_t> FilteredComplex::sort_permutation() const {
  std::vector<std::size_t> order(cells_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
    const Cell& x = cells_[a];
    const Cell& y = cells_[b];
    if (x.value != y.value) return x.value < y.value;
    return x.dim < y.dim;
  });
  return order;
}

FilteredComplex FilteredComplex::reordered(std::span<const std::size_t> order) const {
  return reindex(cells_, order);
}

FilteredComplex FilteredComplex::sublevel(double a) const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].value <= a) keep.push_back(i);
  }
  return reindex(cells_, keep);
}

FilteredComplex FilteredComplex::with_values(std::span<const double> values) const {
  if (values.size() != cells_.size()) {
    throw ValidationError("with_values: expected " + std::to_string(cells_.size()) +
                          " values, got " + std::to_string(values.size()));
  }
  auto cells = cells_;
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i].value = values[i];
  return FilteredComplex(std::move(cells)).sorted();
}

ValidationReport validate(const FilteredComplex& c, ValidationScope scope) {
  const auto& cells = c.cells();
  auto fail = [](Violation v, CellId id, std::string msg) {
    return ValidationReport{v, id, "cell " + std::to_string(id) + ": " + std::move(msg)};
  };
  const bool filtration = scope == ValidationScope::filtration;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& cell = cells[i];
    const auto id = static_cast<CellId>(i);
    if (cell.id != id) {
      return fail(Violation::id_order, id,
                  "declared id " + std::to_string(cell.id) + " at position " + std::to_string(i));
    }
    if (cell.dim < 0) return fail(Violation::negative_dimension, id, "negative dimension");
    if (filtration && !std::isfinite(cell.value)) {
      return fail(Violation::non_finite_value, id, "value is not finite");
    }
    if (cell.dim == 0 && !cell.boundary.empty()) {
      return fail(Violation::dimension_mismatch, id, "0-cell with nonempty boundary");
    }
    std::set<CellId> seen;
    for (CellId f : cell.boundary) {
      if (f >= id) {
        return fail(Violation::unknown_face, id,
                    "face " + std::to_string(f) + " is not a previously declared cell");
      }
      if (cells[f].dim != cell.dim - 1) {
        return fail(Violation::dimension_mismatch, id,
                    "face " + std::to_string(f) + " has dimension " +
                        std::to_string(cells[f].dim) + ", expected " +
                        std::to_string(cell.dim - 1));
      }
      if (!seen.insert(f).second) {
        return fail(Violation::duplicate_face, id, "face " + std::to_string(f) + " repeated");
      }
      if (filtration && cells[f].value > cell.value) {
        return fail(Violation::monotonicity, id,
                    "value below that of face " + std::to_string(f));
      }
    }
    if (filtration && i > 0) {
      const Cell& prev = cells[i - 1];
      if (prev.value > cell.value || (prev.value == cell.value && prev.dim > cell.dim)) {
        return fail(Violation::filtration_order, id,
                    "not sorted by (value, dimension) after cell " + std::to_string(i - 1));
      }
    }
    if (cell.dim >= 2) {
      std::vector<RowIndex> rows;
      for (CellId f : cell.boundary) {
        rows.insert(rows.end(), cells[f].boundary.begin(), cells[f].boundary.end());
      }
      if (!Z2Column(std::move(rows)).empty()) {
        return fail(Violation::boundary_not_cycle, id, "boundary is not a cycle mod 2");
      }
    }
  }
  return {};
}

void require_valid(const FilteredComplex& c, ValidationScope scope) {
  auto report = validate(c, scope);
  if (!report.ok()) {
    throw ValidationError(std::string(to_string(report.kind)) + " violation at " +
                          report.message);
  }
}

VertexFunction::VertexFunction(std::map<CellId, double> values) : values_(std::move(values)) {
  for (const auto& [v, x] : values_) {
    if (!std::isfinite(x)) {
      throw ValidationError("vertex " + std::to_string(v) + " has a non-finite value");
    }
  }
  bound_ = max_abs() + 1.0;
}

VertexFunction::VertexFunction(std::map<CellId, double> values, double bound)
    : VertexFunction(std::move(values)) {
  if (!(bound > 0.0)) throw ValidationError("vertex function bound must be positive");
  if (!(max_abs() < bound)) {
    throw ValidationError("vertex function is not strictly bounded by " + std::to_string(bound));
  }
  bound_ = bound;
}

double VertexFunction::operator()(CellId v) const {
  auto it = values_.find(v);
  if (it == values_.end()) {
    throw ValidationError("missing value for vertex " + std::to_string(v));
  }
  return it->second;
}

double VertexFunction::max_abs() const {
  double m = 0.0;
  for (const auto& [v, x] : values_) m = std::max(m, std::abs(x));
  return m;
}

double VertexFunction::sup_distance(const VertexFunction& other) const {
  if (values_.size() != other.values_.size()) {
    throw ValidationError("vertex functions are defined on different vertex sets");
  }
  double d = 0.0;
  for (auto a = values_.begin(), b = other.values_.begin(); a != values_.end(); ++a, ++b) {
    if (a->first != b->first) {
      throw ValidationError("vertex functions are defined on different vertex sets");
    }
    d = std::max(d, std::abs(a->second - b->second));
  }
  return d;
}

VertexFunction VertexFunction::shifted(double delta) const {
  auto values = values_;
  for (auto& [v, x] : values) x += delta;
  return VertexFunction(std::move(values));
}

FilteredComplex lower_star(const FilteredComplex& skeleton, const VertexFunction& f) {
  require_valid(skeleton, ValidationScope::structure);
  const auto supports = skeleton.vertex_supports();
  std::vector<double> values(skeleton.size());
  for (std::size_t i = 0; i < skeleton.size(); ++i) {
    const Cell& cell = skeleton[static_cast<CellId>(i)];
    if (supports[i].empty()) {
      throw ValidationError("cell " + std::to_string(i) + " has no vertex support");
    }
    double v = f(supports[i].front());
    for (CellId u : supports[i]) v = std::max(v, f(u));
    for (CellId face : cell.boundary) v = std::max(v, values[face]);
    values[i] = v;
  }
  return skeleton.with_values(values);
}

namespace {

std::string simplex_label(const std::vector<std::uint32_t>& vs) {
  if (vs.size() == 1) return std::to_string(vs.front());
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
  os << '}';
  return os.str();
}

}  // namespace

FilteredComplex simplicial_complex(std::span<const Simplex> declared) {
  struct Entry {
    double value = 0.0;
    bool declared = false;
    double min_coface = std::numeric_limits<double>::infinity();
  };
  std::map<std::vector<std::uint32_t>, Entry> faces;
  std::size_t top = 0;
  for (const auto& s : declared) {
    auto vs = s.vertices;
    if (vs.empty()) throw ValidationError("empty simplex");
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
      throw ValidationError("simplex " + simplex_label(vs) + " repeats a vertex");
    }
    if (vs.size() > 24) throw ValidationError("simplex dimension too large");
    top = std::max(top, vs.size());
    auto& e = faces[vs];
    if (e.declared) throw ValidationError("simplex " + simplex_label(vs) + " declared twice");
    e.declared = true;
    e.value = s.value;
  }
  // Propagate coface minima over every nonempty proper face.
  for (const auto& s : declared) {
    auto vs = s.vertices;
    std::sort(vs.begin(), vs.end());
    const std::size_t k = vs.size();
    for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
      std::vector<std::uint32_t> face;
      for (std::size_t b = 0; b < k; ++b) {
        if (mask & (1u << b)) face.push_back(vs[b]);
      }
      auto& e = faces[face];
      e.min_coface = std::min(e.min_coface, s.value);
    }
  }
  for (auto& [vs, e] : faces) {
    if (!e.declared) {
      e.value = e.min_coface;
    } else if (e.value > e.min_coface) {
      throw ValidationError("simplex " + simplex_label(vs) +
                            " has a value above one of its declared cofaces");
    }
  }

  FilteredComplex out;
  std::map<std::vector<std::uint32_t>, CellId> ids;
  for (std::size_t size = 1; size <= top; ++size) {
    for (const auto& [vs, e] : faces) {
      if (vs.size() != size) continue;
      std::vector<CellId> boundary;
      if (size > 1) {
        for (std::size_t skip = 0; skip < size; ++skip) {
          std::vector<std::uint32_t> face = vs;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(skip));
          boundary.push_back(ids.at(face));
        }
        std::sort(boundary.begin(), boundary.end());
      }
      ids[vs] = out.add_cell(static_cast<int>(size) - 1, e.value, std::move(boundary),
                             simplex_label(vs));
    }
  }
  return out.sorted();
}

FilteredComplex barycentric_subdivision(const FilteredComplex& simplicial) {
  require_valid(simplicial, ValidationScope::structure);
  // Complete flags v = s_0 < s_1 < ... < s_k = cell, one per descending path.
  std::vector<std::vector<std::vector<std::uint32_t>>> flags(simplicial.size());
  for (std::size_t i = 0; i < simplicial.size(); ++i) {
    const Cell& c = simplicial[static_cast<CellId>(i)];
    if (c.dim == 0) {
      flags[i].push_back({static_cast<std::uint32_t>(i)});
      continue;
    }
    for (CellId f : c.boundary) {
      for (const auto& flag : flags[f]) {
        auto extended = flag;
        extended.push_back(static_cast<std::uint32_t>(i));
        flags[i].push_back(std::move(extended));
      }
    }
  }
  std::vector<Simplex> declared;
  for (const auto& per_cell : flags) {
    for (const auto& flag : per_cell) declared.push_back(Simplex{flag, 0.0});
  }
  std::vector<Simplex> unique;
  std::set<std::vector<std::uint32_t>> seen;
  for (auto& s : declared) {
    auto key = s.vertices;
    std::sort(key.begin(), key.end());
    if (seen.insert(key).second) unique.push_back(std::move(s));
  }
  return simplicial_complex(unique);
}

}  // namespace z2ph
