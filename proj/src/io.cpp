#include "z2ph/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "z2ph/errors.hpp"

namespace z2ph {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::string strip_comment(const std::string& raw) {
  const auto hash = raw.find('#');
  return hash == std::string::npos ? raw : raw.substr(0, hash);
}

// Whitespace-separated tokens of every non-blank, non-comment line.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ss(strip_comment(raw));
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

template <class Int>
Int parse_int(std::string_view tok, std::size_t line, std::string_view what) {
  Int v{};
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || end != tok.data() + tok.size()) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(tok) + "'", line);
  }
  return v;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view tok, std::size_t line) {
  if (tok == "inf" || tok == "+inf") return kInfinity;
  if (tok == "-inf") return -kInfinity;
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || end != tok.data() + tok.size() || std::isnan(v)) {
    throw ParseError("bad number '" + std::string(tok) + "'", line);
  }
  return v;
}

FilteredComplex read_fcx(std::istream& in) {
  FilteredComplex c;
  for (const auto& line : tokenize(in)) {
    const auto& t = line.tokens;
    if (t[0] != "cell") throw ParseError("expected 'cell', got '" + t[0] + "'", line.number);
    if (t.size() < 4) throw ParseError("cell needs <id> <dim> <value>", line.number);
    const auto id = parse_int<CellId>(t[1], line.number, "cell id");
    if (id != c.size()) {
      throw ParseError("cell id " + t[1] + " out of order, expected " + std::to_string(c.size()),
                       line.number);
    }
    const int dim = parse_int<int>(t[2], line.number, "dimension");
    const double value = parse_double(t[3], line.number);
    std::vector<CellId> faces;
    for (std::size_t i = 4; i < t.size(); ++i) {
      faces.push_back(parse_int<CellId>(t[i], line.number, "face id"));
    }
    std::vector<CellId> sorted_faces = faces;
    std::sort(sorted_faces.begin(), sorted_faces.end());
    if (std::adjacent_find(sorted_faces.begin(), sorted_faces.end()) != sorted_faces.end()) {
      throw ParseError("repeated face id in cell " + t[1], line.number);
    }
    c.add_cell(dim, value, std::move(sorted_faces));
  }
  return c;
}

void write_fcx(std::ostream& out, const FilteredComplex& c) {
  out << "# FCX v1\n";
  for (const auto& cell : c.cells()) {
    out << "cell " << cell.id << ' ' << cell.dim << ' ' << format_double(cell.value);
    for (CellId f : cell.boundary) out << ' ' << f;
    out << '\n';
  }
}

FilteredComplex read_spx(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw ParseError("no simplices");
  std::vector<Simplex> simplices;
  if (lines.front().tokens.size() == 1 && lines.front().tokens[0] == "vertexfn") {
    std::map<std::uint32_t, double> values;
    std::size_t i = 1;
    for (; i < lines.size(); ++i) {
      const auto& t = lines[i].tokens;
      if (t.size() == 1 && t[0] == "simplices") break;
      if (t.size() != 2) throw ParseError("expected <vertex> <value>", lines[i].number);
      const auto v = parse_int<std::uint32_t>(t[0], lines[i].number, "vertex");
      if (!values.emplace(v, parse_double(t[1], lines[i].number)).second) {
        throw ParseError("repeated vertex " + t[0], lines[i].number);
      }
    }
    if (i == lines.size()) throw ParseError("missing 'simplices' section");
    for (++i; i < lines.size(); ++i) {
      Simplex s;
      for (const auto& tok : lines[i].tokens) {
        s.vertices.push_back(parse_int<std::uint32_t>(tok, lines[i].number, "vertex"));
      }
      simplices.push_back(std::move(s));
    }
    const FilteredComplex skeleton = simplicial_complex(simplices);
    std::map<CellId, double> f;
    for (CellId v : skeleton.cells_of_dim(0)) {
      const auto label = parse_int<std::uint32_t>(skeleton[v].label, 0, "vertex label");
      const auto it = values.find(label);
      if (it == values.end()) {
        throw ValidationError("vertex " + skeleton[v].label + " has no value");
      }
      f[v] = it->second;
    }
    return lower_star(skeleton, VertexFunction(std::move(f)));
  }
  for (const auto& line : lines) {
    if (line.tokens.size() < 2) throw ParseError("expected <value> <v1> ... <vk>", line.number);
    Simplex s;
    s.value = parse_double(line.tokens[0], line.number);
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      s.vertices.push_back(parse_int<std::uint32_t>(line.tokens[i], line.number, "vertex"));
    }
    simplices.push_back(std::move(s));
  }
  return simplicial_complex(simplices);
}

Barcode read_bcx(std::istream& in) {
  std::vector<Bar> bars;
  for (const auto& line : tokenize(in)) {
    const auto& t = line.tokens;
    if (t.size() != 3) throw ParseError("expected <dim> <birth> <death|inf>", line.number);
    Bar bar;
    bar.dim = parse_int<int>(t[0], line.number, "dimension");
    bar.interval.birth = parse_double(t[1], line.number);
    bar.interval.death = parse_double(t[2], line.number);
    if (bar.dim < 0 || !std::isfinite(bar.interval.birth) ||
        !(bar.interval.birth < bar.interval.death)) {
      throw ParseError("invalid bar", line.number);
    }
    bars.push_back(bar);
  }
  return Barcode(std::move(bars));
}

void write_bcx(std::ostream& out, const Barcode& b, double scale) {
  for (const auto& bar : b.bars()) {
    out << bar.dim << ' ' << format_double(bar.interval.birth * scale) << ' '
        << format_double(bar.interval.death * scale) << '\n';
  }
}

PointCloud read_point_csv(std::istream& in) {
  std::vector<std::vector<double>> pts;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::string body = strip_comment(raw);
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> p;
    std::istringstream ss(body);
    for (std::string field; std::getline(ss, field, ',');) {
      const auto first = field.find_first_not_of(" \t\r");
      const auto last = field.find_last_not_of(" \t\r");
      if (first == std::string::npos) throw ParseError("empty field", number);
      const double x = parse_double(std::string_view(field).substr(first, last - first + 1), number);
      if (!std::isfinite(x)) throw ParseError("non-finite coordinate", number);
      p.push_back(x);
    }
    if (!pts.empty() && p.size() != pts.front().size()) {
      throw ParseError("expected " + std::to_string(pts.front().size()) + " coordinates", number);
    }
    pts.push_back(std::move(p));
  }
  if (pts.empty()) throw ParseError("no points");
  return PointCloud(std::move(pts));
}

void write_point_csv(std::ostream& out, const PointCloud& pc) {
  for (const auto& p : pc.points()) {
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << format_double(p[i]);
    out << '\n';
  }
}

std::map<long long, double> read_vertex_values(std::istream& in) {
  std::map<long long, double> values;
  for (const auto& line : tokenize(in)) {
    if (line.tokens.size() != 2) throw ParseError("expected <vertex-id> <value>", line.number);
    const auto v = parse_int<long long>(line.tokens[0], line.number, "vertex id");
    if (!values.emplace(v, parse_double(line.tokens[1], line.number)).second) {
      throw ParseError("repeated vertex id " + line.tokens[0], line.number);
    }
  }
  return values;
}

void write_vertex_values(std::ostream& out, const VertexFunction& f) {
  for (const auto& [v, x] : f.values()) out << v << ' ' << format_double(x) << '\n';
}

void write_betti_curves(std::ostream& out, std::span<const double> grid,
                        std::span<const std::vector<std::size_t>> curves) {
  out << 't';
  for (std::size_t k = 0; k < curves.size(); ++k) out << ",b" << k;
  out << '\n';
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out << format_double(grid[i]);
    for (const auto& curve : curves) out << ',' << curve.at(i);
    out << '\n';
  }
}

void write_barcode_svg(std::ostream& out, const Barcode& b, std::string_view title) {
  constexpr double kWidth = 640, kMargin = 40, kRow = 12, kGap = 24;
  double lo = 0.0, hi = 1.0;
  bool any = false;
  for (const auto& bar : b.bars()) {
    for (double x : {bar.interval.birth, bar.interval.death}) {
      if (!std::isfinite(x)) continue;
      lo = any ? std::min(lo, x) : x;
      hi = any ? std::max(hi, x) : x;
      any = true;
    }
  }
  if (hi <= lo) hi = lo + 1.0;
  const double span = kWidth - 2 * kMargin;
  auto xpos = [&](double x) {
    if (std::isinf(x)) return kWidth - kMargin / 2;
    return kMargin + (x - lo) / (hi - lo) * span * 0.9;
  };

  std::ostringstream body;
  double y = kMargin;
  for (int k = 0; k <= b.max_dim(); ++k) {
    const auto bars = b.in_dim(k);
    body << "<text x=\"4\" y=\"" << format_double(y + 4) << "\" class=\"dim\">H" << k << "</text>\n";
    for (const auto& i : bars) {
      y += kRow;
      const double x1 = xpos(i.birth), x2 = xpos(i.death);
      body << "<line x1=\"" << format_double(x1) << "\" y1=\"" << format_double(y) << "\" x2=\""
           << format_double(x2) << "\" y2=\"" << format_double(y) << "\" class=\"bar\""
           << (i.finite() ? "" : " marker-end=\"url(#arrow)\"") << "/>\n";
    }
    y += kGap;
  }
  const double height = y + kMargin;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(kWidth)
      << "\" height=\"" << format_double(height) << "\">\n"
      << "<defs><marker id=\"arrow\" markerWidth=\"6\" markerHeight=\"6\" refX=\"3\" refY=\"3\" "
         "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\"/></marker></defs>\n"
      << "<style>.bar{stroke:#1f4e79;stroke-width:3}.dim{font:12px sans-serif}"
         ".axis{stroke:#888}.tick{font:10px sans-serif}</style>\n";
  if (!title.empty()) {
    out << "<text x=\"" << format_double(kMargin) << "\" y=\"16\" class=\"dim\">" << title
        << "</text>\n";
  }
  out << body.str();
  const double axis_y = height - kMargin / 2;
  out << "<line x1=\"" << format_double(kMargin) << "\" y1=\"" << format_double(axis_y)
      << "\" x2=\"" << format_double(kWidth - kMargin / 2) << "\" y2=\"" << format_double(axis_y)
      << "\" class=\"axis\"/>\n";
  for (double x : {lo, hi}) {
    out << "<text x=\"" << format_double(xpos(x)) << "\" y=\"" << format_double(axis_y + 14)
        << "\" class=\"tick\">" << format_double(x) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace z2ph
