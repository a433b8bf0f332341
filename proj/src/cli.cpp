#include "z2ph/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "z2ph/distances.hpp"
#include "z2ph/errors.hpp"
#include "z2ph/extended.hpp"
#include "z2ph/fixtures.hpp"
#include "z2ph/homology.hpp"
#include "z2ph/io.hpp"
#include "z2ph/rips.hpp"

namespace z2ph::cli {

namespace {

// Bad flag combinations found after CLI11 parsing; exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unreadable or unwritable files; exit code 2 like any other input failure.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr const char* kFormats = R"(File formats ('#' starts a comment, blank lines are ignored):
  FCX v1   cell <id> <dim> <value> [<face-id>...]
           ids are 0, 1, 2, ... in line order; faces are earlier cells of
           dimension dim-1 listed once each (mod-2 boundary)
  SPX v1   <value> <v1> ... <vk>        one simplex per line, faces are added
                                        with the least value of their cofaces
           or: 'vertexfn', then <vertex> <value> lines, then 'simplices',
           then <v1> ... <vk> lines (lower-star filtration)
  BCX v1   <dim> <birth> <death|inf>    sorted by (dim, birth, death)
  values   <vertex-id> <value>          FCX cell ids or SPX vertex numbers
  points   x1,x2,...,xd                 one point per line (CSV)
  curves   t,b0,...,bK                  Betti-curve CSV (output)
Rips scales are simplex diameters; --radius-axis prints radii (half).
Exit codes: 0 success, 1 usage error, 2 input parse or validation failure.)";

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

template <class Writer>
void write_file(const std::string& path, Writer&& writer) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  writer(out);
}

// Infers SPX from the extension unless --format is given.
FilteredComplex read_complex(const std::string& path, const std::string& format) {
  std::string fmt = format;
  if (fmt.empty()) fmt = path.ends_with(".spx") ? "spx" : "fcx";
  auto in = open_input(path);
  return fmt == "spx" ? read_spx(in) : read_fcx(in);
}

Barcode read_barcode(const std::string& path) {
  auto in = open_input(path);
  return read_bcx(in);
}

std::string cell_name(const FilteredComplex& c, CellId id) {
  return c[id].label.empty() ? std::to_string(id) : c[id].label;
}

// Vertex values keyed by FCX cell id, or by SPX vertex number (the vertex label).
VertexFunction vertex_function(const FilteredComplex& c, const std::map<long long, double>& raw,
                               bool by_label) {
  std::map<CellId, double> values;
  for (const auto& [key, x] : raw) {
    std::optional<CellId> id;
    if (by_label) {
      id = c.find_label(std::to_string(key));
    } else if (key >= 0 && static_cast<std::size_t>(key) < c.size()) {
      id = static_cast<CellId>(key);
    }
    if (!id || c[*id].dim != 0) {
      throw ValidationError("vertex value for " + std::to_string(key) + " names no vertex");
    }
    values[*id] = x;
  }
  return VertexFunction(std::move(values));
}

void emit_barcode(std::ostream& out, const Barcode& b, const std::string& svg, double scale,
                  std::string_view title) {
  write_bcx(out, b, scale);
  if (!svg.empty()) {
    const Barcode shown = scale == 1.0 ? b : [&] {
      std::vector<Bar> bars = b.bars();
      for (auto& bar : bars) {
        bar.interval.birth *= scale;
        bar.interval.death *= scale;
      }
      return Barcode(std::move(bars));
    }();
    write_file(svg, [&](std::ostream& s) { write_barcode_svg(s, shown, title); });
  }
}

std::vector<double> parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw UsageError("--grid expects start:stop:step");
  try {
    const double start = parse_double(text.substr(0, c1));
    const double stop = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
    const double step = parse_double(text.substr(c2 + 1));
    if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop) || stop < start) {
      throw UsageError("--grid needs finite start <= stop and a positive step");
    }
    return make_grid(start, stop, step);
  } catch (const ParseError&) {
    throw UsageError("--grid expects start:stop:step");
  }
}

struct Example {
  std::string name;
  std::string description;
  std::function<void(std::ostream&, int genus)> write;
};

// Vertex values of a height surface keyed by cell ids of its filtration.
void write_height_values(std::ostream& out, const HeightSurface& s) {
  const FilteredComplex filtered = s.filtration();
  for (const auto& [v, x] : s.height.values()) {
    const auto id = filtered.find_label(s.skeleton[v].label);
    out << *id << ' ' << format_double(x) << '\n';
  }
}

std::vector<Example> examples() {
  auto fcx = [](auto make) {
    return [make](std::ostream& out, int genus) { write_fcx(out, make(genus)); };
  };
  return {
      {"klein_delta.fcx", "Delta-complex Klein bottle (v; a, b, c; U, L)",
       fcx([](int) { return klein_delta(); })},
      {"torus_delta.fcx", "3x3 grid torus", fcx([](int) { return torus_delta(); })},
      {"ng_cw.fcx", "minimal CW structure of N_g (--genus)", fcx([](int g) { return ng_cw(g); })},
      {"ng_simplicial.fcx", "simplicial N_g as a connected sum (--genus)",
       fcx([](int g) { return ng_simplicial(g); })},
      {"klein_height.fcx", "height-filtered Klein bottle, M = 2, A = 1",
       fcx([](int) { return klein_height(2.0, 1.0); })},
      {"klein_height.values", "vertex values for klein_height.fcx",
       [](std::ostream& out, int) { write_height_values(out, klein_height_surface(2.0, 1.0)); }},
      {"torus_height.fcx", "height-filtered vertical torus, M = 2, A = 1",
       fcx([](int) { return torus_height_surface(2.0, 1.0).filtration(); })},
      {"torus_height.values", "vertex values for torus_height.fcx",
       [](std::ostream& out, int) { write_height_values(out, torus_height_surface(2.0, 1.0)); }},
      {"circle20.csv", "20 points on the unit circle",
       [](std::ostream& out, int) { write_point_csv(out, circle_points(20)); }},
  };
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Z/2 persistent homology toolkit", "z2ph"};
  app.require_subcommand(1);
  app.footer(kFormats);
  app.set_version_flag("--version", "z2ph 1.0");

  std::string input, format, svg, values_path, grid, output, bcx1, bcx2;
  std::optional<double> spacing, bound, threshold, step_size;
  std::optional<int> steps, dim_opt;
  int max_dim = -1, genus = 2;
  bool radius_axis = false, list = false;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "input format (default: by extension, fcx otherwise)")
        ->check(CLI::IsMember({"fcx", "spx"}));
  };
  auto add_svg = [&](CLI::App* sub) {
    sub->add_option("--svg", svg, "also write an SVG barcode rendering to this path");
  };

  auto* homology_cmd = app.add_subcommand("homology", "Betti numbers and generators");
  homology_cmd->add_option("file", input, "complex (FCX or SPX)")->required();
  add_format(homology_cmd);

  auto* persist_cmd = app.add_subcommand("persist", "barcode of a filtered complex (BCX)");
  persist_cmd->add_option("file", input, "filtered complex (FCX or SPX)")->required();
  add_format(persist_cmd);
  add_svg(persist_cmd);

  auto* extended_cmd = app.add_subcommand("extended", "extended barcode of a vertex function (BCX)");
  extended_cmd->add_option("file", input, "skeleton (FCX or SPX); its values are ignored")
      ->required();
  extended_cmd->add_option("--vertex-values", values_path, "vertex values file")->required();
  extended_cmd->add_option("--spacing", spacing, "gap lambda between the two phases (default 1)");
  extended_cmd->add_option("--bound", bound, "M with |f| <= M (default max|f| + 1)");
  add_format(extended_cmd);
  add_svg(extended_cmd);

  auto* rips_cmd = app.add_subcommand("rips", "Vietoris-Rips barcode of a point cloud (BCX)");
  rips_cmd->add_option("points", input, "point cloud CSV")->required();
  rips_cmd->add_option("--max-dim", max_dim, "largest simplex dimension")->required();
  rips_cmd->add_option("--steps", steps, "number of radius steps N");
  rips_cmd->add_option("--step-size", step_size, "radius step s (diameters snap to multiples of 2s)");
  rips_cmd->add_option("--threshold", threshold, "largest diameter (default 2Ns when stepped)");
  rips_cmd->add_flag("--radius-axis", radius_axis, "print scales as radii (half the diameter)");
  add_svg(rips_cmd);

  auto* distance_cmd = app.add_subcommand("distance", "bottleneck distance between two barcodes");
  distance_cmd->add_option("first", bcx1, "BCX file")->required();
  distance_cmd->add_option("second", bcx2, "BCX file")->required();
  distance_cmd->add_option("--dim", dim_opt, "single degree (default: max over degrees)");

  auto* curve_cmd = app.add_subcommand("betti-curve", "Betti curves of a barcode on a grid (CSV)");
  curve_cmd->add_option("file", input, "BCX file")->required();
  curve_cmd->add_option("--grid", grid, "start:stop:step")->required();

  auto* example_cmd = app.add_subcommand("example", "write a bundled fixture");
  example_cmd->add_option("name", input, "fixture name, see --list");
  example_cmd->add_option("-o,--output", output, "output path (default: standard output)");
  example_cmd->add_option("--genus", genus, "genus for the N_g fixtures (default 2)");
  example_cmd->add_flag("--list", list, "list fixture names");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    // Flag checks that CLI11 cannot express, before touching any input.
    RipsParams rips_params;
    if (*rips_cmd) {
      rips_params = RipsParams{max_dim, steps, step_size, threshold};
      try {
        validate(rips_params);
      } catch (const ValidationError& e) {
        throw UsageError(e.what());
      }
    }
    if (*extended_cmd && spacing && !(*spacing > 0.0)) throw UsageError("--spacing must be positive");
    if (*extended_cmd && bound && !(*bound > 0.0)) throw UsageError("--bound must be positive");
    if (*distance_cmd && dim_opt && *dim_opt < 0) throw UsageError("--dim must be nonnegative");
    if (*example_cmd && genus < 1) throw UsageError("--genus must be at least 1");
    if (*example_cmd && !list && input.empty()) throw UsageError("example needs a name or --list");
    std::vector<double> grid_values;
    if (*curve_cmd) grid_values = parse_grid(grid);

    if (*homology_cmd) {
      const FilteredComplex c = read_complex(input, format);
      require_valid(c, ValidationScope::structure);
      const HomologySummary h = homology(c);
      out << "degree betti\n";
      for (const auto& [k, b] : h.betti) out << k << ' ' << b << '\n';
      out << "generators\n";
      for (const auto& [k, gens] : h.generators) {
        for (const auto& g : gens) {
          out << 'H' << k << ':';
          for (CellId id : g) out << ' ' << cell_name(c, id);
          out << '\n';
        }
      }
    } else if (*persist_cmd) {
      emit_barcode(out, barcode(read_complex(input, format)), svg, 1.0, input);
    } else if (*extended_cmd) {
      const FilteredComplex skeleton = read_complex(input, format);
      auto values_in = open_input(values_path);
      const bool by_label = format == "spx" || (format.empty() && input.ends_with(".spx"));
      BifiltrationSpec spec;
      spec.f = vertex_function(skeleton, read_vertex_values(values_in), by_label);
      spec.skeleton = skeleton;
      spec.bound = bound.value_or(spec.f.max_abs() + 1.0);
      spec.spacing = spacing.value_or(1.0);
      emit_barcode(out, extended_barcode(spec).barcode(), svg, 1.0, input);
    } else if (*rips_cmd) {
      auto in = open_input(input);
      const PointCloud pc = read_point_csv(in);
      emit_barcode(out, barcode(rips_filtration(pc, rips_params)), svg, radius_axis ? 0.5 : 1.0,
                   input);
    } else if (*distance_cmd) {
      const Barcode a = read_barcode(bcx1);
      const Barcode b = read_barcode(bcx2);
      out << format_double(dim_opt ? bottleneck(a, b, *dim_opt) : bottleneck(a, b)) << '\n';
    } else if (*curve_cmd) {
      const Barcode b = read_barcode(input);
      std::vector<std::vector<std::size_t>> curves;
      for (int k = 0; k <= std::max(0, b.max_dim()); ++k) {
        curves.push_back(betti_curve(b, k, grid_values));
      }
      write_betti_curves(out, grid_values, curves);
    } else if (*example_cmd) {
      const auto all = examples();
      if (list) {
        for (const auto& e : all) out << e.name << "  " << e.description << '\n';
        return kExitOk;
      }
      const auto it = std::find_if(all.begin(), all.end(),
                                   [&](const Example& e) { return e.name == input; });
      if (it == all.end()) throw UsageError("unknown example '" + input + "' (see --list)");
      if (output.empty()) {
        it->write(out, genus);
      } else {
        write_file(output, [&](std::ostream& s) { it->write(s, genus); });
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace z2ph::cli
