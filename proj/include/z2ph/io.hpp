#pragma once

// Text formats.
//
//   FCX v1   cell <id> <dim> <value> [<face-id>...]    ids 0, 1, 2, ... in order
//   SPX v1   <value> <v1> ... <vk>                      one simplex per line
//            or: vertexfn / <vertex> <value> lines / simplices / <v1> ... <vk> lines
//   BCX v1   <dim> <birth> <death|inf>                  sorted by (dim, birth, death)
//   points   x1,x2,...,xd                               one point per line
//   values   <vertex-id> <value>
//   curves   t,b0,...,bK
//
// '#' starts a comment everywhere; blank lines are skipped. Malformed input
// throws ParseError with the offending line number.

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "z2ph/complex.hpp"
#include "z2ph/persistence.hpp"
#include "z2ph/rips.hpp"

namespace z2ph {

// Shortest representation that parses back to the same double; "inf"/"-inf".
std::string format_double(double x);
// Accepts anything std::from_chars takes plus inf/-inf. Throws ParseError.
double parse_double(std::string_view token, std::size_t line = 0);

FilteredComplex read_fcx(std::istream& in);
void write_fcx(std::ostream& out, const FilteredComplex& c);

// Plain mode closes the simplices under faces (undeclared faces take the
// minimum over their cofaces). vertexfn mode builds the closure with zero
// values and applies the lower-star filtration of the listed vertex values.
// Vertex cells carry their file vertex number as label.
FilteredComplex read_spx(std::istream& in);

Barcode read_bcx(std::istream& in);
// scale multiplies every finite endpoint before printing (display only).
void write_bcx(std::ostream& out, const Barcode& b, double scale = 1.0);

PointCloud read_point_csv(std::istream& in);
void write_point_csv(std::ostream& out, const PointCloud& pc);

// Repeated vertex ids are a ParseError.
std::map<long long, double> read_vertex_values(std::istream& in);
void write_vertex_values(std::ostream& out, const VertexFunction& f);

void write_betti_curves(std::ostream& out, std::span<const double> grid,
                        std::span<const std::vector<std::size_t>> curves);

// Static SVG: one horizontal segment per bar, rows grouped by dimension,
// infinite bars run to the right margin and end in an arrowhead.
void write_barcode_svg(std::ostream& out, const Barcode& b, std::string_view title = {});

}  // namespace z2ph
