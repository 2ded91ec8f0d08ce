#ifndef ARGSHIFT_IO_HPP
#define ARGSHIFT_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "argshift/lie_algebra.hpp"
#include "argshift/poly.hpp"

namespace argshift {

// Structure-constant file:
//   dim n
//   labels l1 ... ln          (optional; defaults to x1..xn)
//   i j k num/den             (one line per nonzero bracket, 1-based, i < j)
// Duplicate (i,j,k) lines and out-of-range indices are input errors.
// Blank lines and '#' comments are ignored.
LieAlgebra parse_algebra(std::istream& in, std::string_view source_name);
LieAlgebra load_algebra_file(const std::string& path);

// Point line: "point v1 v2 ... vn" with rational entries.
DualPoint parse_point_line(std::string_view line, int dim);
DualPoint load_point_file(const std::string& path, int dim);
std::string format_point(const DualPoint& p);

// Invariants file: one polynomial per line in the poly text syntax.
std::vector<Poly> parse_invariants(std::istream& in, std::span<const std::string> vars);
std::vector<Poly> load_invariants_file(const std::string& path, std::span<const std::string> vars);

} // namespace argshift

#endif
