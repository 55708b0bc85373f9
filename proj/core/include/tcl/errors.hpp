#pragma once

#include <stdexcept>
#include <string>

namespace tcl {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched ground-set sizes (permutation vs permutation, coloring vs graph).
struct dimension_error : error {
  using error::error;
};

// Malformed arguments that are not a size/capability problem.
struct argument_error : error {
  using error::error;
};

// Residue k outside 1..r-1 (k = 0 mod r never names a tight-cycle family here).
struct invalid_residue_error : argument_error {
  using argument_error::argument_error;
};

// Request exceeds a documented size cap; computation refused, not attempted.
struct capability_error : error {
  using error::error;
};

// Coloring queried on an edge it does not assign.
struct incomplete_coloring_error : error {
  using error::error;
};

// Part extraction asked of a color whose group is not a two-block stabilizer.
struct unsupported_color_error : error {
  using error::error;
};

// Text input does not match one of the documented file formats.
struct parse_error : error {
  using error::error;
};

}  // namespace tcl
