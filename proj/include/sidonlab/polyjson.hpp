#pragma once

// Polynomial files:
//   {"n": 3, "d": 2, "domain": "torus" | "cube", "homogeneous": true,
//    "coefficients": [{"index": [1, 2], "phase": 0.5},
//                     {"index": [2, 3], "sign": -1},
//                     {"index": [3, 3], "value": [0.2, -1.0]}]}
// Indices are 1-based and sorted for the domain's monotonicity class.

#include <stdexcept>
#include <string>

#include "sidonlab/polyform.hpp"

namespace sidonlab {

/// Syntax or schema error. `line`/`column` are 1-based, 0 when unknown.
class PolyParseError : public std::runtime_error {
 public:
  PolyParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

Polynomial parse_polynomial(const std::string& text);
/// Reads and parses a file; the error message names the file.
Polynomial read_polynomial_file(const std::string& path);

/// Writes "sign" for real +-1 cube coefficients, "phase" for other
/// unimodular ones and "value" otherwise.
std::string polynomial_to_json(const Polynomial& p);

}  // namespace sidonlab
