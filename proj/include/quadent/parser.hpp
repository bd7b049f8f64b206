#ifndef QUADENT_PARSER_HPP
#define QUADENT_PARSER_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "quadent/expr.hpp"

namespace quadent {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

struct ParseOptions {
  /// Reject equations touching fewer than two quad vertices.
  bool require_two_vertices = true;
  /// Reject systems whose equation count differs from the field count.
  bool require_square = true;
};

/// Parse the system DSL:
///
///   fields x y
///   params a b
///   funcs lam(l) mu3(m)^((-1)^l)
///   (x[0,0] - x[1,1])*(y[1,0] - y[0,1]) - a + b = 0;
///   ...
///
/// Declarations end at a newline or `;`; equations end at `;` or end of
/// input. `lhs = rhs` is read as lhs - rhs = 0, and a bare expression as
/// expr = 0. Without any declaration, identifiers followed by `[` are
/// fields (in order of appearance) and all other identifiers parameters.
QuadSystemSpec parse_system(std::string_view text, const ParseOptions& opts = {});

}  // namespace quadent

#endif  // QUADENT_PARSER_HPP
