#ifndef QUADENT_EXPR_HPP
#define QUADENT_EXPR_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "quadent/field.hpp"

namespace quadent {

/// Alternating-exponent decoration on an arbitrary function value:
/// f^((-1)^l) or f^((-1)^m).
enum class Parity { None = 0, L = 1, M = 2 };

enum class NodeKind { Integer, Param, Func, Field, Add, Sub, Mul, Div, Neg, Pow };

struct Node;
using ExprPtr = std::shared_ptr<const Node>;

struct Node {
  NodeKind kind = NodeKind::Integer;
  mpz_class value;      // Integer
  int index = 0;        // Param, Func, Field: position in the declaring list
  int di = 0, dj = 0;   // Field shift within the unit quad
  Parity parity = Parity::None;  // Func
  int exponent = 0;     // Pow
  ExprPtr lhs, rhs;     // binary operands; unary operand in lhs
};

ExprPtr make_integer(const mpz_class& v);
ExprPtr make_param(int index);
ExprPtr make_func(int index, Parity parity);
ExprPtr make_field(int index, int di, int dj);
ExprPtr make_binary(NodeKind kind, ExprPtr a, ExprPtr b);
ExprPtr make_neg(ExprPtr a);
ExprPtr make_pow(ExprPtr base, int exponent);

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

struct FuncDecl {
  std::string name;
  char index_var = 'l';  // 'l' or 'm'
  Parity parity = Parity::None;
};

/// A square system of M quad relations, each read as `expr = 0`.
struct QuadSystemSpec {
  std::vector<std::string> fields;
  std::vector<std::string> params;
  std::vector<FuncDecl> funcs;
  std::vector<ExprPtr> equations;

  std::size_t M() const { return fields.size(); }
};

/// Unit-quad corners in the fixed order (0,0), (1,0), (0,1), (1,1).
inline int corner_index(int i, int j) { return i + 2 * j; }
inline int corner_i(int c) { return c & 1; }
inline int corner_j(int c) { return c >> 1; }

/// Maps symbols of a system to polynomial variable indices:
/// field k at corner c, then parameters, then three slots per function
/// (one per parity decoration).
struct VarLayout {
  std::size_t M = 0, P = 0, F = 0;

  explicit VarLayout(const QuadSystemSpec& s) : M(s.M()), P(s.params.size()), F(s.funcs.size()) {}
  VarLayout(std::size_t m, std::size_t p, std::size_t f) : M(m), P(p), F(f) {}

  std::size_t nvars() const { return 4 * M + P + 3 * F; }
  std::size_t field_var(int corner, std::size_t k) const { return static_cast<std::size_t>(corner) * M + k; }
  std::size_t param_var(std::size_t p) const { return 4 * M + p; }
  std::size_t func_var(std::size_t f, Parity par) const {
    return 4 * M + P + 3 * f + static_cast<std::size_t>(par);
  }
  bool is_field_var(std::size_t v) const { return v < 4 * M; }
  int var_corner(std::size_t v) const { return static_cast<int>(v / M); }
  std::size_t var_component(std::size_t v) const { return v % M; }
};

std::string var_name(const QuadSystemSpec& s, std::size_t var);

/// Source form that re-parses to a structurally identical tree.
std::string to_source(const QuadSystemSpec& s, const ExprPtr& e);
/// Full system text, declarations included.
std::string to_source(const QuadSystemSpec& s);

/// Evaluate over GF(p) with every symbol given by its VarLayout slot.
/// Returns nullopt when a division by zero occurs.
std::optional<FieldElement> evaluate(const PrimeField& f, const ExprPtr& e, const VarLayout& layout,
                                     const std::vector<FieldElement>& point);

/// Corners referenced by an expression, as a bitmask over corner_index.
unsigned referenced_corners(const ExprPtr& e);

}  // namespace quadent

#endif  // QUADENT_EXPR_HPP
