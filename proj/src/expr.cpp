#include "quadent/expr.hpp"

#include <sstream>
#include <stdexcept>

namespace quadent {

namespace {

ExprPtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

Node blank(NodeKind k) {
  Node n;
  n.kind = k;
  return n;
}

int precedence(const Node& n) {
  switch (n.kind) {
    case NodeKind::Add:
    case NodeKind::Sub: return 1;
    case NodeKind::Mul:
    case NodeKind::Div: return 2;
    case NodeKind::Neg: return 3;
    case NodeKind::Pow: return 4;
    default: return 5;
  }
}

const char* op_symbol(NodeKind k) {
  switch (k) {
    case NodeKind::Add: return " + ";
    case NodeKind::Sub: return " - ";
    case NodeKind::Mul: return "*";
    case NodeKind::Div: return "/";
    default: return "?";
  }
}

std::string parity_suffix(Parity p) {
  switch (p) {
    case Parity::L: return "^((-1)^l)";
    case Parity::M: return "^((-1)^m)";
    default: return "";
  }
}

void print(std::ostream& os, const QuadSystemSpec& s, const Node& n) {
  auto operand = [&](const Node& child, bool parens) {
    if (parens) os << "(";
    print(os, s, child);
    if (parens) os << ")";
  };
  switch (n.kind) {
    case NodeKind::Integer: os << n.value.get_str(); break;
    case NodeKind::Param: os << s.params.at(n.index); break;
    case NodeKind::Func: {
      const auto& fd = s.funcs.at(n.index);
      os << fd.name << "(" << fd.index_var << ")" << parity_suffix(n.parity);
      break;
    }
    case NodeKind::Field: os << s.fields.at(n.index) << "[" << n.di << "," << n.dj << "]"; break;
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
    case NodeKind::Div: {
      int p = precedence(n);
      operand(*n.lhs, precedence(*n.lhs) < p);
      os << op_symbol(n.kind);
      operand(*n.rhs, precedence(*n.rhs) <= p);
      break;
    }
    case NodeKind::Neg:
      os << "-";
      operand(*n.lhs, precedence(*n.lhs) < 3);
      break;
    case NodeKind::Pow:
      operand(*n.lhs, precedence(*n.lhs) <= 4);
      if (n.exponent < 0) os << "^(" << n.exponent << ")";
      else os << "^" << n.exponent;
      break;
  }
}

}  // namespace

ExprPtr make_integer(const mpz_class& v) {
  Node n = blank(NodeKind::Integer);
  n.value = v;
  return make(std::move(n));
}

ExprPtr make_param(int index) {
  Node n = blank(NodeKind::Param);
  n.index = index;
  return make(std::move(n));
}

ExprPtr make_func(int index, Parity parity) {
  Node n = blank(NodeKind::Func);
  n.index = index;
  n.parity = parity;
  return make(std::move(n));
}

ExprPtr make_field(int index, int di, int dj) {
  if (di < 0 || di > 1 || dj < 0 || dj > 1) throw std::invalid_argument("field shift outside unit quad");
  Node n = blank(NodeKind::Field);
  n.index = index;
  n.di = di;
  n.dj = dj;
  return make(std::move(n));
}

ExprPtr make_binary(NodeKind kind, ExprPtr a, ExprPtr b) {
  Node n = blank(kind);
  n.lhs = std::move(a);
  n.rhs = std::move(b);
  return make(std::move(n));
}

ExprPtr make_neg(ExprPtr a) {
  Node n = blank(NodeKind::Neg);
  n.lhs = std::move(a);
  return make(std::move(n));
}

ExprPtr make_pow(ExprPtr base, int exponent) {
  Node n = blank(NodeKind::Pow);
  n.lhs = std::move(base);
  n.exponent = exponent;
  return make(std::move(n));
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case NodeKind::Integer: return a->value == b->value;
    case NodeKind::Param: return a->index == b->index;
    case NodeKind::Func: return a->index == b->index && a->parity == b->parity;
    case NodeKind::Field: return a->index == b->index && a->di == b->di && a->dj == b->dj;
    case NodeKind::Neg: return structurally_equal(a->lhs, b->lhs);
    case NodeKind::Pow: return a->exponent == b->exponent && structurally_equal(a->lhs, b->lhs);
    default: return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
  }
}

std::string var_name(const QuadSystemSpec& s, std::size_t var) {
  VarLayout lay(s);
  if (lay.is_field_var(var)) {
    int c = lay.var_corner(var);
    return s.fields[lay.var_component(var)] + std::to_string(corner_i(c)) + std::to_string(corner_j(c));
  }
  var -= 4 * lay.M;
  if (var < lay.P) return s.params[var];
  var -= lay.P;
  const auto& fd = s.funcs[var / 3];
  switch (static_cast<Parity>(var % 3)) {
    case Parity::L: return fd.name + "^((-1)^l)";
    case Parity::M: return fd.name + "^((-1)^m)";
    default: return fd.name;
  }
}

std::string to_source(const QuadSystemSpec& s, const ExprPtr& e) {
  std::ostringstream os;
  print(os, s, *e);
  return os.str();
}

std::string to_source(const QuadSystemSpec& s) {
  std::ostringstream os;
  os << "fields";
  for (const auto& f : s.fields) os << " " << f;
  os << "\n";
  if (!s.params.empty()) {
    os << "params";
    for (const auto& p : s.params) os << " " << p;
    os << "\n";
  }
  if (!s.funcs.empty()) {
    os << "funcs";
    for (const auto& f : s.funcs) os << " " << f.name << "(" << f.index_var << ")" << parity_suffix(f.parity);
    os << "\n";
  }
  for (const auto& eq : s.equations) os << to_source(s, eq) << " = 0;\n";
  return os.str();
}

std::optional<FieldElement> evaluate(const PrimeField& f, const ExprPtr& e, const VarLayout& layout,
                                     const std::vector<FieldElement>& point) {
  const Node& n = *e;
  switch (n.kind) {
    case NodeKind::Integer: return f.from_mpz(n.value);
    case NodeKind::Param: return point[layout.param_var(n.index)];
    case NodeKind::Func: return point[layout.func_var(n.index, n.parity)];
    case NodeKind::Field:
      return point[layout.field_var(corner_index(n.di, n.dj), static_cast<std::size_t>(n.index))];
    case NodeKind::Neg: {
      auto a = evaluate(f, n.lhs, layout, point);
      if (!a) return std::nullopt;
      return f.neg(*a);
    }
    case NodeKind::Pow: {
      auto a = evaluate(f, n.lhs, layout, point);
      if (!a) return std::nullopt;
      if (n.exponent >= 0) return f.pow(*a, static_cast<std::uint64_t>(n.exponent));
      if (a->is_zero()) return std::nullopt;
      return f.inv(f.pow(*a, static_cast<std::uint64_t>(-n.exponent)));
    }
    default: break;
  }
  auto a = evaluate(f, n.lhs, layout, point);
  auto b = evaluate(f, n.rhs, layout, point);
  if (!a || !b) return std::nullopt;
  switch (n.kind) {
    case NodeKind::Add: return f.add(*a, *b);
    case NodeKind::Sub: return f.sub(*a, *b);
    case NodeKind::Mul: return f.mul(*a, *b);
    case NodeKind::Div:
      if (b->is_zero()) return std::nullopt;
      return f.mul(*a, f.inv(*b));
    default: throw std::logic_error("unhandled node kind");
  }
}

unsigned referenced_corners(const ExprPtr& e) {
  if (!e) return 0;
  if (e->kind == NodeKind::Field) return 1u << corner_index(e->di, e->dj);
  return referenced_corners(e->lhs) | referenced_corners(e->rhs);
}

}  // namespace quadent
