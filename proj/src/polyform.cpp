#include "quadent/polyform.hpp"

#include <stdexcept>

namespace quadent {

namespace {

struct Frac {
  MPoly num;
  FactoredDen den;
};

// Split a nonzero polynomial into sign*content, single-variable factors, and
// one primitive remainder.
FactoredDen factor_shallow(const MPoly& p) {
  FactoredDen d;
  std::size_t n = p.nvars();
  Monomial mc = p.monomial_content();
  MPoly rest = p.divide_monomial(mc);
  d.constant = rest.content();
  if (rest.terms().rbegin()->second < 0) d.constant = -d.constant;
  rest = rest.primitive();
  for (std::size_t v = 0; v < n; ++v) {
    if (mc[v] > 0) d.factors.emplace_back(MPoly::variable(n, v), mc[v]);
  }
  if (!rest.is_constant()) d.factors.emplace_back(rest, 1);
  return d;
}

void multiply_into(FactoredDen& a, const FactoredDen& b) {
  a.constant *= b.constant;
  for (const auto& [f, e] : b.factors) {
    bool found = false;
    for (auto& [g, k] : a.factors) {
      if (g == f) {
        k += e;
        found = true;
        break;
      }
    }
    if (!found) a.factors.emplace_back(f, e);
  }
}

int exponent_of(const FactoredDen& d, const MPoly& f) {
  for (const auto& [g, k] : d.factors) {
    if (g == f) return k;
  }
  return 0;
}

// Cancel factors of the denominator that divide the numerator.
void cancel(Frac& r) {
  std::size_t n = r.num.nvars();
  if (r.num.is_zero()) {
    r.den = FactoredDen{};
    return;
  }
  mpz_class g;
  mpz_class c = r.num.content();
  mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), r.den.constant.get_mpz_t());
  if (r.den.constant < 0) g = -g;
  if (g != 1) {
    r.num = r.num.divide_exact(MPoly::constant(n, g)).value();
    r.den.constant /= g;
  }
  for (auto& [f, e] : r.den.factors) {
    while (e > 0) {
      auto q = r.num.divide_exact(f);
      if (!q) break;
      r.num = std::move(*q);
      --e;
    }
  }
  std::erase_if(r.den.factors, [](const auto& fe) { return fe.second == 0; });
}

Frac add(const Frac& a, const Frac& b, bool subtract) {
  std::size_t n = a.num.nvars();
  FactoredDen l;
  mpz_lcm(l.constant.get_mpz_t(), a.den.constant.get_mpz_t(), b.den.constant.get_mpz_t());
  l.factors = a.den.factors;
  for (const auto& [f, e] : b.den.factors) {
    bool found = false;
    for (auto& [g, k] : l.factors) {
      if (g == f) {
        k = std::max(k, e);
        found = true;
      }
    }
    if (!found) l.factors.emplace_back(f, e);
  }
  auto cofactor = [&](const FactoredDen& d) {
    MPoly m = MPoly::constant(n, l.constant / d.constant);
    for (const auto& [f, e] : l.factors) {
      int k = e - exponent_of(d, f);
      if (k > 0) m = m * f.pow(static_cast<unsigned>(k));
    }
    return m;
  };
  Frac r{a.num * cofactor(a.den), l};
  MPoly rhs = b.num * cofactor(b.den);
  if (subtract) r.num -= rhs;
  else r.num += rhs;
  cancel(r);
  return r;
}

Frac mul(const Frac& a, const Frac& b) {
  Frac r{a.num * b.num, a.den};
  multiply_into(r.den, b.den);
  cancel(r);
  return r;
}

Frac reciprocal(const Frac& a) {
  if (a.num.is_zero()) throw std::domain_error("denominator is identically zero");
  std::size_t n = a.num.nvars();
  Frac r{a.den.expand(n), factor_shallow(a.num)};
  if (r.den.constant < 0) {
    r.den.constant = -r.den.constant;
    r.num = -r.num;
  }
  return r;
}

Frac convert(const ExprPtr& e, const VarLayout& lay) {
  std::size_t n = lay.nvars();
  const Node& nd = *e;
  auto leaf = [&](MPoly p) { return Frac{std::move(p), FactoredDen{}}; };
  switch (nd.kind) {
    case NodeKind::Integer: return leaf(MPoly::constant(n, nd.value));
    case NodeKind::Param: return leaf(MPoly::variable(n, lay.param_var(nd.index)));
    case NodeKind::Func: return leaf(MPoly::variable(n, lay.func_var(nd.index, nd.parity)));
    case NodeKind::Field:
      return leaf(MPoly::variable(n, lay.field_var(corner_index(nd.di, nd.dj), static_cast<std::size_t>(nd.index))));
    case NodeKind::Add: return add(convert(nd.lhs, lay), convert(nd.rhs, lay), false);
    case NodeKind::Sub: return add(convert(nd.lhs, lay), convert(nd.rhs, lay), true);
    case NodeKind::Mul: return mul(convert(nd.lhs, lay), convert(nd.rhs, lay));
    case NodeKind::Div: return mul(convert(nd.lhs, lay), reciprocal(convert(nd.rhs, lay)));
    case NodeKind::Neg: {
      Frac r = convert(nd.lhs, lay);
      r.num = -r.num;
      return r;
    }
    case NodeKind::Pow: {
      Frac base = convert(nd.lhs, lay);
      if (nd.exponent < 0) base = reciprocal(base);
      Frac r = leaf(MPoly::constant(n, 1));
      for (int k = 0; k < std::abs(nd.exponent); ++k) r = mul(r, base);
      return r;
    }
  }
  throw std::logic_error("unhandled node kind");
}

}  // namespace

MPoly FactoredDen::expand(std::size_t nvars) const {
  MPoly r = MPoly::constant(nvars, constant);
  for (const auto& [f, e] : factors) r = r * f.pow(static_cast<unsigned>(e));
  return r;
}

PolyForm to_poly_form(const ExprPtr& e, const VarLayout& layout) {
  Frac f = convert(e, layout);
  PolyForm pf{std::move(f.num), std::move(f.den), {}};
  pf.field_degrees.resize(4 * layout.M);
  for (std::size_t v = 0; v < 4 * layout.M; ++v) pf.field_degrees[v] = std::max(0, pf.num.degree_in(v));
  return pf;
}

bool verify_poly_form(const ExprPtr& e, const PolyForm& pf, const VarLayout& layout, const PrimeField& f,
                      std::mt19937_64& rng, int points) {
  MPoly den = pf.den.expand(layout.nvars());
  int done = 0, attempts = 0;
  std::vector<FieldElement> pt(layout.nvars());
  while (done < points) {
    if (++attempts > 10 * points + 10) return false;
    for (auto& v : pt) v = f.random_nonzero(rng);
    auto val = evaluate(f, e, layout, pt);
    if (!val) continue;
    if (f.mul(*val, den.eval(f, pt)) != pf.num.eval(f, pt)) return false;
    ++done;
  }
  return true;
}

int observed_degree(const MPoly& p, std::size_t var, const PrimeField& f, std::mt19937_64& rng, int trials) {
  int best = p.is_zero() ? -1 : 0;
  int bound = std::max(0, p.total_degree());
  std::vector<FieldElement> pt(p.nvars());
  for (int t = 0; t < trials; ++t) {
    for (auto& v : pt) v = f.random_nonzero(rng);
    // Sample at bound+1 distinct nodes and take Newton divided differences.
    int n = bound + 1;
    std::vector<FieldElement> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
      xs[i] = f.from_int(i + 1);
      pt[var] = xs[i];
      ys[i] = p.eval(f, pt);
    }
    for (int level = 1; level < n; ++level) {
      for (int i = n - 1; i >= level; --i) {
        FieldElement num = f.sub(ys[i], ys[i - 1]);
        FieldElement den = f.sub(xs[i], xs[i - level]);
        ys[i] = f.mul(num, f.inv(den));
      }
    }
    for (int i = n - 1; i >= 0; --i) {
      if (!ys[i].is_zero()) {
        best = std::max(best, i);
        break;
      }
    }
  }
  return best;
}

}  // namespace quadent
