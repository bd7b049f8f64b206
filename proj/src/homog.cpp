#include "quadent/homog.hpp"

#include <algorithm>

namespace quadent {

namespace {

using Coeffs = std::vector<std::uint64_t>;

// Univariate helpers on dense coefficient vectors (index = power of t0).
int udeg(const Coeffs& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] != 0) return i;
  }
  return -1;
}

void trim(Coeffs& a) {
  int d = udeg(a);
  a.resize(static_cast<std::size_t>(std::max(d, -1) + 1));
}

// a mod b, b nonzero and trimmed.
Coeffs umod(const PrimeField& f, Coeffs a, const Coeffs& b) {
  int db = static_cast<int>(b.size()) - 1;
  FieldElement inv = f.inv({b.back()});
  trim(a);
  while (static_cast<int>(a.size()) - 1 >= db) {
    int shift = static_cast<int>(a.size()) - 1 - db;
    FieldElement q = f.mul({a.back()}, inv);
    for (int i = 0; i <= db; ++i) {
      auto& t = a[static_cast<std::size_t>(i + shift)];
      t = f.sub({t}, f.mul(q, {b[static_cast<std::size_t>(i)]})).value;
    }
    trim(a);
  }
  return a;
}

Coeffs udiv_exact(const PrimeField& f, Coeffs a, const Coeffs& b) {
  int db = static_cast<int>(b.size()) - 1;
  trim(a);
  int da = static_cast<int>(a.size()) - 1;
  if (da < db) {
    if (da < 0) return {};
    throw std::domain_error("inexact polynomial division");
  }
  Coeffs q(static_cast<std::size_t>(da - db + 1), 0);
  FieldElement inv = f.inv({b.back()});
  for (int k = da - db; k >= 0; --k) {
    FieldElement c = f.mul({a[static_cast<std::size_t>(k + db)]}, inv);
    q[static_cast<std::size_t>(k)] = c.value;
    if (c.is_zero()) continue;
    for (int i = 0; i <= db; ++i) {
      auto& t = a[static_cast<std::size_t>(i + k)];
      t = f.sub({t}, f.mul(c, {b[static_cast<std::size_t>(i)]})).value;
    }
  }
  if (udeg(a) >= 0) throw std::domain_error("inexact polynomial division");
  return q;
}

Coeffs ugcd(const PrimeField& f, Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = umod(f, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  FieldElement inv = f.inv({a.back()});
  for (auto& c : a) c = f.mul({c}, inv).value;
  return a;
}

}  // namespace

HomogPoly::HomogPoly(int degree, std::vector<std::uint64_t> coeffs) : deg_(degree), c_(std::move(coeffs)) {
  if (degree < 0) throw std::invalid_argument("negative homogeneous degree");
  c_.resize(static_cast<std::size_t>(degree) + 1, 0);
}

bool HomogPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](auto c) { return c == 0; });
}

int HomogPoly::dehom_degree() const { return udeg(c_); }

FieldElement HomogPoly::eval(const PrimeField& f, FieldElement t0, FieldElement t1) const {
  FieldElement acc{0};
  FieldElement p1{1};
  // Horner in t0 with t1 powers accumulated from the top coefficient down.
  for (int j = deg_; j >= 0; --j) {
    acc = f.add(acc, f.mul({c_[static_cast<std::size_t>(j)]}, f.mul(f.pow(t0, static_cast<std::uint64_t>(j)), p1)));
    p1 = f.mul(p1, t1);
  }
  return acc;
}

HomogPoly hp_add(const PrimeField& f, const HomogPoly& a, const HomogPoly& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("adding homogeneous polynomials of different degree");
  Coeffs c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add({a.coeffs()[i]}, {b.coeffs()[i]}).value;
  return HomogPoly(a.degree(), std::move(c));
}

HomogPoly hp_sub(const PrimeField& f, const HomogPoly& a, const HomogPoly& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("subtracting homogeneous polynomials of different degree");
  Coeffs c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub({a.coeffs()[i]}, {b.coeffs()[i]}).value;
  return HomogPoly(a.degree(), std::move(c));
}

HomogPoly hp_mul(const PrimeField& f, const HomogPoly& a, const HomogPoly& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  int dx = a.dehom_degree(), dy = b.dehom_degree();
  Coeffs c(static_cast<std::size_t>(a.degree() + b.degree()) + 1, 0);
  if (dx < 0 || dy < 0) return HomogPoly(a.degree() + b.degree(), std::move(c));
  const std::uint64_t p = f.prime();
  // Products are below 2^64; accumulate 128-bit sums and reduce once.
  for (int k = 0; k <= dx + dy; ++k) {
    unsigned __int128 acc = 0;
    int lo = std::max(0, k - dy), hi = std::min(k, dx);
    for (int i = lo; i <= hi; ++i) acc += static_cast<unsigned __int128>(x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(k - i)]);
    c[static_cast<std::size_t>(k)] = static_cast<std::uint64_t>(acc % p);
  }
  return HomogPoly(a.degree() + b.degree(), std::move(c));
}

HomogPoly hp_scale(const PrimeField& f, const HomogPoly& a, FieldElement s) {
  Coeffs c = a.coeffs();
  for (auto& v : c) v = f.mul({v}, s).value;
  return HomogPoly(a.degree(), std::move(c));
}

HomogPoly hp_pow(const PrimeField& f, const HomogPoly& a, unsigned e) {
  HomogPoly r = HomogPoly::constant(1);
  HomogPoly b = a;
  while (e > 0) {
    if (e & 1) r = hp_mul(f, r, b);
    e >>= 1;
    if (e > 0) b = hp_mul(f, b, b);
  }
  return r;
}

HomogPoly hp_gcd(const PrimeField& f, const HomogPoly& a, const HomogPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // t1-adic part: power of t1 dividing both.
  int ka = a.degree() - a.dehom_degree(), kb = b.degree() - b.dehom_degree();
  Coeffs g = ugcd(f, a.coeffs(), b.coeffs());
  int dg = static_cast<int>(g.size()) - 1;
  return HomogPoly(dg + std::min(ka, kb), std::move(g));
}

HomogPoly hp_div_exact(const PrimeField& f, const HomogPoly& a, const HomogPoly& b) {
  if (b.is_zero()) throw ZeroDivision("division by the zero polynomial");
  int ka = a.degree() - a.dehom_degree(), kb = b.degree() - b.dehom_degree();
  int d = a.degree() - b.degree();
  if (a.is_zero()) return HomogPoly(std::max(d, 0), {});
  if (d < 0 || ka < kb) throw std::domain_error("inexact polynomial division");
  Coeffs bb = b.coeffs();
  trim(bb);
  return HomogPoly(d, udiv_exact(f, a.coeffs(), bb));
}

RationalPair pair_add(const PrimeField& f, const RationalPair& a, const RationalPair& b) {
  return {hp_add(f, hp_mul(f, a.num, b.den), hp_mul(f, b.num, a.den)), hp_mul(f, a.den, b.den)};
}

RationalPair pair_sub(const PrimeField& f, const RationalPair& a, const RationalPair& b) {
  return {hp_sub(f, hp_mul(f, a.num, b.den), hp_mul(f, b.num, a.den)), hp_mul(f, a.den, b.den)};
}

RationalPair pair_mul(const PrimeField& f, const RationalPair& a, const RationalPair& b) {
  return {hp_mul(f, a.num, b.num), hp_mul(f, a.den, b.den)};
}

RationalPair pair_div(const PrimeField& f, const RationalPair& a, const RationalPair& b) {
  if (b.num.is_zero()) throw ZeroDivision("division by the zero function");
  return {hp_mul(f, a.num, b.den), hp_mul(f, a.den, b.num)};
}

RationalPair reduce(const PrimeField& f, const RationalPair& a) {
  if (a.den.is_zero()) throw ZeroDivision("zero denominator");
  if (a.num.is_zero()) return {HomogPoly::constant(0), HomogPoly::constant(1)};
  HomogPoly g = hp_gcd(f, a.num, a.den);
  RationalPair r{hp_div_exact(f, a.num, g), hp_div_exact(f, a.den, g)};
  // Normalize so the denominator is monic in its top t0 coefficient.
  FieldElement lead{r.den.coeffs()[static_cast<std::size_t>(r.den.dehom_degree())]};
  FieldElement inv = f.inv(lead);
  return {hp_scale(f, r.num, inv), hp_scale(f, r.den, inv)};
}

}  // namespace quadent
