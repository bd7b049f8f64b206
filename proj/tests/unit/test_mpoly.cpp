#include <doctest.h>

#include <random>

#include "quadent/mpoly.hpp"

using namespace quadent;

namespace {

MPoly random_poly(std::mt19937_64& rng, std::size_t nvars, int terms, int maxdeg) {
  MPoly p(nvars);
  std::uniform_int_distribution<int> coef(-9, 9), deg(0, maxdeg);
  for (int t = 0; t < terms; ++t) {
    Monomial m(nvars);
    for (auto& e : m) e = static_cast<std::uint16_t>(deg(rng));
    p.add_term(m, coef(rng));
  }
  return p;
}

std::vector<FieldElement> random_point(const PrimeField& f, std::mt19937_64& rng, std::size_t n) {
  std::vector<FieldElement> pt(n);
  for (auto& v : pt) v = f.random_nonzero(rng);
  return pt;
}

}  // namespace

TEST_SUITE("mpoly") {
  TEST_CASE("ring operations commute with evaluation") {
    PrimeField f;
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 50; ++iter) {
      auto a = random_poly(rng, 4, 5, 3), b = random_poly(rng, 4, 4, 2);
      auto pt = random_point(f, rng, 4);
      CHECK((a + b).eval(f, pt) == f.add(a.eval(f, pt), b.eval(f, pt)));
      CHECK((a - b).eval(f, pt) == f.sub(a.eval(f, pt), b.eval(f, pt)));
      CHECK((a * b).eval(f, pt) == f.mul(a.eval(f, pt), b.eval(f, pt)));
      CHECK(a.pow(3).eval(f, pt) == f.pow(a.eval(f, pt), 3));
      CHECK(a.scaled(-7).eval(f, pt) == f.mul(a.eval(f, pt), f.from_int(-7)));
    }
  }

  TEST_CASE("exact division recovers factors and rejects non-divisors") {
    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 30; ++iter) {
      auto a = random_poly(rng, 3, 4, 2), b = random_poly(rng, 3, 3, 2);
      if (a.is_zero() || b.is_zero()) continue;
      auto q = (a * b).divide_exact(b);
      REQUIRE(q.has_value());
      CHECK(*q == a);
    }
    auto x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    CHECK_FALSE((x * x + y).divide_exact(x + y).has_value());
  }

  TEST_CASE("degrees, coefficients and derivatives") {
    auto x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    auto p = x.pow(3) * y + x * y.pow(2).scaled(4) + MPoly::constant(2, 5);
    CHECK(p.degree_in(0) == 3);
    CHECK(p.degree_in(1) == 2);
    CHECK(p.total_degree() == 4);
    CHECK(p.coeff_in(0, 3) == y);
    CHECK(p.coeff_in(0, 1) == y.pow(2).scaled(4));
    CHECK(p.derivative(0) == x.pow(2).scaled(3) * y + y.pow(2).scaled(4));
    CHECK(p.coeff_in(0, 2).is_zero());
  }

  TEST_CASE("content, monomial content and primitive part") {
    auto x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    auto p = (x.pow(2) * y).scaled(-6) + (x * y.pow(3)).scaled(4);
    CHECK(p.content() == 2);
    CHECK(p.monomial_content() == Monomial{1, 1});
    CHECK(p.divide_monomial({1, 1}) == x.scaled(-6) + y.pow(2).scaled(4));
    auto prim = p.primitive();
    CHECK(prim.content() == 1);
    CHECK(prim.terms().rbegin()->second > 0);
  }
}
