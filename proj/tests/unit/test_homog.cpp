#include <doctest.h>

#include <algorithm>
#include <random>

#include "quadent/homog.hpp"

using namespace quadent;

namespace {

HomogPoly random_hp(const PrimeField& f, std::mt19937_64& rng, int deg, int t1_power = 0) {
  t1_power = std::min(t1_power, deg);
  std::vector<std::uint64_t> c(static_cast<std::size_t>(deg) + 1, 0);
  for (int j = 0; j + t1_power <= deg; ++j) c[static_cast<std::size_t>(j)] = f.random_nonzero(rng).value;
  return HomogPoly(deg, c);
}

bool same_function(const PrimeField& f, const RationalPair& a, const RationalPair& b, std::mt19937_64& rng) {
  for (int i = 0; i < 10; ++i) {
    auto t0 = f.random_nonzero(rng), t1 = f.random_nonzero(rng);
    auto lhs = f.mul(a.num.eval(f, t0, t1), b.den.eval(f, t0, t1));
    auto rhs = f.mul(b.num.eval(f, t0, t1), a.den.eval(f, t0, t1));
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("homog") {
  TEST_CASE("arithmetic is an evaluation homomorphism") {
    for (std::uint64_t p : std::vector<std::uint64_t>{101, kDefaultPrime}) {
      PrimeField f(p);
      std::mt19937_64 rng(p);
      for (int trial = 0; trial < 50; ++trial) {
        int da = static_cast<int>(rng() % 6), db = static_cast<int>(rng() % 6);
        auto a = random_hp(f, rng, da), b = random_hp(f, rng, db), c = random_hp(f, rng, da);
        auto t0 = f.random_nonzero(rng), t1 = f.random_nonzero(rng);
        CHECK(hp_mul(f, a, b).eval(f, t0, t1) == f.mul(a.eval(f, t0, t1), b.eval(f, t0, t1)));
        CHECK(hp_add(f, a, c).eval(f, t0, t1) == f.add(a.eval(f, t0, t1), c.eval(f, t0, t1)));
        CHECK(hp_sub(f, a, c).eval(f, t0, t1) == f.sub(a.eval(f, t0, t1), c.eval(f, t0, t1)));
        CHECK(hp_pow(f, b, 3).eval(f, t0, t1) == f.pow(b.eval(f, t0, t1), 3));
        CHECK(hp_mul(f, a, b).degree() == da + db);
      }
    }
  }

  TEST_CASE("gcd divides both and recovers a planted factor") {
    PrimeField f(kDefaultPrime);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      int t1c = static_cast<int>(rng() % 3);
      auto c = random_hp(f, rng, 1 + static_cast<int>(rng() % 4), t1c);
      auto a = random_hp(f, rng, 1 + static_cast<int>(rng() % 4));
      auto b = random_hp(f, rng, 1 + static_cast<int>(rng() % 4));
      auto ac = hp_mul(f, a, c), bc = hp_mul(f, b, c);
      auto g = hp_gcd(f, ac, bc);
      CHECK(g.degree() == c.degree());
      CHECK_NOTHROW(hp_div_exact(f, ac, g));
      CHECK_NOTHROW(hp_div_exact(f, bc, g));
      CHECK(hp_div_exact(f, ac, a) == c);
    }
  }

  TEST_CASE("inexact division throws") {
    PrimeField f(101);
    auto a = HomogPoly::linear(1, 1), b = HomogPoly::linear(1, 2);
    CHECK_THROWS_AS(hp_div_exact(f, a, b), std::domain_error);
    CHECK_THROWS_AS(hp_div_exact(f, a, HomogPoly::constant(0)), ZeroDivision);
  }

  TEST_CASE("reduce yields a coprime pair for the same function") {
    PrimeField f(kDefaultPrime);
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 50; ++trial) {
      auto c = random_hp(f, rng, 2, static_cast<int>(rng() % 2));
      RationalPair x{random_hp(f, rng, 3), random_hp(f, rng, 3)};
      RationalPair scaled{hp_mul(f, x.num, c), hp_mul(f, x.den, c)};
      auto r = reduce(f, scaled);
      CHECK(r.degree() == 3);
      CHECK(hp_gcd(f, r.num, r.den).degree() == 0);
      CHECK(same_function(f, r, x, rng));
    }
    CHECK_THROWS_AS(reduce(f, {HomogPoly::constant(1), HomogPoly::constant(0)}), ZeroDivision);
    auto z = reduce(f, {HomogPoly(2, {0, 0, 0}), HomogPoly(2, {1, 2, 3})});
    CHECK(z.degree() == 0);
  }

  TEST_CASE("degree of a Mobius composition") {
    // (t0 + 2 t1)/(3 t0 + t1) squared then reduced stays at degree 2.
    PrimeField f(kDefaultPrime);
    RationalPair x{HomogPoly::linear(1, 2), HomogPoly::linear(3, 1)};
    auto sq = reduce(f, pair_mul(f, x, x));
    CHECK(sq.degree() == 2);
    auto one = reduce(f, pair_div(f, x, x));
    CHECK(one.degree() == 0);
    auto sum = reduce(f, pair_add(f, x, RationalPair::constant({1})));
    CHECK(sum.degree() == 1);
    CHECK_THROWS_AS(pair_div(f, x, RationalPair::constant({0})), ZeroDivision);
  }
}
