#include <doctest.h>

#include <random>
#include <vector>

#include "quadent/field.hpp"

using namespace quadent;

namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("is_prime agrees with trial division") {
    for (std::uint64_t n = 0; n < 5000; ++n) CHECK_MESSAGE(is_prime(n) == trial_division_prime(n), n);
    CHECK(is_prime(kDefaultPrime));
    CHECK(is_prime(kAlternatePrime));
    CHECK_FALSE(is_prime(2147483649ULL));
  }

  TEST_CASE("constructor rejects non-primes and oversized moduli") {
    CHECK_THROWS(PrimeField(15));
    CHECK_THROWS(PrimeField(2));
    CHECK_THROWS(PrimeField((1ULL << 32) + 15));
    CHECK_NOTHROW(PrimeField(101));
  }

  TEST_CASE("field axioms at random elements") {
    for (std::uint64_t p : std::vector<std::uint64_t>{101, 65537, kDefaultPrime, kAlternatePrime}) {
      PrimeField f(p);
      std::mt19937_64 rng(p);
      for (int i = 0; i < 500; ++i) {
        auto a = f.random_nonzero(rng), b = f.random_nonzero(rng), c = f.random_nonzero(rng);
        CHECK(f.mul(a, f.inv(a)) == FieldElement{1});
        CHECK(f.add(a, f.neg(a)) == FieldElement{0});
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
        CHECK(f.pow(a, p - 1) == FieldElement{1});
        // Wide products reduced through 128 bits as an independent check.
        auto wide = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.value) * b.value) % p);
        CHECK(f.mul(a, b).value == wide);
      }
    }
  }

  TEST_CASE("conversions from signed and big integers") {
    PrimeField f(101);
    CHECK(f.from_int(-1).value == 100);
    CHECK(f.from_int(202).value == 0);
    CHECK(f.from_mpz(mpz_class("-1000000000000000000001")).value ==
          mpz_class((mpz_class("-1000000000000000000001") % 101 + 101) % 101).get_ui());
    CHECK_THROWS_AS(f.inv(FieldElement{0}), std::domain_error);
  }
}
