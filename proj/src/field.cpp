#include "quadent/field.hpp"

#include <string>

namespace quadent {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 17; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= (1ULL << 32) || !is_prime(p)) {
    throw std::invalid_argument("modulus must be an odd prime below 2^32, got " + std::to_string(p));
  }
}

FieldElement PrimeField::from_int(std::int64_t v) const {
  auto pm = static_cast<std::int64_t>(p_);
  std::int64_t r = v % pm;
  if (r < 0) r += pm;
  return {static_cast<std::uint64_t>(r)};
}

FieldElement PrimeField::from_mpz(const mpz_class& v) const {
  mpz_class r;
  mpz_class pm(static_cast<unsigned long>(p_));
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pm.get_mpz_t());
  return {static_cast<std::uint64_t>(r.get_ui())};
}

FieldElement PrimeField::pow(FieldElement a, std::uint64_t e) const {
  FieldElement result{1};
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero in GF(p)");
  return pow(a, p_ - 2);
}

}  // namespace quadent
