#ifndef QUADENT_FIELD_HPP
#define QUADENT_FIELD_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

#include <gmpxx.h>

namespace quadent {

/// Default coefficient field: GF(2^31 - 1).
inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;
/// Second prime used for seed/prime robustness checks.
inline constexpr std::uint64_t kAlternatePrime = 2147483629ULL;

/// Residue modulo the prime of some PrimeField. Always kept in [0, p).
struct FieldElement {
  std::uint64_t value = 0;

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr bool operator==(FieldElement, FieldElement) = default;
};

/// Arithmetic in GF(p) for a runtime prime p < 2^32.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t prime() const { return p_; }

  FieldElement from_int(std::int64_t v) const;
  FieldElement from_mpz(const mpz_class& v) const;

  FieldElement add(FieldElement a, FieldElement b) const {
    std::uint64_t s = a.value + b.value;
    return {s >= p_ ? s - p_ : s};
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  FieldElement neg(FieldElement a) const { return {a.value == 0 ? 0 : p_ - a.value}; }
  FieldElement mul(FieldElement a, FieldElement b) const { return {(a.value * b.value) % p_}; }
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  // Throws std::domain_error on zero.
  FieldElement inv(FieldElement a) const;

  /// Uniform element of GF(p) \ {0}.
  template <class Rng>
  FieldElement random_nonzero(Rng& rng) const {
    std::uniform_int_distribution<std::uint64_t> dist(1, p_ - 1);
    return {dist(rng)};
  }

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace quadent

#endif  // QUADENT_FIELD_HPP
