#ifndef QUADENT_HOMOG_HPP
#define QUADENT_HOMOG_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "quadent/field.hpp"

namespace quadent {

/// Homogeneous polynomial sum_j c_j t0^j t1^(d-j) over GF(p). The zero
/// polynomial is homogeneous of every degree and keeps its nominal degree.
class HomogPoly {
 public:
  HomogPoly() : deg_(0), c_(1, 0) {}
  HomogPoly(int degree, std::vector<std::uint64_t> coeffs);

  static HomogPoly constant(std::uint64_t c) { return HomogPoly(0, {c}); }
  /// a*t0 + b*t1
  static HomogPoly linear(std::uint64_t a, std::uint64_t b) { return HomogPoly(1, {b, a}); }

  int degree() const { return deg_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  bool is_zero() const;
  /// Degree in t0 after setting t1 = 1; -1 for zero.
  int dehom_degree() const;
  FieldElement eval(const PrimeField& f, FieldElement t0, FieldElement t1) const;

  friend bool operator==(const HomogPoly&, const HomogPoly&) = default;

 private:
  int deg_;
  std::vector<std::uint64_t> c_;
};

HomogPoly hp_add(const PrimeField& f, const HomogPoly& a, const HomogPoly& b);
HomogPoly hp_sub(const PrimeField& f, const HomogPoly& a, const HomogPoly& b);
HomogPoly hp_mul(const PrimeField& f, const HomogPoly& a, const HomogPoly& b);
HomogPoly hp_scale(const PrimeField& f, const HomogPoly& a, FieldElement s);
HomogPoly hp_pow(const PrimeField& f, const HomogPoly& a, unsigned e);
/// Greatest common divisor, monic in the dehomogenized sense.
HomogPoly hp_gcd(const PrimeField& f, const HomogPoly& a, const HomogPoly& b);
/// Exact quotient; throws std::domain_error if b does not divide a.
HomogPoly hp_div_exact(const PrimeField& f, const HomogPoly& a, const HomogPoly& b);

/// num/den with both homogeneous of the same degree; that common degree is
/// the degree of the rational function on the line.
struct RationalPair {
  HomogPoly num, den;

  int degree() const { return num.degree(); }
  static RationalPair constant(FieldElement c) {
    return {HomogPoly::constant(c.value), HomogPoly::constant(1)};
  }
};

class ZeroDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

RationalPair pair_add(const PrimeField& f, const RationalPair& a, const RationalPair& b);
RationalPair pair_sub(const PrimeField& f, const RationalPair& a, const RationalPair& b);
RationalPair pair_mul(const PrimeField& f, const RationalPair& a, const RationalPair& b);
/// Throws ZeroDivision when b is the zero function.
RationalPair pair_div(const PrimeField& f, const RationalPair& a, const RationalPair& b);
/// Divide out gcd(num, den); a zero numerator becomes 0/1. Throws
/// ZeroDivision on a zero denominator.
RationalPair reduce(const PrimeField& f, const RationalPair& a);

}  // namespace quadent

#endif  // QUADENT_HOMOG_HPP
