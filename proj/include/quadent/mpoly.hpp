#ifndef QUADENT_MPOLY_HPP
#define QUADENT_MPOLY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "quadent/field.hpp"

namespace quadent {

using Monomial = std::vector<std::uint16_t>;

/// Sparse multivariate polynomial with integer coefficients in a fixed
/// number of variables. Terms are kept in lexicographic order; the leading
/// term is the lexicographically largest monomial.
class MPoly {
 public:
  using TermMap = std::map<Monomial, mpz_class>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const mpz_class& c);
  static MPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const mpz_class& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly scaled(const mpz_class& c) const;
  MPoly pow(unsigned e) const;
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Exact division; nullopt when `d` does not divide this polynomial.
  std::optional<MPoly> divide_exact(const MPoly& d) const;

  int degree_in(std::size_t var) const;
  int total_degree() const;
  /// Coefficient of var^k, as a polynomial in the remaining variables.
  MPoly coeff_in(std::size_t var, int k) const;
  MPoly derivative(std::size_t var) const;
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

  mpz_class content() const;
  /// Componentwise minimum exponent over all terms.
  Monomial monomial_content() const;
  /// Divide by a monomial that divides every term.
  MPoly divide_monomial(const Monomial& m) const;
  /// Content removed and leading coefficient made positive.
  MPoly primitive() const;

  FieldElement eval(const PrimeField& f, const std::vector<FieldElement>& point) const;

  /// Human-readable form; `name(i)` supplies variable names.
  std::string to_string(const std::function<std::string(std::size_t)>& name) const;

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

}  // namespace quadent

#endif  // QUADENT_MPOLY_HPP
