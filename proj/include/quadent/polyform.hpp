#ifndef QUADENT_POLYFORM_HPP
#define QUADENT_POLYFORM_HPP

#include <random>
#include <utility>
#include <vector>

#include "quadent/expr.hpp"
#include "quadent/mpoly.hpp"

namespace quadent {

/// Denominator kept as c * prod f_i^{e_i} with primitive factors, so that
/// least common multiples are cheap and cancellation is exact.
struct FactoredDen {
  mpz_class constant = 1;
  std::vector<std::pair<MPoly, int>> factors;

  MPoly expand(std::size_t nvars) const;
};

/// Equation with denominators cleared: expr == num / den identically.
struct PolyForm {
  MPoly num;
  FactoredDen den;
  /// Degree of num in each field reference, indexed like VarLayout::field_var.
  std::vector<int> field_degrees;
};

/// Combine an expression into a single fraction and cancel common factors.
/// Throws std::domain_error when a denominator is identically zero.
PolyForm to_poly_form(const ExprPtr& e, const VarLayout& layout);

/// Check expr * den == num at `points` random points over GF(p). Points
/// where the expression itself is undefined are redrawn.
bool verify_poly_form(const ExprPtr& e, const PolyForm& pf, const VarLayout& layout, const PrimeField& f,
                      std::mt19937_64& rng, int points = 100);

/// Degree of p in `var` observed by univariate interpolation with all other
/// variables at random values (maximum over `trials`).
int observed_degree(const MPoly& p, std::size_t var, const PrimeField& f, std::mt19937_64& rng, int trials = 3);

}  // namespace quadent

#endif  // QUADENT_POLYFORM_HPP
