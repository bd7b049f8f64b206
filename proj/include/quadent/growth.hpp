#ifndef QUADENT_GROWTH_HPP
#define QUADENT_GROWTH_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "quadent/solve.hpp"

namespace quadent {

using IntPoly = std::vector<mpz_class>;  // ascending powers of s
using RatPoly = std::vector<mpq_class>;

struct GeneratingFunctionFit {
  IntPoly P, Q;  // Q(0) = 1, gcd(P, Q) = 1
  int order = 0;          // linear complexity of the fitted window
  int window = 0;         // terms used for synthesis
  int holdout = 0;        // terms after the window
  int holdout_correct = 0;
};

/// Minimal linear recurrence over Q of the first two thirds of `seq`
/// (Berlekamp-Massey), validated against every remaining term. nullopt when
/// the sequence is shorter than 8 terms, no recurrence of order at most
/// |seq|/3 fits, or the prediction fails.
std::optional<GeneratingFunctionFit> fit_generating_function(const std::vector<mpz_class>& seq);
std::optional<GeneratingFunctionFit> fit_generating_function(const std::vector<long>& seq);

/// First n Taylor coefficients of P/Q (Q(0) = 1).
std::vector<mpz_class> expand_series(const IntPoly& P, const IntPoly& Q, std::size_t n);

enum class GrowthKind { Bounded, Linear, Polynomial, Exponential, Unclassified };

struct GrowthClass {
  GrowthKind kind = GrowthKind::Unclassified;
  int poly_degree = 0;  // d_k ~ k^poly_degree for Bounded/Linear/Polynomial
  double entropy = 0.0;
  bool entropy_exact_zero = false;
  /// Multiplicity of each cyclotomic factor Phi_d of Q, when Q is a
  /// product of them.
  std::map<int, int> cyclotomic;
  /// Q = (1-s)^beta0 * prod (1 - s^k) when such a split exists.
  std::optional<int> beta0;
  std::vector<int> unit_factors;
  double min_root_modulus = 1.0;

  std::string label() const;
};

class RootFindingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GrowthClass entropy_from_fit(const GeneratingFunctionFit& fit, double tol = 1e-9);

/// d_k = sum_j c_{k mod T, j} k^j for k >= start.
struct QuasiPolynomial {
  int period = 1;
  int start = 0;
  std::vector<RatPoly> residues;

  mpq_class eval(long k) const;
  /// Highest power of k whose coefficient varies with the residue; -1 when
  /// the form is a plain polynomial.
  int oscillation_degree() const;
  std::string to_string() const;
};

std::optional<QuasiPolynomial> closed_form(const GeneratingFunctionFit& fit);

std::string poly_to_string(const IntPoly& p);
std::string ratpoly_to_string(const RatPoly& p, const std::string& var = "k");

enum class IsotropyKind { NotApplicable, Anisotropic, PermutationallyIsotropic, Isotropic, StronglyIsotropic };

struct IsotropyClass {
  IsotropyKind kind = IsotropyKind::NotApplicable;
  /// For each ordered pair (i, j) of directions, sigma with
  /// seq[j][sigma[k]] == seq[i][k]; filled for the permutational case.
  std::vector<std::pair<std::pair<std::string, std::string>, std::vector<int>>> permutations;

  std::string label() const;
};

/// Sequences are compared on their common prefix.
IsotropyClass classify_isotropy(const std::vector<std::pair<Direction, std::vector<std::vector<long>>>>& seqs);

}  // namespace quadent

#endif  // QUADENT_GROWTH_HPP
