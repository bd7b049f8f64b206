#ifndef QUADENT_SOLVE_HPP
#define QUADENT_SOLVE_HPP

#include <array>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadent/expr.hpp"
#include "quadent/mpoly.hpp"
#include "quadent/polyform.hpp"

namespace quadent {

/// Direction of evolution (delta1, delta2), each +1 or -1. It is paired with
/// the staircase [lambda1, lambda2] of the same signs, and the unknown
/// vertex is the quad corner the evolution moves into:
///   (+,-) -> x[0,0],  (-,+) -> x[1,1],  (+,+) -> x[0,1],  (-,-) -> x[1,0].
struct Direction {
  int d1 = 1, d2 = 1;

  int unknown_corner() const { return corner_index(d1 < 0 ? 1 : 0, d2 > 0 ? 1 : 0); }
  std::string name() const { return std::string(d1 > 0 ? "+" : "-") + (d2 > 0 ? "+" : "-"); }
  static Direction parse(const std::string& s);
  friend bool operator==(Direction, Direction) = default;
};

/// Fixed reporting order: ++, +-, -+, --.
const std::array<Direction, 4>& all_directions();

/// A system with every equation converted to cleared polynomial form.
struct PreparedSystem {
  QuadSystemSpec spec;
  VarLayout layout;
  std::vector<PolyForm> forms;

  explicit PreparedSystem(QuadSystemSpec s);
};

/// u = -B/A. A and B may involve unknowns solved by later steps.
struct UpdateStep {
  std::size_t component = 0;
  std::size_t equation = 0;
  MPoly A, B;
};

struct UpdateMap {
  Direction dir;
  int corner = 0;
  /// Elimination order; evaluate back to front.
  std::vector<UpdateStep> steps;
};

enum class AdmissibilityStatus { Admissible, RankDeficient, NoLinearElimination };

std::string to_string(AdmissibilityStatus s);

struct DirectionResult {
  Direction dir;
  AdmissibilityStatus status = AdmissibilityStatus::RankDeficient;
  int rank = 0;
  std::optional<UpdateMap> update;
};

struct AdmissibilityReport {
  std::vector<DirectionResult> directions;

  std::vector<Direction> admissible() const;
  const DirectionResult& at(Direction d) const;
};

class IllPosedSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maximum rank over `trials` random specializations of the Jacobian of the
/// cleared equations with respect to the unknown corner. Throws
/// IllPosedSystem when every specialization hits a vanishing denominator.
int jacobian_rank(const PreparedSystem& sys, Direction dir, int trials, const PrimeField& f, std::mt19937_64& rng);

/// Linear-elimination search for a rational solution. Deterministic:
/// equations in declaration order, then unknowns in field order.
std::optional<UpdateMap> solve_direction(const PreparedSystem& sys, Direction dir);

AdmissibilityReport admissibility_report(const PreparedSystem& sys, const PrimeField& f, std::uint64_t seed,
                                         int rank_trials = 4);

/// Evaluate the map at a point; fills the unknown corner's slots in `point`.
/// Returns false when some A vanishes there.
bool apply_update(const UpdateMap& u, const PrimeField& f, std::vector<FieldElement>& point);

/// Substitute the map into every equation at `points` random points.
bool verify_update(const PreparedSystem& sys, const UpdateMap& u, const PrimeField& f, std::mt19937_64& rng,
                   int points = 20);

}  // namespace quadent

#endif  // QUADENT_SOLVE_HPP
