#ifndef QUADENT_EVOLVE_HPP
#define QUADENT_EVOLVE_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "quadent/homog.hpp"
#include "quadent/lattice.hpp"
#include "quadent/solve.hpp"

namespace quadent {

class DegenerateRun : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridCell {
  Point point;
  int l = 0, m = 0;  // l = 0 marks initial data
  std::vector<int> degrees;
};

struct DegreeGrid {
  Direction dir;
  StaircaseSpec stair;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  int attempt = 0;  // retries consumed before this run succeeded
  std::vector<GridCell> cells;
  /// Largest degree of gcd(num, den) seen after reduction; 0 when every
  /// cell is coprime.
  int max_residual_gcd = 0;
  /// Sweep stopped early at a layer boundary because of max_degree.
  bool truncated = false;
};

struct EvolveOptions {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  int max_attempts = 5;
  /// Recompute gcd(num, den) of every reduced cell.
  bool check_coprime = false;
  /// Stop after the first layer in which some degree exceeds this; 0 means
  /// no limit.
  int max_degree = 0;
};

/// Sweep the range of `stair` in direction `update.dir` with generic random
/// line initial data, parameters and arbitrary-function sequences.
/// Retries with derived seeds on DegenerateRun.
DegreeGrid evolve_degrees(const PreparedSystem& sys, const UpdateMap& update, const StaircaseSpec& stair,
                          const EvolveOptions& opts);

/// One attempt with exactly the given seed; throws DegenerateRun.
DegreeGrid evolve_once(const PreparedSystem& sys, const UpdateMap& update, const StaircaseSpec& stair,
                       std::uint64_t prime, std::uint64_t seed, bool check_coprime = false, int max_degree = 0);

/// Seed used for retry `attempt` (attempt 0 is the seed itself).
std::uint64_t derived_seed(std::uint64_t seed, int attempt);

struct SequenceClass {
  std::vector<int> ms;              // transversal indices sharing the sequence
  std::vector<std::vector<int>> seq;  // per component: 1, d_1, d_2, ...
};

struct ExtractedSequences {
  /// All fixed-m sequences agree where they overlap.
  bool shift_equivalent = true;
  std::vector<SequenceClass> classes;  // first class holds m = 1

  const std::vector<int>& component(std::size_t k) const { return classes.front().seq.at(k); }
};

ExtractedSequences extract_sequences(const DegreeGrid& g);

}  // namespace quadent

#endif  // QUADENT_EVOLVE_HPP
