#ifndef QUADENT_PIPELINE_HPP
#define QUADENT_PIPELINE_HPP

#include <optional>
#include <string>

#include "quadent/catalog.hpp"
#include "quadent/evolve.hpp"
#include "quadent/growth.hpp"
#include "quadent/report.hpp"

namespace quadent {

struct AnalyzeOptions {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  int trials = 3;
  /// Diagonal staircase length; the catalog default (or 16) when unset.
  std::optional<int> steps;
  /// Restrict evolution to one direction with a diagonal staircase.
  std::optional<Direction> diagonal;
  /// Restrict evolution to the direction of this staircase.
  std::optional<StaircaseSpec> staircase;
  double tol = 1e-9;
  int rank_trials = 4;
  int max_degree = 4096;
  bool check_coprime = false;
  bool timings = false;
};

struct SystemInput {
  std::string name;
  std::string source;
  const CatalogEntry* entry = nullptr;
};

/// Throws std::invalid_argument for unknown names.
SystemInput load_catalog(const std::string& name);
/// Throws std::runtime_error when the file cannot be read.
SystemInput load_file(const std::string& path);

class NoAdmissibleDirection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<AdmissibilityEntry> describe_admissibility(const PreparedSystem& sys, const AdmissibilityReport& rep);

struct DirectionRun {
  Direction dir;
  StaircaseSpec stair;
  std::vector<DegreeGrid> grids;  // one per trial
  ExtractedSequences sequences;   // of the first trial
  bool draws_agree = true;
};

/// Evolve `trials` independent draws of the staircase and compare their
/// sequences.
DirectionRun run_direction(const PreparedSystem& sys, const UpdateMap& update, const StaircaseSpec& stair,
                           const AnalyzeOptions& opts);

/// Fit, entropy and closed form for one integer sequence.
ComponentReport analyze_sequence(const std::string& name, const std::vector<long>& seq, double tol);

/// Staircases evolved by analyze for the given admissible directions.
std::vector<StaircaseSpec> planned_staircases(const std::vector<Direction>& admissible, const SystemInput& in,
                                              const AnalyzeOptions& opts);

/// Full pipeline. An empty directions section signals that no requested
/// direction is admissible.
Report analyze(const SystemInput& in, const AnalyzeOptions& opts);

/// `l,m,component,degree` rows.
std::string grid_to_csv(const DegreeGrid& g, const QuadSystemSpec& spec);

std::vector<long> to_long(const std::vector<int>& v);

}  // namespace quadent

#endif  // QUADENT_PIPELINE_HPP
