#ifndef QUADENT_REPORT_HPP
#define QUADENT_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace quadent {

inline constexpr int kReportSchema = 1;

struct FitReport {
  std::vector<std::string> P, Q;  // integer coefficients, ascending, Q[0] = 1
  int order = 0;
  int window = 0;
  int holdout = 0;
  int holdout_correct = 0;
  friend bool operator==(const FitReport&, const FitReport&) = default;
};

struct ClosedFormReport {
  int period = 1;
  int start = 0;
  int oscillation_degree = -1;
  std::vector<std::vector<std::string>> residues;  // rational coefficients in k, ascending
  std::string text;
  friend bool operator==(const ClosedFormReport&, const ClosedFormReport&) = default;
};

struct ComponentReport {
  std::string name;
  std::vector<long> sequence;
  bool fitted = false;
  FitReport fit;
  std::string growth;  // label, empty when no fit
  int poly_degree = 0;
  double entropy = 0.0;
  bool entropy_exact_zero = false;
  bool has_closed_form = false;
  ClosedFormReport closed_form;
  std::string error;
  friend bool operator==(const ComponentReport&, const ComponentReport&) = default;
};

/// Fixed-m sequences that are not shifts of the main one.
struct SequenceClassReport {
  std::vector<int> ms;
  std::vector<std::vector<long>> sequences;
  friend bool operator==(const SequenceClassReport&, const SequenceClassReport&) = default;
};

struct DirectionReport {
  std::string direction;
  int lambda1 = 1, lambda2 = 1, steps = 0;
  std::vector<std::uint64_t> seeds;  // one per trial
  std::vector<int> attempts;         // retries used per trial
  bool draws_agree = true;
  bool truncated = false;
  bool shift_equivalent = true;
  int max_residual_gcd = 0;
  std::vector<ComponentReport> components;
  std::vector<SequenceClassReport> other_classes;
  friend bool operator==(const DirectionReport&, const DirectionReport&) = default;
};

struct AdmissibilityEntry {
  std::string direction;
  std::string status;
  int rank = 0;
  std::string unknowns;             // e.g. "x[1,1], y[1,1]"
  std::vector<std::string> update;  // solved components, evaluation order
  friend bool operator==(const AdmissibilityEntry&, const AdmissibilityEntry&) = default;
};

struct PermutationReport {
  std::string from, to;
  std::vector<std::string> sigma;  // component of `to` matching each component of `from`
  friend bool operator==(const PermutationReport&, const PermutationReport&) = default;
};

struct IsotropyReport {
  std::string kind = "not applicable";
  std::vector<PermutationReport> permutations;
  friend bool operator==(const IsotropyReport&, const IsotropyReport&) = default;
};

/// Termwise chain lhs[0]_k < lhs[1]_k < ... over k_from..k_to.
struct CompareReport {
  std::string relation;
  std::vector<std::string> labels;
  int k_from = 0, k_to = 0;
  bool holds = false;
  int first_violation = -1;
  friend bool operator==(const CompareReport&, const CompareReport&) = default;
};

struct Report {
  int schema = kReportSchema;
  std::string system;
  std::string hash;
  std::string source;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  double tol = 0.0;
  std::vector<AdmissibilityEntry> admissibility;
  std::vector<DirectionReport> directions;
  IsotropyReport isotropy;
  std::vector<CompareReport> compare;
  std::map<std::string, double> timings;  // seconds; empty unless requested
  friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text);
std::string report_to_text(const Report& r);
std::string component_to_text(const ComponentReport& c);

/// 64-bit FNV-1a of a string, as 16 hex digits.
std::string fnv1a_hex(const std::string& s);

}  // namespace quadent

#endif  // QUADENT_REPORT_HPP
