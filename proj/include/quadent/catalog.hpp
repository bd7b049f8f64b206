#ifndef QUADENT_CATALOG_HPP
#define QUADENT_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "quadent/solve.hpp"

namespace quadent {

/// Published rational generating function P/Q, coefficients in ascending
/// powers of s with Q(0) = 1.
struct ExpectedFit {
  std::vector<long> P, Q;
};

struct ExpectedDirection {
  Direction dir;
  /// Published per-component prefixes (may be empty when only a growth
  /// class is known).
  std::vector<std::vector<long>> sequences;
  std::vector<ExpectedFit> fits;
  /// Per component: rational coefficients of d_k in ascending powers of k.
  std::vector<std::vector<std::string>> closed_forms;
  std::string growth;                     // "linear", "quadratic", ...
};

struct CatalogEntry {
  std::string name;
  std::string title;
  std::string source;  // system DSL
  std::string reference;
  std::vector<Direction> admissible;
  std::string isotropy;  // expected classification label
  std::vector<ExpectedDirection> expected;
  /// Staircase steps for analysis; longer for fits needing more terms.
  int steps = 16;
  /// Directions whose solution pair is listed as algebraic.
  std::vector<Direction> algebraic;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_catalog_entry(const std::string& name);

}  // namespace quadent

#endif  // QUADENT_CATALOG_HPP
