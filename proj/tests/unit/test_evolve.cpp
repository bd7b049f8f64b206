#include <doctest.h>

#include "quadent/catalog.hpp"
#include "quadent/evolve.hpp"
#include "quadent/parser.hpp"

using namespace quadent;

namespace {

struct Setup {
  PreparedSystem sys;
  AdmissibilityReport adm;
};

Setup setup(const std::string& name) {
  PreparedSystem sys(parse_system(find_catalog_entry(name)->source));
  auto adm = admissibility_report(sys, PrimeField(), 1, 4);
  return {std::move(sys), std::move(adm)};
}

std::vector<std::vector<int>> degrees_of(const DegreeGrid& g) {
  std::vector<std::vector<int>> out;
  for (const auto& c : g.cells) out.push_back(c.degrees);
  return out;
}

}  // namespace

TEST_SUITE("evolve") {
  TEST_CASE("reduced cells are coprime") {
    for (const char* name : {"coupled-lpkdv", "lattice-nls", "lmkdv2"}) {
      auto s = setup(name);
      for (Direction d : s.adm.admissible()) {
        CAPTURE(name);
        CAPTURE(d.name());
        auto g = evolve_once(s.sys, *s.adm.at(d).update, StaircaseSpec::diagonal(d, 8), kDefaultPrime, 3, true);
        CHECK(g.max_residual_gcd == 0);
        CHECK_FALSE(g.truncated);
      }
    }
  }

  TEST_CASE("the same seed gives the same grid") {
    auto s = setup("lsg2");
    Direction d{1, -1};
    auto a = evolve_once(s.sys, *s.adm.at(d).update, StaircaseSpec::diagonal(d, 8), kDefaultPrime, 42);
    auto b = evolve_once(s.sys, *s.adm.at(d).update, StaircaseSpec::diagonal(d, 8), kDefaultPrime, 42);
    CHECK(degrees_of(a) == degrees_of(b));
    CHECK(derived_seed(42, 0) == 42);
    CHECK(derived_seed(42, 1) != derived_seed(42, 2));
  }

  TEST_CASE("degree sequences do not depend on seed or prime") {
    for (const char* name : {"coupled-lpkdv", "lmkdv2", "scalar-h1"}) {
      auto s = setup(name);
      for (Direction d : s.adm.admissible()) {
        std::optional<std::vector<std::vector<int>>> ref;
        for (std::uint64_t p : {kDefaultPrime, kAlternatePrime})
          for (std::uint64_t seed : std::vector<std::uint64_t>{1, 2, 3}) {
            EvolveOptions o;
            o.prime = p;
            o.seed = seed;
            auto g = evolve_degrees(s.sys, *s.adm.at(d).update, StaircaseSpec::diagonal(d, 10), o);
            auto seqs = extract_sequences(g);
            CHECK(seqs.shift_equivalent);
            std::vector<std::vector<int>> comps;
            for (std::size_t k = 0; k < s.sys.spec.M(); ++k) comps.push_back(seqs.component(k));
            if (!ref) ref = comps;
            CAPTURE(name);
            CAPTURE(d.name());
            CHECK(comps == *ref);
          }
      }
    }
  }

  TEST_CASE("extracted sequences start at the initial degree") {
    auto s = setup("coupled-lpkdv");
    Direction d{1, -1};
    auto g = evolve_once(s.sys, *s.adm.at(d).update, StaircaseSpec::diagonal(d, 6), kDefaultPrime, 1);
    auto seqs = extract_sequences(g);
    for (std::size_t k = 0; k < s.sys.spec.M(); ++k) {
      const auto& seq = seqs.component(k);
      REQUIRE(seq.size() == 7);
      CHECK(seq[0] == 1);
      for (std::size_t i = 1; i < seq.size(); ++i) CHECK(seq[i] >= seq[i - 1]);
    }
    CHECK(seqs.classes.front().ms.front() == 1);
  }

  TEST_CASE("a degree cap stops the sweep at a layer boundary") {
    auto s = setup("coupled-lpkdv");
    Direction d{1, -1};
    auto full = evolve_once(s.sys, *s.adm.at(d).update, StaircaseSpec::diagonal(d, 10), kDefaultPrime, 1);
    auto cut = evolve_once(s.sys, *s.adm.at(d).update, StaircaseSpec::diagonal(d, 10), kDefaultPrime, 1, false, 5);
    CHECK(cut.truncated);
    CHECK(cut.cells.size() < full.cells.size());
    int max_l = 0, over = 0;
    for (const auto& c : cut.cells) {
      max_l = std::max(max_l, c.l);
      for (int deg : c.degrees) over = std::max(over, deg);
    }
    CHECK(over > 5);
    for (const auto& c : cut.cells)
      if (c.l < max_l)
        for (int deg : c.degrees) CHECK(deg <= 5);
  }
}
