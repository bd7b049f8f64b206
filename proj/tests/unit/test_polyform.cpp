#include <doctest.h>

#include <random>

#include "quadent/catalog.hpp"
#include "quadent/parser.hpp"
#include "quadent/polyform.hpp"

using namespace quadent;

namespace {

// expr * den == num at random points, evaluated independently of the
// library's own verifier.
int agreeing_points(const ExprPtr& e, const PolyForm& pf, const VarLayout& lay, const PrimeField& f,
                    std::mt19937_64& rng, int wanted) {
  MPoly den = pf.den.expand(lay.nvars());
  int ok = 0;
  for (int attempt = 0; attempt < 20 * wanted && ok < wanted; ++attempt) {
    std::vector<FieldElement> pt(lay.nvars());
    for (auto& v : pt) v = f.random_nonzero(rng);
    auto v = evaluate(f, e, lay, pt);
    if (!v) continue;
    if (f.mul(*v, den.eval(f, pt)) != pf.num.eval(f, pt)) return -1;
    ++ok;
  }
  return ok;
}

}  // namespace

TEST_SUITE("polyform") {
  TEST_CASE("catalog equations agree with their cleared forms at 100 points") {
    PrimeField f;
    std::mt19937_64 rng(77);
    for (const auto& entry : catalog()) {
      auto s = parse_system(entry.source);
      VarLayout lay(s);
      for (const auto& eq : s.equations) {
        CAPTURE(entry.name);
        auto pf = to_poly_form(eq, lay);
        CHECK(agreeing_points(eq, pf, lay, f, rng, 100) == 100);
        CHECK(verify_poly_form(eq, pf, lay, f, rng, 100));
      }
    }
  }

  TEST_CASE("recorded field degrees match interpolated degrees") {
    PrimeField f;
    std::mt19937_64 rng(78);
    for (const auto& entry : catalog()) {
      auto s = parse_system(entry.source);
      VarLayout lay(s);
      for (const auto& eq : s.equations) {
        auto pf = to_poly_form(eq, lay);
        for (std::size_t v = 0; v < 4 * lay.M; ++v) {
          CAPTURE(entry.name);
          CAPTURE(v);
          CHECK(pf.field_degrees.at(v) == pf.num.degree_in(v));
          CHECK(observed_degree(pf.num, v, f, rng) == pf.num.degree_in(v));
        }
      }
    }
  }

  TEST_CASE("common factors cancel") {
    auto s = parse_system("fields x\n(x[0,0]^2 - x[1,1]^2)/(x[0,0] + x[1,1]) - x[1,0] + x[0,1] = 0;");
    VarLayout lay(s);
    auto pf = to_poly_form(s.equations[0], lay);
    CHECK(pf.den.expand(lay.nvars()).is_constant());
    CHECK(pf.num.total_degree() == 1);
  }

  TEST_CASE("nested fractions and negative powers") {
    auto s = parse_system("fields x\nparams p\n1/(1/x[0,0] + 1/x[1,1]) - p*x[1,0]^(-2)*x[0,1] = 0;");
    VarLayout lay(s);
    auto pf = to_poly_form(s.equations[0], lay);
    PrimeField f;
    std::mt19937_64 rng(3);
    CHECK(agreeing_points(s.equations[0], pf, lay, f, rng, 100) == 100);
  }

  TEST_CASE("identically zero denominators are rejected") {
    auto s = parse_system("fields x\nx[0,0]/(x[1,1] - x[1,1]) + x[1,0] = 0;");
    CHECK_THROWS_AS(to_poly_form(s.equations[0], VarLayout(s)), std::domain_error);
  }
}
