#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "quadent/lattice.hpp"

using namespace quadent;

namespace {

// Closure of the staircase under "three corners of a quad known, fourth is
// the corner the direction points to", computed by sweeping the whole
// bounding box each round. Returns point -> round.
std::map<Point, int> brute_reach(const StaircaseSpec& s, Direction d) {
  auto init = build_staircase(s);
  int amin = 0, amax = 0, bmin = 0, bmax = 0;
  for (Point p : init) {
    amin = std::min(amin, p.a), amax = std::max(amax, p.a);
    bmin = std::min(bmin, p.b), bmax = std::max(bmax, p.b);
  }
  std::map<Point, int> known;
  for (Point p : init) known[p] = 0;
  int ci = d.d1 < 0 ? 1 : 0, cj = d.d2 > 0 ? 1 : 0;
  for (int round = 1;; ++round) {
    std::vector<Point> add;
    for (int a = amin; a <= amax; ++a)
      for (int b = bmin; b <= bmax; ++b) {
        Point q{a, b};
        if (known.count(q)) continue;
        Point base{a - ci, b - cj};
        int have = 0;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            if (!(i == ci && j == cj) && known.count({base.a + i, base.b + j})) ++have;
        if (have == 3) add.push_back(q);
      }
    if (add.empty()) break;
    for (Point q : add) known[q] = round;
  }
  return known;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("staircase point count and shape") {
    for (int l1 = -4; l1 <= 4; ++l1)
      for (int l2 = -4; l2 <= 4; ++l2) {
        if (!l1 || !l2) continue;
        for (int N = 0; N <= 8; ++N) {
          StaircaseSpec s{l1, l2, N};
          auto pts = build_staircase(s);
          REQUIRE(pts.size() == static_cast<std::size_t>(N * (std::abs(l1) + std::abs(l2)) + 1));
          CHECK(pts.size() == s.point_count());
          CHECK(pts.front() == Point{0, 0});
          CHECK(pts.back() == Point{N * l1, N * l2});
          for (std::size_t i = 1; i < pts.size(); ++i)
            CHECK(std::abs(pts[i].a - pts[i - 1].a) + std::abs(pts[i].b - pts[i - 1].b) == 1);
          CHECK(std::set<Point>(pts.begin(), pts.end()).size() == pts.size());
        }
      }
  }

  TEST_CASE("range equals brute-force reachability, layer by layer") {
    for (int l1 : {-3, -2, -1, 1, 2, 3})
      for (int l2 : {-3, -2, -1, 1, 2, 3})
        for (int N = 0; N <= 5; ++N) {
          StaircaseSpec s{l1, l2, N};
          Direction d = s.direction();
          CAPTURE(l1);
          CAPTURE(l2);
          CAPTURE(N);
          Range r = build_range(s, d);
          auto ref = brute_reach(s, d);
          std::size_t targets = 0;
          for (auto& [p, round] : ref) targets += round > 0;
          REQUIRE(r.cells.size() == targets);
          for (const auto& c : r.cells) {
            REQUIRE(ref.count(c.target));
            CHECK(ref.at(c.target) == c.layer);
          }
        }
  }

  TEST_CASE("schedule sources precede their targets") {
    for (Direction d : all_directions()) {
      StaircaseSpec s{2 * d.d1, 3 * d.d2, 4};
      Range r = build_range(s, d);
      std::set<Point> known(r.initial.begin(), r.initial.end());
      for (const auto& e : schedule(r)) {
        for (Point p : e.sources) CHECK(known.count(p));
        CHECK_FALSE(known.count(e.target));
        known.insert(e.target);
      }
    }
  }

  TEST_CASE("diagonal staircases have triangular layers") {
    for (Direction d : all_directions())
      for (int N = 1; N <= 7; ++N) {
        Range r = build_range(StaircaseSpec::diagonal(d, N), d);
        CHECK(r.layers == N);
        for (int k = 1; k <= N; ++k) CHECK(r.layer_size(k) == static_cast<std::size_t>(N - k + 1));
        for (const auto& c : r.cells) CHECK(c.pos >= 1);
      }
    Range r = build_range({1, 1, 3}, {1, 1});
    CHECK(r.cells.size() == 6);
    CHECK(r.layers == 3);
  }

  TEST_CASE("a [-2,1] staircase with three steps") {
    Range r = build_range({-2, 1, 3}, {-1, 1});
    CHECK(r.initial.size() == 10);
    CHECK(r.cells.size() == 12);
    CHECK(r.layers == 6);
  }

  TEST_CASE("degenerate and mismatched input") {
    CHECK(build_range({1, -1, 0}, {1, -1}).cells.empty());
    CHECK_THROWS_AS(build_range({1, -1, 3}, {-1, 1}), GeometryError);
    CHECK_THROWS_AS(build_staircase({0, 1, 3}), GeometryError);
    CHECK_THROWS_AS(build_staircase({1, 1, -1}), GeometryError);
  }
}
