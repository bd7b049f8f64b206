#ifndef QUADENT_LATTICE_HPP
#define QUADENT_LATTICE_HPP

#include <array>
#include <stdexcept>
#include <vector>

#include "quadent/solve.hpp"

namespace quadent {

struct Point {
  int a = 0, b = 0;  // lattice coordinates (l, m)
  friend bool operator==(Point, Point) = default;
  friend auto operator<=>(Point, Point) = default;
};

/// Regular staircase with N steps of horizontal size |lambda1| and height
/// |lambda2|, starting at the origin.
struct StaircaseSpec {
  int lambda1 = 1, lambda2 = -1;
  int N = 0;

  std::size_t point_count() const;
  /// The direction whose signs match (lambda1, lambda2).
  Direction direction() const { return {lambda1 > 0 ? 1 : -1, lambda2 > 0 ? 1 : -1}; }
  static StaircaseSpec diagonal(Direction d, int N) { return {d.d1, d.d2, N}; }
};

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered points: |lambda1| horizontal moves, then |lambda2| vertical
/// moves, repeated N times.
std::vector<Point> build_staircase(const StaircaseSpec& s);

struct RangeCell {
  Point target;
  Point base;      // x[0,0] corner of the quad that determines target
  int layer = 0;   // iteration index l, from 1
  int pos = 0;     // transversal index m within the layer, from 1
};

struct Range {
  StaircaseSpec stair;
  Direction dir;
  std::vector<Point> initial;
  /// Wavefront order: layer-major, then by m.
  std::vector<RangeCell> cells;
  int layers = 0;

  std::size_t layer_size(int layer) const;
};

/// Points computable from the staircase by repeatedly solving quads for the
/// corner `dir` points to, inside the bounding rectangle. Throws
/// GeometryError when `dir` does not match the staircase orientation.
Range build_range(const StaircaseSpec& s, Direction dir);

struct ScheduleEntry {
  Point target;
  std::array<Point, 3> sources;
};

/// Evaluation order; every source is initial data or an earlier target.
std::vector<ScheduleEntry> schedule(const Range& r);

}  // namespace quadent

#endif  // QUADENT_LATTICE_HPP
