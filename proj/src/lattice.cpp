#include "quadent/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace quadent {

std::size_t StaircaseSpec::point_count() const {
  return static_cast<std::size_t>(N) * static_cast<std::size_t>(std::abs(lambda1) + std::abs(lambda2)) + 1;
}

std::vector<Point> build_staircase(const StaircaseSpec& s) {
  if (s.lambda1 == 0 || s.lambda2 == 0) throw GeometryError("staircase steps must be nonzero");
  if (s.N < 0) throw GeometryError("staircase must have N >= 0 steps");
  int h = s.lambda1 > 0 ? 1 : -1, v = s.lambda2 > 0 ? 1 : -1;
  std::vector<Point> pts{{0, 0}};
  Point p;
  for (int step = 0; step < s.N; ++step) {
    for (int k = 0; k < std::abs(s.lambda1); ++k) {
      p.a += h;
      pts.push_back(p);
    }
    for (int k = 0; k < std::abs(s.lambda2); ++k) {
      p.b += v;
      pts.push_back(p);
    }
  }
  return pts;
}

std::size_t Range::layer_size(int layer) const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [&](const RangeCell& c) { return c.layer == layer; }));
}

Range build_range(const StaircaseSpec& s, Direction dir) {
  Range r;
  r.stair = s;
  r.dir = dir;
  r.initial = build_staircase(s);
  if (!(s.direction() == dir)) {
    throw GeometryError("direction " + dir.name() + " does not match staircase orientation " +
                        s.direction().name());
  }
  // Evolution step from a known vertex towards the unknown corner.
  int sa = -dir.d1, sb = dir.d2;
  int amin = 0, amax = 0, bmin = 0, bmax = 0;
  for (Point p : r.initial) {
    amin = std::min(amin, p.a);
    amax = std::max(amax, p.a);
    bmin = std::min(bmin, p.b);
    bmax = std::max(bmax, p.b);
  }
  auto inside = [&](Point q) { return q.a >= amin && q.a <= amax && q.b >= bmin && q.b <= bmax; };
  std::set<Point> known(r.initial.begin(), r.initial.end());
  // Orders cells along the staircase, starting from its first point.
  auto along = [&](const Point& p, const Point& q) {
    int pa = p.a * (s.lambda1 > 0 ? 1 : -1), qa = q.a * (s.lambda1 > 0 ? 1 : -1);
    if (pa != qa) return pa < qa;
    return p.b * (s.lambda2 > 0 ? 1 : -1) < q.b * (s.lambda2 > 0 ? 1 : -1);
  };
  for (int layer = 1;; ++layer) {
    std::vector<Point> fresh;
    for (Point p : known) {
      Point q{p.a + sa, p.b + sb};
      if (!inside(q) || known.count(q)) continue;
      if (known.count({p.a + sa, p.b}) && known.count({p.a, p.b + sb})) fresh.push_back(q);
    }
    if (fresh.empty()) break;
    std::sort(fresh.begin(), fresh.end(), along);
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    int pos = 0;
    for (Point q : fresh) {
      Point base{std::min(q.a, q.a - sa), std::min(q.b, q.b - sb)};
      r.cells.push_back({q, base, layer, ++pos});
      known.insert(q);
    }
    r.layers = layer;
  }
  return r;
}

std::vector<ScheduleEntry> schedule(const Range& r) {
  std::vector<ScheduleEntry> out;
  out.reserve(r.cells.size());
  for (const auto& c : r.cells) {
    ScheduleEntry e{c.target, {}};
    int k = 0;
    for (int corner = 0; corner < 4; ++corner) {
      Point p{c.base.a + corner_i(corner), c.base.b + corner_j(corner)};
      if (p == c.target) continue;
      e.sources[k++] = p;
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace quadent
