#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

namespace orthograph {

// Axis directions, counterclockwise: East, North, West, South.
enum Dir : int { kEast = 0, kNorth = 1, kWest = 2, kSouth = 3 };

inline int opposite_dir(int d) { return d ^ 2; }
inline int rotate_ccw(int d, int k) { return (d + k) & 3; }
inline int dir_dx(int d) { return d == kEast ? 1 : d == kWest ? -1 : 0; }
inline int dir_dy(int d) { return d == kNorth ? 1 : d == kSouth ? -1 : 0; }

// Quarter turns of the corner between an edge arriving with direction
// `in_dir` and the next edge leaving with direction `out_dir`, measured
// inside the face on the left of the walk. Range 1..4.
inline int corner_quarter_turns(int in_dir, int out_dir) {
  int q = (in_dir - out_dir + 2) & 3;
  return q == 0 ? 4 : q;
}

// Walk turn contributed by a corner of q quarter turns: +1 convex, 0
// straight, -1 reflex, -2 full (degree-1 visit).
inline int turn_of_quarter_turns(int q) { return 2 - q; }

// Direction of the out-dart given the arriving direction and the corner.
inline int out_dir_of_corner(int in_dir, int q) { return (in_dir + 2 - q) & 3; }

struct Point {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b) {
    return std::tie(a.x, a.y) < std::tie(b.x, b.y);
  }
};

struct Drawing {
  // Coordinates per vertex id; polylines per edge id (endpoints included,
  // listed from the stored edge's first endpoint).
  std::vector<Point> vertex_pos;
  std::vector<std::vector<Point>> edge_polyline;

  Point bbox_min() const {
    Point lo{0, 0};
    bool first = true;
    for (const auto& p : vertex_pos) acc_min(lo, p, first);
    for (const auto& poly : edge_polyline)
      for (const auto& p : poly) acc_min(lo, p, first);
    return lo;
  }
  Point bbox_max() const {
    Point hi{0, 0};
    bool first = true;
    for (const auto& p : vertex_pos) acc_max(hi, p, first);
    for (const auto& poly : edge_polyline)
      for (const auto& p : poly) acc_max(hi, p, first);
    return hi;
  }
  // Translate so the bounding box starts at the origin.
  void normalize() {
    Point lo = bbox_min();
    for (auto& p : vertex_pos) { p.x -= lo.x; p.y -= lo.y; }
    for (auto& poly : edge_polyline)
      for (auto& p : poly) { p.x -= lo.x; p.y -= lo.y; }
  }

 private:
  static void acc_min(Point& lo, const Point& p, bool& first) {
    if (first) { lo = p; first = false; return; }
    lo.x = p.x < lo.x ? p.x : lo.x;
    lo.y = p.y < lo.y ? p.y : lo.y;
  }
  static void acc_max(Point& hi, const Point& p, bool& first) {
    if (first) { hi = p; first = false; return; }
    hi.x = p.x > hi.x ? p.x : hi.x;
    hi.y = p.y > hi.y ? p.y : hi.y;
  }
};

}  // namespace orthograph
