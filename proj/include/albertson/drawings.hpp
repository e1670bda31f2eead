#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "albertson/graph.hpp"
#include "albertson/rational.hpp"

namespace albertson {

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point &a, const Point &b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point &a, const Point &b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

using Polyline = std::vector<Point>;

struct RoutedEdge {
  int u = 0, v = 0;  // u < v
  Polyline polyline;  // front() at points[u], back() at points[v]
};

/// A drawing with exact rational coordinates. Edges are polylines; the
/// validator enforces the good-drawing conditions (no overlaps, no route
/// through a foreign vertex, no triple points, adjacent edges never cross,
/// every route-route crossing transversal).
struct Drawing {
  Graph host;
  std::vector<Point> points;
  std::vector<RoutedEdge> routes;  // sorted by (u, v)
};

enum class ViolationKind {
  MissingRoute,
  EndpointMismatch,
  DegenerateSegment,
  VertexOnEdge,
  Overlap,
  SelfIntersection,
  NonTransversalTouch,
  AdjacentCross,
  TriplePoint,
};

const char *violation_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::pair<int, int> edge_a{-1, -1};
  std::pair<int, int> edge_b{-1, -1};
  Point where;
  std::string detail;
};

struct ValidationResult {
  bool ok = false;
  std::vector<Violation> violations;
};

ValidationResult validate_drawing(const Drawing &d);

class DrawingInvalid : public std::runtime_error {
 public:
  DrawingInvalid(std::string msg, std::vector<Violation> v)
      : std::runtime_error(std::move(msg)), violations(std::move(v)) {}
  std::vector<Violation> violations;
};

struct CrossingCount {
  long long total = 0;
  // Nonzero entries only, keyed by the two edges (each as (u,v), u < v).
  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, long long> per_pair;
};

/// Exact transversal crossing count between routes of non-adjacent edges.
/// Throws DrawingInvalid if validate_drawing reports violations.
CrossingCount count_crossings(const Drawing &d);

/// The two-concentric-circles drawing of K_n: ceil(n/2) vertices equally
/// spaced on the outer circle, floor(n/2) on the inner circle with a
/// half-step angular offset. Inner edges are near-straight chords, outer
/// edges ride nested arcs outside the outer circle, and outer-inner edges
/// follow cylinder geodesics (wrap displacement in (-1/2, 1/2] turns, ties
/// toward the positive direction). Coordinates are snapped to a rational
/// grid and the result is validated exactly; on validation failure the
/// construction retries with a finer discretization and grid.
Drawing cylindrical_drawing(int n);

/// Crossing count of the same drawing computed with no geometry at all:
/// interleaving chord pairs on each circle plus the winding rule for
/// geodesic annulus edges. Independent of count_crossings by design.
long long cylindrical_count(int n);

/// Display-only SVG rendering of a drawing.
std::string to_svg(const Drawing &d);

}  // namespace albertson
