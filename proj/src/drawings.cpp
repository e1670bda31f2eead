#include "albertson/drawings.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace albertson {

namespace {

int sign(const Rational &q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

int orient(const Point &a, const Point &b, const Point &c) {
  const Rational det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sign(det);
}

bool in_box(const Point &p, const Point &a, const Point &b) {
  const Rational &xlo = a.x < b.x ? a.x : b.x;
  const Rational &xhi = a.x < b.x ? b.x : a.x;
  const Rational &ylo = a.y < b.y ? a.y : b.y;
  const Rational &yhi = a.y < b.y ? b.y : a.y;
  return xlo <= p.x && p.x <= xhi && ylo <= p.y && p.y <= yhi;
}

bool on_segment(const Point &p, const Point &a, const Point &b) {
  return orient(a, b, p) == 0 && in_box(p, a, b);
}

enum class SegRel { None, Proper, Touch, Overlap };

struct SegHit {
  SegRel rel = SegRel::None;
  Point at;  // meaningful for Proper and Touch
};

Point proper_intersection(const Point &a, const Point &b, const Point &c, const Point &d) {
  const Rational denom = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
  const Rational t = ((c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x)) / denom;
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

SegHit classify_segments(const Point &a, const Point &b, const Point &c, const Point &d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  SegHit hit;
  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    // Collinear: compare 1-D intervals along the dominant axis.
    const bool use_x = a.x != b.x || c.x != d.x;
    auto coord = [use_x](const Point &p) { return use_x ? p.x : p.y; };
    Rational lo1 = std::min(coord(a), coord(b)), hi1 = std::max(coord(a), coord(b));
    Rational lo2 = std::min(coord(c), coord(d)), hi2 = std::max(coord(c), coord(d));
    Rational lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (lo > hi) return hit;
    if (lo < hi) {
      hit.rel = SegRel::Overlap;
      hit.at = coord(a) == lo ? a : (coord(b) == lo ? b : (coord(c) == lo ? c : d));
      return hit;
    }
    hit.rel = SegRel::Touch;
    hit.at = coord(a) == lo ? a : (coord(b) == lo ? b : (coord(c) == lo ? c : d));
    return hit;
  }
  if (o1 * o2 < 0 && o3 * o4 < 0) {
    hit.rel = SegRel::Proper;
    hit.at = proper_intersection(a, b, c, d);
    return hit;
  }
  if (o1 == 0 && in_box(c, a, b)) {
    hit.rel = SegRel::Touch;
    hit.at = c;
  } else if (o2 == 0 && in_box(d, a, b)) {
    hit.rel = SegRel::Touch;
    hit.at = d;
  } else if (o3 == 0 && in_box(a, c, d)) {
    hit.rel = SegRel::Touch;
    hit.at = a;
  } else if (o4 == 0 && in_box(b, c, d)) {
    hit.rel = SegRel::Touch;
    hit.at = b;
  }
  return hit;
}

double lo_d(const Rational &q) { return q.convert_to<double>() - 1e-9; }
double hi_d(const Rational &q) { return q.convert_to<double>() + 1e-9; }

struct SegRec {
  const Point *a;
  const Point *b;
  double x0, x1, y0, y1;
};

struct RouteRec {
  int u, v;
  std::vector<SegRec> segs;
  double x0, x1, y0, y1;
};

bool boxes_meet(double ax0, double ax1, double ay0, double ay1, double bx0, double bx1,
                double by0, double by1) {
  return ax0 <= bx1 && bx0 <= ax1 && ay0 <= by1 && by0 <= ay1;
}

struct Analysis {
  std::vector<Violation> violations;
  // One entry per transversal crossing between routes of distinct edges.
  struct Crossing {
    std::pair<int, int> e, f;
    Point at;
  };
  std::vector<Crossing> crossings;
};

Analysis analyze(const Drawing &d) {
  Analysis out;
  const int n = d.host.vertex_count();
  auto edge_str = [](std::pair<int, int> e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
  };
  auto add = [&out](ViolationKind kind, std::pair<int, int> ea, std::pair<int, int> eb,
                    Point where, std::string detail) {
    out.violations.push_back({kind, ea, eb, std::move(where), std::move(detail)});
  };

  if (static_cast<int>(d.points.size()) != n) {
    add(ViolationKind::MissingRoute, {-1, -1}, {-1, -1}, Point{},
        "points size does not match host order");
    return out;
  }

  // Route set must be exactly the host's edge set.
  {
    std::set<std::pair<int, int>> seen;
    for (const auto &r : d.routes) {
      if (r.u < 0 || r.v < 0 || r.u >= n || r.v >= n || r.u >= r.v || !d.host.adjacent(r.u, r.v) ||
          !seen.insert({r.u, r.v}).second) {
        add(ViolationKind::MissingRoute, {r.u, r.v}, {-1, -1}, Point{},
            "route edge " + edge_str({r.u, r.v}) + " invalid or duplicated");
      }
    }
    if (static_cast<long long>(seen.size()) != d.host.edge_count())
      add(ViolationKind::MissingRoute, {-1, -1}, {-1, -1}, Point{},
          "drawing does not route every host edge");
  }
  if (!out.violations.empty()) return out;

  // Endpoint and degeneracy checks.
  for (const auto &r : d.routes) {
    const std::pair<int, int> e{r.u, r.v};
    if (r.polyline.size() < 2) {
      add(ViolationKind::EndpointMismatch, e, {-1, -1}, Point{}, "route has fewer than 2 points");
      continue;
    }
    if (!(r.polyline.front() == d.points[r.u]) || !(r.polyline.back() == d.points[r.v]))
      add(ViolationKind::EndpointMismatch, e, {-1, -1}, r.polyline.front(),
          "route does not start/end at its vertices");
    for (std::size_t i = 0; i + 1 < r.polyline.size(); ++i)
      if (r.polyline[i] == r.polyline[i + 1])
        add(ViolationKind::DegenerateSegment, e, {-1, -1}, r.polyline[i],
            "zero-length segment at index " + std::to_string(i));
  }
  if (!out.violations.empty()) return out;

  // Spatial records with double bounding boxes for cheap rejection.
  std::vector<RouteRec> recs;
  recs.reserve(d.routes.size());
  for (const auto &r : d.routes) {
    RouteRec rec;
    rec.u = r.u;
    rec.v = r.v;
    rec.x0 = rec.y0 = 1e300;
    rec.x1 = rec.y1 = -1e300;
    for (std::size_t i = 0; i + 1 < r.polyline.size(); ++i) {
      const Point &a = r.polyline[i];
      const Point &b = r.polyline[i + 1];
      SegRec s{&a, &b,
               std::min(lo_d(a.x), lo_d(b.x)), std::max(hi_d(a.x), hi_d(b.x)),
               std::min(lo_d(a.y), lo_d(b.y)), std::max(hi_d(a.y), hi_d(b.y))};
      rec.x0 = std::min(rec.x0, s.x0);
      rec.x1 = std::max(rec.x1, s.x1);
      rec.y0 = std::min(rec.y0, s.y0);
      rec.y1 = std::max(rec.y1, s.y1);
      rec.segs.push_back(s);
    }
    recs.push_back(std::move(rec));
  }

  // No route may pass through a vertex other than its own endpoints, and
  // through those only at the route ends.
  for (std::size_t ri = 0; ri < recs.size(); ++ri) {
    const RouteRec &rec = recs[ri];
    const std::pair<int, int> e{rec.u, rec.v};
    for (int w = 0; w < n; ++w) {
      const Point &pw = d.points[w];
      const double wx = pw.x.convert_to<double>(), wy = pw.y.convert_to<double>();
      if (!boxes_meet(rec.x0, rec.x1, rec.y0, rec.y1, wx, wx, wy, wy)) continue;
      for (std::size_t si = 0; si < rec.segs.size(); ++si) {
        const SegRec &s = rec.segs[si];
        if (wx < s.x0 || wx > s.x1 || wy < s.y0 || wy > s.y1) continue;
        if (!on_segment(pw, *s.a, *s.b)) continue;
        const bool at_start = w == rec.u && si == 0 && pw == *s.a;
        const bool at_end = w == rec.v && si + 1 == rec.segs.size() && pw == *s.b;
        if (!at_start && !at_end)
          add(ViolationKind::VertexOnEdge, e, {-1, -1}, pw,
              "route passes through vertex " + std::to_string(w));
      }
    }
  }

  // Same-route simplicity: consecutive segments share exactly their joint,
  // non-consecutive segments are disjoint.
  for (const RouteRec &rec : recs) {
    const std::pair<int, int> e{rec.u, rec.v};
    for (std::size_t i = 0; i < rec.segs.size(); ++i)
      for (std::size_t j = i + 1; j < rec.segs.size(); ++j) {
        const SegRec &s = rec.segs[i];
        const SegRec &t = rec.segs[j];
        if (!boxes_meet(s.x0, s.x1, s.y0, s.y1, t.x0, t.x1, t.y0, t.y1)) continue;
        SegHit hit = classify_segments(*s.a, *s.b, *t.a, *t.b);
        if (hit.rel == SegRel::None) continue;
        if (j == i + 1) {
          if (hit.rel == SegRel::Overlap)
            add(ViolationKind::Overlap, e, e, hit.at, "consecutive segments overlap");
          else if (!(hit.rel == SegRel::Touch && hit.at == *t.a))
            add(ViolationKind::SelfIntersection, e, e, hit.at,
                "consecutive segments meet off their joint");
        } else {
          add(hit.rel == SegRel::Overlap ? ViolationKind::Overlap : ViolationKind::SelfIntersection,
              e, e, hit.at, "route is not a simple curve");
        }
      }
  }

  // Pairwise route checks.
  for (std::size_t ri = 0; ri < recs.size(); ++ri) {
    for (std::size_t rj = ri + 1; rj < recs.size(); ++rj) {
      const RouteRec &re = recs[ri];
      const RouteRec &rf = recs[rj];
      if (!boxes_meet(re.x0, re.x1, re.y0, re.y1, rf.x0, rf.x1, rf.y0, rf.y1)) continue;
      const std::pair<int, int> e{re.u, re.v};
      const std::pair<int, int> f{rf.u, rf.v};
      int shared = -1;
      if (re.u == rf.u || re.u == rf.v) shared = re.u;
      if (re.v == rf.u || re.v == rf.v) shared = re.v;
      for (const SegRec &s : re.segs) {
        for (const SegRec &t : rf.segs) {
          if (!boxes_meet(s.x0, s.x1, s.y0, s.y1, t.x0, t.x1, t.y0, t.y1)) continue;
          SegHit hit = classify_segments(*s.a, *s.b, *t.a, *t.b);
          switch (hit.rel) {
            case SegRel::None:
              break;
            case SegRel::Overlap:
              add(ViolationKind::Overlap, e, f, hit.at, "routes overlap in a segment");
              break;
            case SegRel::Proper:
              if (shared >= 0)
                add(ViolationKind::AdjacentCross, e, f, hit.at, "adjacent edges cross");
              else
                out.crossings.push_back({e, f, hit.at});
              break;
            case SegRel::Touch:
              if (shared >= 0 && hit.at == d.points[shared]) break;  // meeting at the shared vertex
              add(ViolationKind::NonTransversalTouch, e, f, hit.at,
                  "routes " + edge_str(e) + " and " + edge_str(f) + " touch non-transversally");
              break;
          }
        }
      }
    }
  }

  // No three routes through one interior point.
  {
    std::map<Point, std::set<std::pair<int, int>>> at_point;
    for (const auto &c : out.crossings) {
      auto &edges = at_point[c.at];
      edges.insert(c.e);
      edges.insert(c.f);
    }
    for (const auto &[pt, edges] : at_point)
      if (edges.size() >= 3)
        add(ViolationKind::TriplePoint, *edges.begin(), *std::next(edges.begin()), pt,
            std::to_string(edges.size()) + " edges through one point");
  }

  return out;
}

}  // namespace

const char *violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::MissingRoute: return "MISSING_ROUTE";
    case ViolationKind::EndpointMismatch: return "ENDPOINT_MISMATCH";
    case ViolationKind::DegenerateSegment: return "DEGENERATE_SEGMENT";
    case ViolationKind::VertexOnEdge: return "VERTEX_ON_EDGE";
    case ViolationKind::Overlap: return "OVERLAP";
    case ViolationKind::SelfIntersection: return "SELF_INTERSECTION";
    case ViolationKind::NonTransversalTouch: return "NON_TRANSVERSAL_TOUCH";
    case ViolationKind::AdjacentCross: return "ADJACENT_CROSS";
    case ViolationKind::TriplePoint: return "TRIPLE_POINT";
  }
  return "?";
}

ValidationResult validate_drawing(const Drawing &d) {
  Analysis a = analyze(d);
  return {a.violations.empty(), std::move(a.violations)};
}

CrossingCount count_crossings(const Drawing &d) {
  Analysis a = analyze(d);
  if (!a.violations.empty())
    throw DrawingInvalid("count_crossings: drawing failed validation (" +
                             std::string(violation_name(a.violations.front().kind)) + ": " +
                             a.violations.front().detail + ")",
                         std::move(a.violations));
  CrossingCount count;
  for (const auto &c : a.crossings) {
    ++count.total;
    ++count.per_pair[{std::min(c.e, c.f), std::max(c.e, c.f)}];
  }
  return count;
}

namespace {

// Wrap of to - from into (-1/2, 1/2] turns; exact, ties toward +1/2.
Rational wrap_displacement(const Rational &from, const Rational &to) {
  const Rational d = to - from;
  // The unique integer k with d - k in (-1/2, 1/2] is ceil(d - 1/2).
  return d - rat_ceil(d - Rational(1, 2));
}

struct CylLayout {
  int n, p, q;
  std::vector<Rational> outer_turn;  // exact vertex angles in turns
  std::vector<Rational> inner_turn;
};

CylLayout cyl_layout(int n) {
  CylLayout lay;
  lay.n = n;
  lay.p = (n + 1) / 2;
  lay.q = n / 2;
  for (int i = 0; i < lay.p; ++i) lay.outer_turn.push_back(Rational(i, lay.p));
  for (int j = 0; j < lay.q; ++j) lay.inner_turn.push_back(Rational(2 * j + 1, 2 * lay.q));
  return lay;
}

struct OuterArc {
  int i, j;           // i < j, outer indices
  Rational span;      // shorter angular width, in turns
  double start, end;  // ccw turn interval, end - start == span
  bool from_i;        // interval starts at vertex i (else at j)
  int rank = 0;
  double radius = 0, lambda = 0;
};

// Exact count of integers k with (k - d0)/s strictly inside (0,1); this is
// the number of times two cylinder geodesics with start gap d0 and slope
// gap s meet.
long long geodesic_meet_count(const Rational &d0, const Rational &s) {
  if (s == 0) return 0;
  const Rational lo = std::min(d0, d0 + s);
  const Rational hi = std::max(d0, d0 + s);
  const Int count = rat_ceil(hi) - rat_floor(lo) - 1;
  return count > 0 ? to_int64(count) : 0;
}

bool cyclic_interleaved(int a1, int b1, int a2, int b2, int n) {
  // All distinct positions on a cycle 0..n-1. Walk ccw from a1 to b1 and
  // count which of a2, b2 shows up; interleaved iff exactly one does.
  int inside = 0;
  for (int x = (a1 + 1) % n; x != b1; x = (x + 1) % n)
    if (x == a2 || x == b2) ++inside;
  return inside == 1;
}

constexpr double kTau = 2.0 * std::numbers::pi;

}  // namespace

long long cylindrical_count(int n) {
  if (n < 3) throw std::invalid_argument("cylindrical_count: need n >= 3");
  const CylLayout lay = cyl_layout(n);
  long long total = 0;

  // Chord-style crossings on each circle: interleaving endpoint pairs.
  auto circle_pairs = [&total](int count) {
    for (int a1 = 0; a1 < count; ++a1)
      for (int b1 = a1 + 1; b1 < count; ++b1)
        for (int a2 = a1; a2 < count; ++a2)
          for (int b2 = a2 + 1; b2 < count; ++b2) {
            if (std::make_pair(a2, b2) <= std::make_pair(a1, b1)) continue;
            if (a2 == a1 || a2 == b1 || b2 == a1 || b2 == b1) continue;
            if (cyclic_interleaved(a1, b1, a2, b2, count)) ++total;
          }
  };
  circle_pairs(lay.p);
  circle_pairs(lay.q);

  // Annulus geodesics: edge (a, x) leaves outer angle a/p and winds by the
  // wrapped displacement to the inner angle.
  std::vector<std::vector<Rational>> delta(lay.p, std::vector<Rational>(lay.q));
  for (int a = 0; a < lay.p; ++a)
    for (int x = 0; x < lay.q; ++x)
      delta[a][x] = wrap_displacement(lay.outer_turn[a], lay.inner_turn[x]);
  for (int a = 0; a < lay.p; ++a)
    for (int b = a + 1; b < lay.p; ++b)
      for (int x = 0; x < lay.q; ++x)
        for (int y = 0; y < lay.q; ++y) {
          if (x == y) continue;
          const Rational d0 = lay.outer_turn[a] - lay.outer_turn[b];
          const Rational s = delta[a][x] - delta[b][y];
          total += geodesic_meet_count(d0, s);
        }
  return total;
}

namespace {

Rational snap(double v, long long den) {
  return Rational(Int(std::llround(v * static_cast<double>(den))), Int(den));
}

Point snap_pt(double x, double y, long long den) { return {snap(x, den), snap(y, den)}; }

Drawing build_cylindrical(int n, int spiral_segments, long long den) {
  const CylLayout lay = cyl_layout(n);
  const int p = lay.p, q = lay.q;
  Drawing d;
  d.host = make_complete(n);
  d.points.resize(n);
  std::vector<double> outer_t(p), inner_t(q);
  for (int i = 0; i < p; ++i) {
    outer_t[i] = lay.outer_turn[i].convert_to<double>();
    d.points[i] = snap_pt(std::cos(kTau * outer_t[i]), std::sin(kTau * outer_t[i]), den);
  }
  for (int j = 0; j < q; ++j) {
    inner_t[j] = lay.inner_turn[j].convert_to<double>();
    d.points[p + j] =
        snap_pt(0.5 * std::cos(kTau * inner_t[j]), 0.5 * std::sin(kTau * inner_t[j]), den);
  }

  // Outer-outer edges: nested arcs outside the unit circle. Longer angular
  // span rides a larger radius; launch segments slant into the arc's own
  // span, with a tilt that shrinks as the radius grows so edges sharing a
  // vertex peel off in order.
  std::vector<OuterArc> arcs;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      OuterArc arc;
      arc.i = i;
      arc.j = j;
      const Rational fwd(j - i, p);  // ccw distance i -> j
      if (fwd <= Rational(1, 2)) {   // tie goes ccw from the lower label
        arc.span = fwd;
        arc.from_i = true;
        arc.start = outer_t[i];
        arc.end = outer_t[i] + arc.span.convert_to<double>();
      } else {
        arc.span = Rational(1) - fwd;
        arc.from_i = false;
        arc.start = outer_t[j];
        arc.end = outer_t[j] + arc.span.convert_to<double>();
      }
      arcs.push_back(arc);
    }
  std::sort(arcs.begin(), arcs.end(), [](const OuterArc &a, const OuterArc &b) {
    if (a.span != b.span) return a.span < b.span;
    return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
  });
  const int n_arcs = static_cast<int>(arcs.size());
  for (int k = 0; k < n_arcs; ++k) {
    arcs[k].rank = k;
    arcs[k].radius = 1.0 + (k + 1) / 8.0;
    arcs[k].lambda = (static_cast<double>(n_arcs - k) / (n_arcs + 1)) / (4.0 * p);
  }

  for (const OuterArc &arc : arcs) {
    const double a0 = arc.start + arc.lambda;
    const double a1 = arc.end - arc.lambda;
    const int steps = std::max(2, static_cast<int>(std::ceil((a1 - a0) * 512.0)));
    Polyline line;
    line.push_back(d.points[arc.from_i ? arc.i : arc.j]);
    for (int s = 0; s <= steps; ++s) {
      const double t = a0 + (a1 - a0) * s / steps;
      line.push_back(snap_pt(arc.radius * std::cos(kTau * t), arc.radius * std::sin(kTau * t), den));
    }
    line.push_back(d.points[arc.from_i ? arc.j : arc.i]);
    if (!arc.from_i) std::reverse(line.begin(), line.end());
    d.routes.push_back({arc.i, arc.j, std::move(line)});
  }

  // Inner-inner edges: straight chords, with a microscopic per-edge bend at
  // the midpoint so no three chords meet in one point (regular polygons
  // have concurrent diagonals).
  int chord_rank = 0;
  for (int x = 0; x < q; ++x)
    for (int y = x + 1; y < q; ++y, ++chord_rank) {
      const Point &P1 = d.points[p + x];
      const Point &P2 = d.points[p + y];
      const double x1 = P1.x.convert_to<double>(), y1 = P1.y.convert_to<double>();
      const double x2 = P2.x.convert_to<double>(), y2 = P2.y.convert_to<double>();
      const double dx = x2 - x1, dy = y2 - y1;
      const double len = std::hypot(dx, dy);
      const double bend = (chord_rank + 1) / 4096.0;
      const double mx = 0.5 * (x1 + x2) - dy / len * bend;
      const double my = 0.5 * (y1 + y2) + dx / len * bend;
      d.routes.push_back({p + x, p + y, {P1, snap_pt(mx, my, den), P2}});
    }

  // Annulus edges: cylinder geodesics sampled as spirals, angle linear in
  // radius, with the wrapped displacement fixing the winding direction.
  for (int a = 0; a < p; ++a)
    for (int x = 0; x < q; ++x) {
      const double dlt = wrap_displacement(lay.outer_turn[a], lay.inner_turn[x]).convert_to<double>();
      Polyline line;
      line.push_back(d.points[a]);
      for (int s = 1; s < spiral_segments; ++s) {
        const double t = static_cast<double>(s) / spiral_segments;
        const double ang = outer_t[a] + dlt * t;
        const double rad = 1.0 - 0.5 * t;
        line.push_back(snap_pt(rad * std::cos(kTau * ang), rad * std::sin(kTau * ang), den));
      }
      line.push_back(d.points[p + x]);
      d.routes.push_back({a, p + x, std::move(line)});
    }

  std::sort(d.routes.begin(), d.routes.end(), [](const RoutedEdge &a, const RoutedEdge &b) {
    return std::make_pair(a.u, a.v) < std::make_pair(b.u, b.v);
  });
  return d;
}

}  // namespace

Drawing cylindrical_drawing(int n) {
  if (n < 3 || n > 14)
    throw std::invalid_argument("cylindrical_drawing: exact-geometry path supports 3 <= n <= 14");
  int segments = 64;
  long long den = 1 << 20;
  std::vector<Violation> last;
  for (int attempt = 0; attempt < 3; ++attempt) {
    Drawing d = build_cylindrical(n, segments, den);
    ValidationResult vr = validate_drawing(d);
    if (vr.ok) return d;
    last = std::move(vr.violations);
    segments *= 2;
    den *= 4;
  }
  throw DrawingInvalid("cylindrical_drawing: validation still failing after refinement", last);
}

std::string to_svg(const Drawing &d) {
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  auto see = [&](const Point &pt) {
    const double x = pt.x.convert_to<double>(), y = pt.y.convert_to<double>();
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  };
  for (const auto &pt : d.points) see(pt);
  for (const auto &r : d.routes)
    for (const auto &pt : r.polyline) see(pt);
  const double pad = 0.05 * std::max(x1 - x0, y1 - y0) + 0.01;
  const double scale = 640.0 / std::max(x1 - x0 + 2 * pad, y1 - y0 + 2 * pad);
  auto X = [&](const Point &pt) { return (pt.x.convert_to<double>() - x0 + pad) * scale; };
  auto Y = [&](const Point &pt) { return (y1 + pad - pt.y.convert_to<double>()) * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\">\n";
  for (const auto &r : d.routes) {
    svg << "  <polyline fill=\"none\" stroke=\"#3366aa\" stroke-width=\"1\" points=\"";
    for (const auto &pt : r.polyline) svg << X(pt) << "," << Y(pt) << " ";
    svg << "\"/>\n";
  }
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    svg << "  <circle cx=\"" << X(d.points[i]) << "\" cy=\"" << Y(d.points[i])
        << "\" r=\"4\" fill=\"#aa3333\"/>\n"
        << "  <text x=\"" << X(d.points[i]) + 6 << "\" y=\"" << Y(d.points[i]) - 6
        << "\" font-size=\"12\">" << i << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace albertson
