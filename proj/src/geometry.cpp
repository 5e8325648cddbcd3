#include "heatpoly/geometry.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace heatpoly {

namespace {

constexpr double kEdgeTolerance = 1e-12;

std::string where(std::size_t loop, std::size_t index) {
  std::ostringstream os;
  os << "loop " << loop << ", index " << index;
  return os.str();
}

double signed_area(const std::vector<Point>& v) {
  double s = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) s += cross(v[i], v[(i + 1) % n]);
  return 0.5 * s;
}

void reverse_loop(Loop& loop) {
  const std::size_t n = loop.vertices.size();
  std::vector<Point> vertices(loop.vertices.rbegin(), loop.vertices.rend());
  // New edge j joins old vertices n-1-j and n-2-j, i.e. old edge n-2-j.
  std::vector<BoundaryCondition> bc(n);
  for (std::size_t j = 0; j < n; ++j) bc[j] = loop.edge_bc[(2 * n - 2 - j) % n];
  loop.vertices = std::move(vertices);
  loop.edge_bc = std::move(bc);
}

// Ray-crossing parity of p against one loop.
bool inside_loop(const std::vector<Point>& v, Point p) {
  bool inside = false;
  const std::size_t n = v.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point a = v[j];
    const Point b = v[i];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

double interior_angle(Point prev, Point here, Point next) {
  const Point in = here - prev;
  const Point out = next - here;
  const double turn = std::atan2(cross(in, out), dot(in, out));
  return std::numbers::pi - turn;
}

}  // namespace

double norm(Point a) { return std::hypot(a.x, a.y); }

namespace predicates {

int orient(Point a, Point b, Point c) {
  const double left = (b.x - a.x) * (c.y - a.y);
  const double right = (b.y - a.y) * (c.x - a.x);
  const double det = left - right;
  const double bound = 3.3306690738754716e-16 * (std::abs(left) + std::abs(right));
  if (det > bound) return 1;
  if (det < -bound) return -1;

  using boost::multiprecision::cpp_rational;
  const cpp_rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  const cpp_rational exact = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  return exact.sign();
}

bool segments_intersect(Point p1, Point p2, Point q1, Point q2) {
  const int o1 = orient(p1, p2, q1);
  const int o2 = orient(p1, p2, q2);
  const int o3 = orient(q1, q2, p1);
  const int o4 = orient(q1, q2, p2);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;

  auto on_segment = [](Point a, Point b, Point c) {
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
  };
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

}  // namespace predicates

std::size_t Polygon::vertex_count() const {
  std::size_t n = 0;
  for (const auto& l : loops_) n += l.vertices.size();
  return n;
}

Polygon validate(RawPolygon raw) {
  if (raw.loops.empty()) throw GeometryError("polygon has no loops");

  for (std::size_t l = 0; l < raw.loops.size(); ++l) {
    const Loop& loop = raw.loops[l];
    const std::size_t n = loop.vertices.size();
    if (n < 3) throw GeometryError("loop " + std::to_string(l) + ": fewer than 3 vertices");
    if (loop.edge_bc.size() != n)
      throw GeometryError("loop " + std::to_string(l) +
                          ": edge mark count differs from vertex count");
    for (std::size_t i = 0; i < n; ++i) {
      const Point p = loop.vertices[i];
      if (!std::isfinite(p.x) || !std::isfinite(p.y))
        throw GeometryError(where(l, i) + ": non-finite coordinate");
      const Point q = loop.vertices[(i + 1) % n];
      if (p.x == q.x && p.y == q.y)
        throw GeometryError(where(l, i) + ": duplicate consecutive vertex");
    }
    if (signed_area(loop.vertices) == 0.0)
      throw GeometryError("loop " + std::to_string(l) + ": zero area");
  }

  // Pairwise edge checks over all loops.
  struct Edge {
    std::size_t loop, index, n;
    Point a, b;
  };
  std::vector<Edge> all;
  for (std::size_t l = 0; l < raw.loops.size(); ++l) {
    const auto& v = raw.loops[l].vertices;
    for (std::size_t i = 0; i < v.size(); ++i)
      all.push_back({l, i, v.size(), v[i], v[(i + 1) % v.size()]});
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const Edge& e = all[i];
      const Edge& f = all[j];
      const bool same_loop = e.loop == f.loop;
      const bool f_follows_e = same_loop && f.index == (e.index + 1) % e.n;
      const bool e_follows_f = same_loop && e.index == (f.index + 1) % f.n;
      if (f_follows_e || e_follows_f) {
        // Shared vertex; the far endpoints must not fold back onto each other.
        const Edge& first = f_follows_e ? e : f;
        const Edge& second = f_follows_e ? f : e;
        const Point shared = first.b;
        if (predicates::orient(first.a, shared, second.b) == 0 &&
            dot(first.a - shared, second.b - shared) > 0.0) {
          throw GeometryError("collinear overlapping edges at " +
                              where(first.loop, second.index));
        }
        continue;
      }
      if (predicates::segments_intersect(e.a, e.b, f.a, f.b)) {
        throw GeometryError("self-intersection between edge (" + where(e.loop, e.index) +
                            ") and edge (" + where(f.loop, f.index) + ")");
      }
    }
  }

  // Holes: strictly inside the outer loop and outside each other.
  const auto& outer = raw.loops.front().vertices;
  for (std::size_t h = 1; h < raw.loops.size(); ++h) {
    const Point probe = raw.loops[h].vertices.front();
    if (!inside_loop(outer, probe))
      throw GeometryError("hole loop " + std::to_string(h) + " is outside the outer loop");
    for (std::size_t g = 1; g < raw.loops.size(); ++g) {
      if (g != h && inside_loop(raw.loops[g].vertices, probe))
        throw GeometryError("hole loop " + std::to_string(h) + " lies inside hole loop " +
                            std::to_string(g));
    }
  }

  for (std::size_t l = 0; l < raw.loops.size(); ++l) {
    Loop& loop = raw.loops[l];
    const bool ccw = signed_area(loop.vertices) > 0.0;
    if ((l == 0) != ccw) reverse_loop(loop);
  }
  return Polygon(std::move(raw.loops));
}

std::vector<Segment> edges(const Polygon& polygon) {
  std::vector<Segment> out;
  out.reserve(polygon.vertex_count());
  const auto loops = polygon.loops();
  for (std::size_t l = 0; l < loops.size(); ++l) {
    const auto& v = loops[l].vertices;
    for (std::size_t i = 0; i < v.size(); ++i)
      out.push_back({v[i], v[(i + 1) % v.size()], loops[l].edge_bc[i], {l, i}});
  }
  return out;
}

std::vector<VertexAngle> classify_vertices(const Polygon& polygon) {
  std::vector<VertexAngle> out;
  const auto loops = polygon.loops();
  for (std::size_t l = 0; l < loops.size(); ++l) {
    const auto& v = loops[l].vertices;
    const auto& bc = loops[l].edge_bc;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t prev = (i + n - 1) % n;
      const double angle = interior_angle(v[prev], v[i], v[(i + 1) % n]);
      const bool d_in = bc[prev] == BoundaryCondition::Dirichlet;
      const bool d_out = bc[i] == BoundaryCondition::Dirichlet;
      AngleClass cls = AngleClass::A;
      if (d_in && d_out) cls = AngleClass::C;
      if (!d_in && !d_out) cls = AngleClass::B;
      out.push_back({{l, i}, angle, cls});
    }
  }
  return out;
}

BoundaryLengths lengths_by_type(const Polygon& polygon) {
  BoundaryLengths out;
  for (const auto& e : edges(polygon)) {
    const double len = norm(e.b - e.a);
    (e.bc == BoundaryCondition::Dirichlet ? out.dirichlet : out.open) += len;
  }
  return out;
}

double area(const Polygon& polygon) {
  // Holes are clockwise, so their signed areas are already negative.
  double total = 0.0;
  for (const auto& loop : polygon.loops()) total += signed_area(loop.vertices);
  return total;
}

double distance_to_segment(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  double s = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  return norm(p - (a + s * ab));
}

PartitionParams partition_params(const Polygon& polygon) {
  const auto all = edges(polygon);
  const auto loops = polygon.loops();
  double min_distance = std::numeric_limits<double>::infinity();
  for (std::size_t l = 0; l < loops.size(); ++l) {
    const auto& v = loops[l].vertices;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t prev = (i + n - 1) % n;
      for (const auto& e : all) {
        if (e.start.loop == l && (e.start.position == i || e.start.position == prev)) continue;
        min_distance = std::min(min_distance, distance_to_segment(v[i], e.a, e.b));
      }
    }
  }
  PartitionParams p;
  p.R = 0.5 * min_distance;
  if (!(p.R > 0.0) || !std::isfinite(p.R))
    throw GeometryError("degenerate polygon: vertex touches a non-incident edge (R = 0)");
  p.epsilon = std::numeric_limits<double>::infinity();
  for (const auto& va : classify_vertices(polygon)) p.epsilon = std::min(p.epsilon, va.radians);
  const double s = std::sin(0.5 * p.epsilon);
  p.delta = 0.5 * p.R * s;
  p.decay_rate = p.R * p.R * s * s / 16.0;
  return p;
}

bool point_in_domain(const Polygon& polygon, Point p) {
  bool inside = false;
  for (const auto& loop : polygon.loops()) {
    const auto& v = loop.vertices;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (distance_to_segment(p, v[i], v[(i + 1) % n]) < kEdgeTolerance) return false;
    }
    if (inside_loop(v, p)) inside = !inside;
  }
  return inside;
}

bool segment_hits_dirichlet(const Polygon& polygon, Point p, Point q) {
  for (const auto& e : edges(polygon)) {
    if (e.bc == BoundaryCondition::Dirichlet && predicates::segments_intersect(p, q, e.a, e.b))
      return true;
  }
  return false;
}

std::pair<Point, Point> bounding_box(const Polygon& polygon) {
  const auto& v = polygon.loop(0).vertices;
  Point lo = v.front();
  Point hi = v.front();
  for (const Point& p : v) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  return {lo, hi};
}

}  // namespace heatpoly
