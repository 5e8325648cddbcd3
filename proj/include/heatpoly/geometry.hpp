#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heatpoly/coefficients.hpp"

namespace heatpoly {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point a);

enum class BoundaryCondition { Dirichlet, Open };

/// Closed vertex loop; edge i runs from vertices[i] to vertices[(i+1) % n].
struct Loop {
  std::vector<Point> vertices;
  std::vector<BoundaryCondition> edge_bc;
};

/// Unchecked polygon as read from input: first loop is the outer boundary,
/// the rest are holes. Orientation is arbitrary.
struct RawPolygon {
  std::vector<Loop> loops;
};

/// Location of a vertex (or of the edge starting there).
struct VertexIndex {
  std::size_t loop = 0;
  std::size_t position = 0;
  friend bool operator==(const VertexIndex&, const VertexIndex&) = default;
};

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A validated polygon: simple loops, outer loop counterclockwise, holes
/// clockwise and strictly inside, so the domain always lies to the left of
/// every directed edge. Only obtainable through validate().
class Polygon {
 public:
  std::span<const Loop> loops() const { return loops_; }
  const Loop& loop(std::size_t i) const { return loops_.at(i); }
  std::size_t vertex_count() const;

 private:
  explicit Polygon(std::vector<Loop> loops) : loops_(std::move(loops)) {}
  std::vector<Loop> loops_;
  friend Polygon validate(RawPolygon raw);
};

struct Segment {
  Point a;
  Point b;
  BoundaryCondition bc = BoundaryCondition::Dirichlet;
  VertexIndex start;
};

struct VertexAngle {
  VertexIndex vertex;
  double radians = 0.0;
  AngleClass cls = AngleClass::C;
};

struct PartitionParams {
  double R = 0.0;
  double epsilon = 0.0;
  double delta = 0.0;
  double decay_rate = 0.0;  // R^2 sin^2(epsilon/2) / 16, units 1/time
};

struct BoundaryLengths {
  double dirichlet = 0.0;  // L_minus
  double open = 0.0;       // L_plus
  double total() const { return dirichlet + open; }
};

/// Checks every structural hypothesis and normalizes orientation.
/// Throws GeometryError naming the offending loop/vertex/edge.
Polygon validate(RawPolygon raw);

std::vector<Segment> edges(const Polygon& polygon);
std::vector<VertexAngle> classify_vertices(const Polygon& polygon);
BoundaryLengths lengths_by_type(const Polygon& polygon);
double area(const Polygon& polygon);
PartitionParams partition_params(const Polygon& polygon);

/// Even-odd membership; points within 1e-12 of an edge count as outside.
bool point_in_domain(const Polygon& polygon, Point p);

/// Does the closed segment p-q touch any closed Dirichlet edge?
bool segment_hits_dirichlet(const Polygon& polygon, Point p, Point q);

double distance_to_segment(Point p, Point a, Point b);

/// Axis-aligned bounding box of the outer loop: (min corner, max corner).
std::pair<Point, Point> bounding_box(const Polygon& polygon);

namespace predicates {

/// Sign of the orientation of (a, b, c): +1 left turn, -1 right turn, 0 collinear.
/// Exact: falls back to rational arithmetic when the floating filter is inconclusive.
int orient(Point a, Point b, Point c);

/// Closed-segment intersection test using exact orientation.
bool segments_intersect(Point p1, Point p2, Point q1, Point q2);

}  // namespace predicates

}  // namespace heatpoly
