#pragma once

// Exact polygons, boxes and lattice point enumeration.

#include <vector>

#include "multitile/plane.hpp"

namespace multitile {

// Closed axis-aligned box [x0, x1] x [y0, y1].
struct Box {
  FieldElement x0, y0, x1, y1;

  bool empty() const { return x1 < x0 || y1 < y0; }
  // Nonempty with positive width and height.
  bool proper() const { return x0 < x1 && y0 < y1; }
  bool contains(const PlaneVector& p) const {
    return x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1;
  }
  Box translated(const PlaneVector& v) const { return {x0 + v.x, y0 + v.y, x1 + v.x, y1 + v.y}; }
  std::vector<PlaneVector> corners() const { return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}; }
  bool operator==(const Box& o) const = default;
};

Box bounding_box(const std::vector<PlaneVector>& points);

// Shoelace area of a simple polygon (positive for counter-clockwise order).
FieldElement signed_area(const std::vector<PlaneVector>& vertices);

// Conservative double interval enclosing an exact value.
struct DoubleRange {
  double lo;
  double hi;
  static DoubleRange of(const FieldElement& v);
  bool overlaps(const DoubleRange& o) const { return lo <= o.hi && o.lo <= hi; }
};

struct DoubleBox {
  DoubleRange x, y;
  static DoubleBox of(const Box& b);
  bool overlaps(const DoubleBox& o) const { return x.overlaps(o.x) && y.overlaps(o.y); }
};

enum class Location { inside, outside, boundary };

// A simple polygon, stored counter-clockwise. Need not be convex.
class Polygon {
 public:
  // Throws PreconditionError for fewer than 3 vertices or zero area.
  explicit Polygon(std::vector<PlaneVector> vertices);

  const std::vector<PlaneVector>& vertices() const { return vertices_; }
  const Box& bounds() const { return bounds_; }
  const DoubleBox& approx_bounds() const { return approx_bounds_; }
  const FieldElement& area() const { return area_; }

  Location locate(const PlaneVector& p) const;
  Polygon translated(const PlaneVector& v) const;

  bool operator==(const Polygon& o) const { return vertices_ == o.vertices_; }

 private:
  std::vector<PlaneVector> vertices_;
  Box bounds_;
  DoubleBox approx_bounds_;
  FieldElement area_;
};

// Lattice points inside the closed box.
std::vector<PlaneVector> enumerate_points(const PlaneLattice& lattice, const Box& box);

}  // namespace multitile
