#include "multitile/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace multitile {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int compare_hinted(const FieldElement& a, const DoubleRange& ra, const FieldElement& b,
                   const DoubleRange& rb) {
  if (ra.hi < rb.lo) return -1;
  if (ra.lo > rb.hi) return 1;
  return compare(a, b);
}

}  // namespace

DoubleRange DoubleRange::of(const FieldElement& v) {
  FieldElement::DoubleEnclosure e = v.approx_double();
  if (e.valid) {
    return {std::nextafter(e.value - e.error, -kInf), std::nextafter(e.value + e.error, kInf)};
  }
  RationalInterval iv = v.approx(60);
  double lo = iv.lo.get_d();
  double hi = iv.hi.get_d();
  if (!std::isfinite(lo) || !std::isfinite(hi)) return {-kInf, kInf};
  return {std::nextafter(lo, -kInf), std::nextafter(hi, kInf)};
}

DoubleBox DoubleBox::of(const Box& b) {
  DoubleRange x0 = DoubleRange::of(b.x0), x1 = DoubleRange::of(b.x1);
  DoubleRange y0 = DoubleRange::of(b.y0), y1 = DoubleRange::of(b.y1);
  return {{x0.lo, x1.hi}, {y0.lo, y1.hi}};
}

Box bounding_box(const std::vector<PlaneVector>& points) {
  if (points.empty()) throw PreconditionError("bounding box of an empty point set");
  Box b{points[0].x, points[0].y, points[0].x, points[0].y};
  for (const PlaneVector& p : points) {
    if (p.x < b.x0) b.x0 = p.x;
    if (p.x > b.x1) b.x1 = p.x;
    if (p.y < b.y0) b.y0 = p.y;
    if (p.y > b.y1) b.y1 = p.y;
  }
  return b;
}

FieldElement signed_area(const std::vector<PlaneVector>& vertices) {
  FieldElement twice;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    twice += det(vertices[i], vertices[(i + 1) % vertices.size()]);
  }
  return FieldElement(Rational(1, 2)) * twice;
}

// ---------------------------------------------------------------------------
// Polygon

Polygon::Polygon(std::vector<PlaneVector> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw PreconditionError("a polygon needs at least 3 vertices");
  area_ = signed_area(vertices_);
  if (area_.is_zero()) throw PreconditionError("polygon has zero area");
  if (area_.sign() < 0) {
    std::reverse(vertices_.begin(), vertices_.end());
    area_ = -area_;
  }
  bounds_ = bounding_box(vertices_);
  approx_bounds_ = DoubleBox::of(bounds_);
}

Polygon Polygon::translated(const PlaneVector& v) const {
  Polygon out = *this;
  for (PlaneVector& p : out.vertices_) p += v;
  out.bounds_ = bounds_.translated(v);
  out.approx_bounds_ = DoubleBox::of(out.bounds_);
  return out;
}

Location Polygon::locate(const PlaneVector& p) const {
  const DoubleRange px = DoubleRange::of(p.x);
  const DoubleRange py = DoubleRange::of(p.y);
  if (!approx_bounds_.overlaps({px, py})) return Location::outside;
  int winding = 0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const PlaneVector& a = vertices_[i];
    const PlaneVector& b = vertices_[(i + 1) % n];
    int ca = compare_hinted(a.y, DoubleRange::of(a.y), p.y, py);
    int cb = compare_hinted(b.y, DoubleRange::of(b.y), p.y, py);
    if ((ca > 0 && cb > 0) || (ca < 0 && cb < 0)) continue;
    int o = orientation(a, b, p);
    if (o == 0) {
      if (ca == 0 && cb == 0) {
        // Horizontal edge on the line y = p.y.
        if (min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x)) return Location::boundary;
        continue;
      }
      // p is on the supporting line and, since p.y is within the edge's
      // y-range, on the segment itself.
      return Location::boundary;
    }
    if (ca <= 0 && cb > 0 && o > 0) ++winding;
    if (ca > 0 && cb <= 0 && o < 0) --winding;
  }
  return winding != 0 ? Location::inside : Location::outside;
}

// ---------------------------------------------------------------------------

std::vector<PlaneVector> enumerate_points(const PlaneLattice& lattice, const Box& box) {
  std::vector<PlaneVector> out;
  if (box.empty()) return out;
  FieldElement c1_lo, c1_hi;
  bool first = true;
  for (const PlaneVector& corner : box.corners()) {
    FieldElement c1 = lattice.coordinates(corner)[0];
    if (first || c1 < c1_lo) c1_lo = c1;
    if (first || c1 > c1_hi) c1_hi = c1;
    first = false;
  }
  const PlaneVector& b1 = lattice.b1();
  const PlaneVector& b2 = lattice.b2();
  const FieldElement inv_x = b2.x.is_zero() ? FieldElement() : b2.x.inverse();
  const FieldElement inv_y = b2.y.is_zero() ? FieldElement() : b2.y.inverse();

  // Integer range of c2 with lo <= c1*u + c2*v <= hi, v given by its inverse.
  auto restrict = [](const FieldElement& lo, const FieldElement& hi, const FieldElement& base,
                     const FieldElement& v, const FieldElement& inv_v, Integer& c2_lo,
                     Integer& c2_hi, bool& have) {
    if (v.is_zero()) {
      if (base < lo || base > hi) {
        c2_lo = 1;
        c2_hi = 0;
        have = true;
      }
      return;
    }
    FieldElement a = (lo - base) * inv_v;
    FieldElement b = (hi - base) * inv_v;
    if (v.sign() < 0) std::swap(a, b);
    Integer lo_i = a.ceil(), hi_i = b.floor();
    if (!have || lo_i > c2_lo) c2_lo = lo_i;
    if (!have || hi_i < c2_hi) c2_hi = hi_i;
    have = true;
  };

  for (Integer c1 = c1_lo.ceil(), end = c1_hi.floor(); c1 <= end; ++c1) {
    FieldElement fc1{Rational(c1)};
    FieldElement base_x = fc1 * b1.x;
    FieldElement base_y = fc1 * b1.y;
    Integer c2_lo, c2_hi;
    bool have = false;
    restrict(box.x0, box.x1, base_x, b2.x, inv_x, c2_lo, c2_hi, have);
    restrict(box.y0, box.y1, base_y, b2.y, inv_y, c2_lo, c2_hi, have);
    for (Integer c2 = c2_lo; c2 <= c2_hi; ++c2) {
      PlaneVector p = lattice.point(c1, c2);
      if (box.contains(p)) out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace multitile
