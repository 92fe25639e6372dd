#include "multitile/arrangement.hpp"

#include <algorithm>
#include <optional>

namespace multitile {

namespace {

struct Value {
  FieldElement v;
  DoubleRange r;

  explicit Value(FieldElement value) : v(std::move(value)), r(DoubleRange::of(v)) {}
};

int cmp(const Value& a, const Value& b) {
  if (a.r.hi < b.r.lo) return -1;
  if (a.r.lo > b.r.hi) return 1;
  return compare(a.v, b.v);
}

// A non-vertical segment with a.x < b.x.
struct Segment {
  PlaneVector a, b;
  Value ax, bx;
  DoubleRange yr;
  FieldElement slope;
  int weight;  // change of covering number when crossing upward

  Segment(PlaneVector p, PlaneVector q, int w)
      : a(std::move(p)),
        b(std::move(q)),
        ax(a.x),
        bx(b.x),
        yr(),
        slope((b.y - a.y) / (b.x - a.x)),
        weight(w) {
    DoubleRange ya = DoubleRange::of(a.y), yb = DoubleRange::of(b.y);
    yr = {std::min(ya.lo, yb.lo), std::max(ya.hi, yb.hi)};
  }

  FieldElement y_at(const FieldElement& x) const { return a.y + slope * (x - a.x); }
  bool spans(const Value& x) const { return cmp(ax, x) < 0 && cmp(x, bx) < 0; }
};

std::optional<Segment> make_segment(const PlaneVector& p, const PlaneVector& q) {
  int c = compare(p.x, q.x);
  if (c == 0) return std::nullopt;
  // Interior of a counter-clockwise polygon lies left of p -> q.
  int weight = c < 0 ? +1 : -1;
  return c < 0 ? Segment(p, q, weight) : Segment(q, p, weight);
}

// x-coordinate of the intersection of two non-parallel segments, if any.
std::optional<FieldElement> crossing_x(const Segment& s, const Segment& t) {
  if (s.bx.r.hi < t.ax.r.lo || t.bx.r.hi < s.ax.r.lo) return std::nullopt;
  if (s.yr.hi < t.yr.lo || t.yr.hi < s.yr.lo) return std::nullopt;
  PlaneVector r = s.b - s.a;
  PlaneVector u = t.b - t.a;
  FieldElement d = det(r, u);
  if (d.is_zero()) return std::nullopt;
  PlaneVector w = t.a - s.a;
  FieldElement nt = det(w, u);
  FieldElement nu = det(w, r);
  if (d.sign() < 0) {
    d = -d;
    nt = -nt;
    nu = -nu;
  }
  if (nt.sign() < 0 || nu.sign() < 0 || nt > d || nu > d) return std::nullopt;
  return s.a.x + (nt / d) * r.x;
}

}  // namespace

std::int64_t count_containing(const std::vector<Polygon>& polygons, const PlaneVector& p) {
  std::int64_t count = 0;
  for (const Polygon& poly : polygons) {
    switch (poly.locate(p)) {
      case Location::inside:
        ++count;
        break;
      case Location::boundary:
        throw BoundaryError("point " + p.to_string() + " lies on a translate boundary");
      case Location::outside:
        break;
    }
  }
  return count;
}

ScanStats scan_faces(const std::vector<PlaneVector>& region,
                     const std::vector<Polygon>& translates, bool with_outline,
                     const std::function<bool(const Face&)>& visit) {
  ScanStats stats;
  const Box region_box = bounding_box(region);
  const DoubleBox region_approx = DoubleBox::of(region_box);

  std::vector<Polygon> relevant;
  std::vector<Segment> edges;
  std::vector<Value> events;
  for (const Polygon& poly : translates) {
    if (!poly.approx_bounds().overlaps(region_approx)) continue;
    relevant.push_back(poly);
    const auto& vs = poly.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const PlaneVector& p = vs[i];
      const PlaneVector& q = vs[(i + 1) % vs.size()];
      DoubleBox eb = DoubleBox::of(bounding_box({p, q}));
      if (!eb.overlaps(region_approx)) continue;
      events.emplace_back(p.x);
      events.emplace_back(q.x);
      if (auto s = make_segment(p, q)) edges.push_back(std::move(*s));
    }
  }
  std::vector<Segment> borders;
  for (std::size_t i = 0; i < region.size(); ++i) {
    events.emplace_back(region[i].x);
    if (auto s = make_segment(region[i], region[(i + 1) % region.size()])) {
      borders.push_back(std::move(*s));
    }
  }
  stats.segments = edges.size();

  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (auto x = crossing_x(edges[i], edges[j])) events.emplace_back(std::move(*x));
    }
    for (const Segment& border : borders) {
      if (auto x = crossing_x(edges[i], border)) events.emplace_back(std::move(*x));
    }
  }

  const Value left(region_box.x0), right(region_box.x1);
  std::erase_if(events, [&](const Value& e) { return cmp(e, left) < 0 || cmp(e, right) > 0; });
  std::sort(events.begin(), events.end(),
            [](const Value& a, const Value& b) { return cmp(a, b) < 0; });
  events.erase(std::unique(events.begin(), events.end(),
                           [](const Value& a, const Value& b) { return cmp(a, b) == 0; }),
               events.end());

  const FieldElement half(Rational(1, 2));
  struct Crossing {
    Value y;
    const Segment* seg;
  };
  for (std::size_t k = 0; k + 1 < events.size(); ++k) {
    const FieldElement& xa = events[k].v;
    const FieldElement& xb = events[k + 1].v;
    const Value xm(half * (xa + xb));
    const FieldElement width = xb - xa;
    ++stats.slabs;

    std::optional<Crossing> lo, hi;
    for (const Segment& border : borders) {
      if (!border.spans(xm)) continue;
      Crossing c{Value(border.y_at(xm.v)), &border};
      if (!lo || cmp(c.y, lo->y) < 0) lo = c;
      if (!hi || cmp(c.y, hi->y) > 0) hi = c;
    }
    if (!lo || cmp(lo->y, hi->y) >= 0) continue;

    std::vector<Crossing> crossings;
    for (const Segment& s : edges) {
      if (!s.spans(xm)) continue;
      if (s.yr.hi <= lo->y.r.lo || s.yr.lo >= hi->y.r.hi) continue;
      Crossing c{Value(s.y_at(xm.v)), &s};
      if (cmp(c.y, lo->y) <= 0 || cmp(c.y, hi->y) >= 0) continue;
      crossings.push_back(std::move(c));
    }
    std::sort(crossings.begin(), crossings.end(),
              [](const Crossing& a, const Crossing& b) { return cmp(a.y, b.y) < 0; });

    // Boundaries between faces: the lower border, each distinct crossing
    // height (with its summed weight), then the upper border.
    struct Level {
      const Crossing* line;
      int weight;
    };
    std::vector<Level> levels{{&*lo, 0}};
    for (std::size_t i = 0; i < crossings.size(); ++i) {
      if (levels.size() > 1 && cmp(levels.back().line->y, crossings[i].y) == 0) {
        levels.back().weight += crossings[i].seg->weight;
      } else {
        levels.push_back({&crossings[i], crossings[i].seg->weight});
      }
    }
    levels.push_back({&*hi, 0});

    std::int64_t count = 0;
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
      const Crossing& below = *levels[i].line;
      const Crossing& above = *levels[i + 1].line;
      Face face;
      face.sample = PlaneVector(xm.v, half * (below.y.v + above.y.v));
      if (i == 0) {
        count = count_containing(relevant, face.sample);
      } else {
        count += levels[i].weight;
      }
      if (i > 0 && i + 2 == levels.size() && count != count_containing(relevant, face.sample)) {
        throw InternalConsistencyError("incremental covering count disagrees with direct count");
      }
      face.count = count;
      face.area = width * (above.y.v - below.y.v);
      if (with_outline) {
        face.outline = {{xa, below.seg->y_at(xa)},
                        {xb, below.seg->y_at(xb)},
                        {xb, above.seg->y_at(xb)},
                        {xa, above.seg->y_at(xa)}};
      }
      ++stats.faces;
      if (!visit(face)) return stats;
    }
  }
  return stats;
}

}  // namespace multitile
