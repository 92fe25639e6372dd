#include "multitile/oracle.hpp"

#include <random>

#include "multitile/arrangement.hpp"

namespace multitile {

namespace {

// Box of translation vectors lambda for which P + lambda can meet `target`.
Box lambda_box(const Polygon& polygon, const Box& target) {
  const Box& p = polygon.bounds();
  return {target.x0 - p.x1, target.y0 - p.y1, target.x1 - p.x0, target.y1 - p.y0};
}

std::vector<PlaneVector> box_outline(const Box& b) { return b.corners(); }

Rational random_unit(std::mt19937_64& rng) {
  constexpr unsigned kBits = 30;
  return Rational(Integer(static_cast<unsigned long>(rng() >> (64 - kBits))),
                  Integer(1UL << kBits));
}

}  // namespace

Polygon zonotope_polygon(const Zonotope& zonotope) { return Polygon(zonotope.vertices()); }

// ---------------------------------------------------------------------------
// TranslateSet

TranslateSet TranslateSet::periodic(std::vector<Coset> cosets) {
  if (cosets.empty()) throw PreconditionError("a periodic translate set needs at least one coset");
  TranslateSet out;
  out.cosets_ = std::move(cosets);
  return out;
}

TranslateSet TranslateSet::explicit_points(std::string name, std::vector<PlaneVector> points,
                                           Box window) {
  if (!window.proper()) throw WindowError("explicit translate set needs a nonempty window");
  TranslateSet out;
  out.name_ = std::move(name);
  out.points_ = std::move(points);
  out.window_ = std::move(window);
  return out;
}

std::vector<PlaneVector> TranslateSet::translates_in(const Box& box) const {
  std::vector<PlaneVector> out;
  if (is_periodic()) {
    for (const Coset& c : cosets_) {
      for (PlaneVector& p : enumerate_points(c.lattice, box.translated(-c.offset))) {
        out.push_back(p + c.offset);
      }
    }
    return out;
  }
  if (box.x0 < window_.x0 || box.y0 < window_.y0 || box.x1 > window_.x1 || box.y1 > window_.y1) {
    throw WindowError("query reaches outside the window of the explicit translate set");
  }
  for (const PlaneVector& p : points_) {
    if (box.contains(p)) out.push_back(p);
  }
  return out;
}

TranslateSet TranslateSet::shifted(const PlaneVector& v) const {
  TranslateSet out = *this;
  for (Coset& c : out.cosets_) c.offset += v;
  for (PlaneVector& p : out.points_) p += v;
  if (!is_periodic()) out.window_ = window_.translated(v);
  return out;
}

// ---------------------------------------------------------------------------

std::int64_t covering_at(const Polygon& polygon, const TranslateSet& lambda,
                         const PlaneVector& x) {
  Box point_box{x.x, x.y, x.x, x.y};
  std::int64_t count = 0;
  for (const PlaneVector& t : lambda.translates_in(lambda_box(polygon, point_box))) {
    switch (polygon.locate(x - t)) {
      case Location::inside:
        ++count;
        break;
      case Location::boundary:
        throw BoundaryError("point " + x.to_string() + " lies on the boundary of the translate by " +
                            t.to_string());
      case Location::outside:
        break;
    }
  }
  return count;
}

PlaneLattice period_lattice(const TranslateSet& lambda) {
  if (!lambda.is_periodic()) throw PreconditionError("explicit translate sets have no period lattice");
  PlaneLattice acc = lambda.cosets()[0].lattice;
  for (std::size_t i = 1; i < lambda.cosets().size(); ++i) {
    acc = lattice_intersect(acc, lambda.cosets()[i].lattice);
  }
  return acc;
}

std::vector<PlaneVector> verification_region(const Polygon& polygon, const TranslateSet& lambda) {
  if (lambda.is_periodic()) {
    PlaneLattice t = period_lattice(lambda);
    PlaneVector origin(0, 0);
    return {origin, t.b1(), t.b1() + t.b2(), t.b2()};
  }
  const Box& w = lambda.window();
  const Box& p = polygon.bounds();
  Box inner{w.x0 + p.x1, w.y0 + p.y1, w.x1 + p.x0, w.y1 + p.y0};
  if (!inner.proper()) {
    throw WindowError("window is too small for the polygon: no point has all covering translates inside it");
  }
  return box_outline(inner);
}

std::vector<Polygon> translates_meeting(const Polygon& polygon, const TranslateSet& lambda,
                                        const Box& box) {
  std::vector<Polygon> out;
  for (const PlaneVector& t : lambda.translates_in(lambda_box(polygon, box))) {
    out.push_back(polygon.translated(t));
  }
  return out;
}

VerifyReport verify_multitiling(const Polygon& polygon, const TranslateSet& lambda,
                                const VerifyOptions& options) {
  VerifyReport report;
  report.window_relative = !lambda.is_periodic();
  report.region = verification_region(polygon, lambda);
  const Box region_box = bounding_box(report.region);

  std::optional<Sample> first;
  auto record = [&](const PlaneVector& point, std::int64_t count) {
    ++report.cells_checked;
    if (!first) {
      first = Sample{point, count};
      return true;
    }
    if (count != first->count) {
      report.counterexample = std::make_pair(*first, Sample{point, count});
      return false;
    }
    return true;
  };

  if (options.mode == VerifyMode::exact) {
    std::vector<Polygon> translates = translates_meeting(polygon, lambda, region_box);
    FieldElement weighted;
    scan_faces(report.region, translates, false, [&](const Face& face) {
      weighted += FieldElement(static_cast<long>(face.count)) * face.area;
      return record(face.sample, face.count);
    });
    if (!report.counterexample && first && lambda.is_periodic()) {
      // Constant covering k forces k = area(P) * sum_i 1/det(L_i).
      FieldElement density;
      for (const Coset& c : lambda.cosets()) density += lattice_det(c.lattice).inverse();
      density *= polygon.area();
      FieldElement cell_area = signed_area(report.region);
      if (!(density == FieldElement(static_cast<long>(first->count))) ||
          !(weighted == density * cell_area)) {
        throw InternalConsistencyError("face scan disagrees with the covering density " +
                                       density.to_string());
      }
    }
  } else {
    if (options.samples == 0) throw PreconditionError("sampled mode needs at least one sample");
    std::mt19937_64 rng(options.seed);
    const PlaneVector& o = report.region[0];
    const PlaneVector u = report.region[1] - o;
    const PlaneVector v = report.region[3] - o;
    std::size_t boundary_hits = 0;
    while (report.cells_checked < options.samples) {
      PlaneVector p = o + FieldElement(random_unit(rng)) * u + FieldElement(random_unit(rng)) * v;
      std::int64_t count;
      try {
        count = covering_at(polygon, lambda, p);
      } catch (const BoundaryError&) {
        if (++boundary_hits > 100 * options.samples) throw;
        continue;
      }
      if (!record(p, count)) break;
    }
  }
  report.constant = !report.counterexample.has_value() && first.has_value();
  if (report.constant) report.multiplicity = first->count;
  return report;
}

std::vector<StripEntry> strip_profile(const Polygon& polygon, const PlaneLattice& lattice,
                                      long n_first, long n_last) {
  if (!lattice.has_horizontal_vector()) {
    throw PreconditionError("strip profile needs a lattice containing a horizontal vector");
  }
  const FieldElement a = lattice.b1().x;
  TranslateSet lambda = TranslateSet::periodic({{lattice, PlaneVector(0, 0)}});
  std::vector<StripEntry> out;
  for (long n = n_first; n <= n_last; ++n) {
    Box strip{0, n, a, n + 1};
    std::vector<Polygon> translates = translates_meeting(polygon, lambda, strip);
    FieldElement weighted;
    std::optional<std::int64_t> common;
    bool constant = true;
    scan_faces(strip.corners(), translates, false, [&](const Face& face) {
      weighted += FieldElement(static_cast<long>(face.count)) * face.area;
      if (!common) common = face.count;
      if (*common != face.count) constant = false;
      return true;
    });
    StripEntry entry;
    entry.n = n;
    entry.mean = weighted / a;
    if (constant) entry.count = common;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace multitile
