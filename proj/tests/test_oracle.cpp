#include <gtest/gtest.h>

#include "multitile/arrangement.hpp"
#include "multitile/oracle.hpp"
#include "multitile/patterns.hpp"
#include "support.hpp"

using namespace multitile;
using namespace testing_support;

namespace {

const PlaneLattice Z2 = PlaneLattice::rectangular(1, 1);
const PlaneLattice Z_2Z = PlaneLattice::rectangular(1, 2);

TranslateSet lattice_set(const PlaneLattice& l) { return TranslateSet::periodic({{l, v(0, 0)}}); }

TranslateSet octagon_family(const FieldElement& beta) {
  return TranslateSet::periodic({{Z_2Z, v(0, 0)}, {Z_2Z, {beta, 1}}});
}

// Counts lattice translates of a convex counter-clockwise polygon whose
// interior holds x, by testing every edge half-plane directly.
long convex_cover_count(const std::vector<PlaneVector>& vs, const PlaneLattice& l,
                        const PlaneVector& x, long range) {
  long count = 0;
  for (long a = -range; a <= range; ++a) {
    for (long b = -range; b <= range; ++b) {
      PlaneVector t = l.point(a, b);
      bool inside = true;
      for (std::size_t i = 0; i < vs.size() && inside; ++i) {
        PlaneVector p = vs[i] + t, r = vs[(i + 1) % vs.size()] + t;
        inside = det(r - p, x - p).sign() > 0;
      }
      if (inside) ++count;
    }
  }
  return count;
}

}  // namespace

TEST(EnumeratePoints, Examples) {
  EXPECT_EQ(enumerate_points(Z2, Box{0, 0, 2, 2}).size(), 9u);
  EXPECT_EQ(sorted(enumerate_points(Z_2Z, Box{0, 0, 1, 3})),
            sorted({v(0, 0), v(1, 0), v(0, 2), v(1, 2)}));
  // (0,0), (0,1), (1/2,1/2), (1,0), (1,1).
  PlaneLattice half = PlaneLattice::from_basis(vq(1, 2, 1, 2), v(0, 1));
  EXPECT_EQ(sorted(enumerate_points(half, Box{0, 0, 1, 1})),
            sorted({v(0, 0), v(0, 1), vq(1, 2, 1, 2), v(1, 0), v(1, 1)}));
}

TEST(EnumeratePoints, MatchesBruteForce) {
  Random rng(51);
  FieldDescriptor f({2});
  for (int trial = 0; trial < 100; ++trial) {
    PlaneVector b1 = rng.vector(f, 2, 2), b2 = rng.vector(f, 2, 2);
    if (det(b1, b2).abs() < q(1, 4)) continue;
    PlaneLattice l = PlaneLattice::from_basis(b1, b2);
    FieldElement x0 = rng.element(f, 3, 2), y0 = rng.element(f, 3, 2);
    Box box{x0, y0, x0 + q(rng.uniform(0, 3)), y0 + q(rng.uniform(0, 3))};
    ASSERT_EQ(sorted(enumerate_points(l, box)), sorted(brute_points(l, box)));
  }
}

TEST(PolygonLocate, Tetromino) {
  Polygon p = tetromino();
  EXPECT_EQ(p.area(), q(4));
  EXPECT_EQ(p.locate(vq(-1, 2, 0, 1)), Location::inside);
  EXPECT_EQ(p.locate(vq(1, 2, 3, 2)), Location::inside);
  EXPECT_EQ(p.locate(vq(-1, 2, 3, 2)), Location::outside);
  EXPECT_EQ(p.locate(v(0, 1)), Location::boundary);
  EXPECT_EQ(p.locate(vq(-1, 2, 1, 1)), Location::boundary);
  EXPECT_EQ(p.locate(vq(1, 2, 1, 1)), Location::inside);
}

TEST(CoveringAt, OctagonStrips) {
  // Generic points in the even strip y in (0,1) and the odd strip y in (1,2).
  Polygon p = zonotope_polygon(octagon());
  EXPECT_EQ(covering_at(p, lattice_set(Z_2Z), vq(16, 10, 9, 14)), 4);
  EXPECT_EQ(covering_at(p, lattice_set(Z_2Z), vq(16, 10, 23, 14)), 3);
}

TEST(CoveringAt, HalfIntegerPointsLieOnEdges) {
  // (3/2, 1/2) sits on the line x - y = 1 carrying a diagonal edge of a translate.
  Polygon p = zonotope_polygon(octagon());
  EXPECT_THROW(covering_at(p, lattice_set(Z_2Z), vq(3, 2, 1, 2)), BoundaryError);
}

TEST(CoveringAt, Square) {
  Polygon p = zonotope_polygon(Zonotope::from_generators({v(1, 0), v(0, 1)}));
  EXPECT_EQ(covering_at(p, lattice_set(Z2), vq(1, 3, 1, 3)), 1);
}

TEST(CoveringAt, MatchesHalfPlaneCount) {
  Random rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    Zonotope z = random_lattice_zonotope(rng, 2, 3, 2, 4, 2);
    Polygon p = zonotope_polygon(z);
    PlaneLattice l = PlaneLattice::from_basis(v(rng.uniform(1, 2), 0),
                                              v(rng.uniform(0, 1), rng.uniform(1, 2)));
    PlaneVector x = {FieldElement(rng.rational(2, 97)), FieldElement(rng.rational(2, 89))};
    long expected = convex_cover_count(z.vertices(), l, x, 16);
    try {
      ASSERT_EQ(covering_at(p, lattice_set(l), x), expected);
    } catch (const BoundaryError&) {
      // unlucky point on an edge; the half-plane count is not meaningful
    }
  }
}

TEST(CoveringAt, TranslationEquivariant) {
  Polygon p = zonotope_polygon(octagon());
  TranslateSet lambda = octagon_family(FieldElement::sqrt(2));
  PlaneVector shift = {FieldElement::sqrt(3), q(5, 7)};
  Random rng(53);
  for (int i = 0; i < 30; ++i) {
    // Edges lie on lines with rational slopes and offsets in Q(sqrt 2), so
    // these points are never on a boundary.
    PlaneVector x = {FieldElement(rng.rational(3, 101)) + q(rng.uniform(1, 9), 7) * FieldElement::sqrt(5),
                     FieldElement(rng.rational(3, 103)) + q(rng.uniform(1, 9), 11) * FieldElement::sqrt(7)};
    std::int64_t base = covering_at(p, lambda, x);
    EXPECT_EQ(covering_at(p, lambda.shifted(shift), x + shift), base);
    EXPECT_EQ(covering_at(p.translated(shift), lambda, x + shift), base);
  }
}

TEST(PeriodLattice, IntersectsCosetLattices) {
  TranslateSet mixed = TranslateSet::periodic(
      {{PlaneLattice::rectangular(2, 1), v(0, 0)}, {PlaneLattice::rectangular(1, 3), vq(1, 2, 0, 1)}});
  EXPECT_EQ(period_lattice(mixed), PlaneLattice::rectangular(2, 3));
  TranslateSet bad = TranslateSet::periodic(
      {{Z2, v(0, 0)}, {PlaneLattice::rectangular(FieldElement::sqrt(2), 1), v(0, 0)}});
  EXPECT_THROW(period_lattice(bad), IncommensurableError);
}

TEST(Verify, OctagonFamily) {
  Polygon p = zonotope_polygon(octagon());
  for (const FieldElement& beta : {q(0), q(1, 3), FieldElement::sqrt(2)}) {
    VerifyReport r = verify_multitiling(p, octagon_family(beta));
    EXPECT_TRUE(r.constant) << beta.to_string();
    EXPECT_EQ(r.multiplicity, 7);
    EXPECT_FALSE(r.window_relative);
    EXPECT_GT(r.cells_checked, 0u);
  }
}

TEST(Verify, OctagonWithOneCosetIsNotConstant) {
  VerifyReport r = verify_multitiling(zonotope_polygon(octagon()), lattice_set(Z_2Z));
  EXPECT_FALSE(r.constant);
  ASSERT_TRUE(r.counterexample);
  std::set<std::int64_t> counts{r.counterexample->first.count, r.counterexample->second.count};
  EXPECT_EQ(counts, (std::set<std::int64_t>{3, 4}));
  Polygon p = zonotope_polygon(octagon());
  EXPECT_EQ(covering_at(p, lattice_set(Z_2Z), r.counterexample->first.point),
            r.counterexample->first.count);
  EXPECT_EQ(covering_at(p, lattice_set(Z_2Z), r.counterexample->second.point),
            r.counterexample->second.count);
}

TEST(Verify, ExactAndSampledAgree) {
  Random rng(54);
  for (int trial = 0; trial < 25; ++trial) {
    Zonotope z = random_lattice_zonotope(rng, 2, 2, 2, 4, 2);
    PlaneLattice l = PlaneLattice::from_basis(v(rng.uniform(1, 2), 0),
                                              v(rng.uniform(0, 1), rng.uniform(1, 2)));
    Polygon p = zonotope_polygon(z);
    VerifyReport exact = verify_multitiling(p, lattice_set(l));
    VerifyReport sampled =
        verify_multitiling(p, lattice_set(l), {VerifyMode::sampled, 200, std::uint64_t(trial)});
    if (exact.constant) {
      // Sampling cannot find a counterexample that does not exist.
      ASSERT_TRUE(sampled.constant);
      ASSERT_EQ(sampled.multiplicity, exact.multiplicity);
      // Accounting: the constant is area / det.
      ASSERT_EQ(q(*exact.multiplicity) * l.determinant().abs(), p.area());
    }
    if (!sampled.constant) ASSERT_FALSE(exact.constant);
  }
}

TEST(Verify, ExplicitWindowTooSmall) {
  Polygon p = tetromino();
  Box tiny{-1, -1, 1, 1};
  TranslateSet lambda = TranslateSet::explicit_points("tiny", tetromino_lambda1(tiny), tiny);
  EXPECT_THROW(verify_multitiling(p, lambda), WindowError);
}

TEST(Verify, TetrominoPatterns) {
  const Box w = default_window();
  for (auto [name, k] : std::vector<std::pair<std::string, int>>{
           {"tetromino-L1", 1}, {"tetromino-L2", 1}, {"tetromino-union", 2}}) {
    Scene s = builtin_pattern(name, w, q(0));
    VerifyReport r = verify_multitiling(s.polygon, s.lambda);
    EXPECT_TRUE(r.constant) << name;
    EXPECT_EQ(r.multiplicity, k) << name;
    EXPECT_TRUE(r.window_relative);
  }
}

TEST(StripProfile, Octagon) {
  std::vector<StripEntry> profile = strip_profile(zonotope_polygon(octagon()), Z_2Z, 0, 3);
  ASSERT_EQ(profile.size(), 4u);
  const std::int64_t expected[] = {4, 3, 4, 3};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(profile[i].n, static_cast<long>(i));
    EXPECT_EQ(profile[i].count, expected[i]);
    EXPECT_EQ(profile[i].mean, q(expected[i]));
  }
}

TEST(StripProfile, Square) {
  std::vector<StripEntry> profile =
      strip_profile(zonotope_polygon(Zonotope::from_generators({v(1, 0), v(0, 1)})), Z2, 0, 1);
  ASSERT_EQ(profile.size(), 2u);
  EXPECT_EQ(profile[0].count, 1);
  EXPECT_EQ(profile[1].count, 1);
}

TEST(StripProfile, HexagonMeansAddUp) {
  Zonotope hex = Zonotope::from_generators({v(1, 0), v(0, 1), v(-1, 1)});
  PlaneLattice l = PlaneLattice::rectangular(1, 3);
  std::vector<StripEntry> profile = strip_profile(zonotope_polygon(hex), l, 0, 2);
  FieldElement total;
  for (const StripEntry& e : profile) total += e.mean;
  // Three strips make one period; the average covering is area / det = 1.
  EXPECT_EQ(total, q(3));
}

TEST(StripProfile, NeedsHorizontalVector) {
  PlaneLattice slanted = PlaneLattice::from_basis({1, FieldElement::sqrt(2)}, v(0, 1));
  EXPECT_THROW(strip_profile(zonotope_polygon(octagon()), slanted, 0, 1), PreconditionError);
}

TEST(WindowPeriods, TetrominoSets) {
  const Box w = default_window();
  PointGenerator l1 = tetromino_lambda1;
  PointGenerator l2 = tetromino_lambda2;
  PointGenerator both = [](const Box& b) {
    std::vector<PlaneVector> out = tetromino_lambda1(b);
    for (const PlaneVector& p : tetromino_lambda2(b)) out.push_back(p);
    return out;
  };
  // The diagonal shift preserves both parts of the second set as written.
  std::vector<PlaneVector> p2 = window_periods(l2, w, 4);
  EXPECT_NE(std::find(p2.begin(), p2.end(), v(2, 2)), p2.end());
  // The column {0} x (2Z + 1) is invariant under vertical shifts by 2.
  std::vector<PlaneVector> p1 = window_periods(l1, w, 4);
  EXPECT_NE(std::find(p1.begin(), p1.end(), v(0, 2)), p1.end());
  EXPECT_TRUE(window_periods(both, w, 4).empty());
}

TEST(Arrangement, FaceAreasSumToRegionArea) {
  Polygon p = zonotope_polygon(octagon());
  TranslateSet lambda = octagon_family(q(1, 3));
  std::vector<PlaneVector> region = verification_region(p, lambda);
  Box box = bounding_box(region);
  std::vector<Polygon> translates = translates_meeting(p, lambda, box);
  FieldElement total, weighted;
  scan_faces(region, translates, false, [&](const Face& f) {
    total += f.area;
    weighted += FieldElement(f.count) * f.area;
    return true;
  });
  EXPECT_EQ(total, signed_area(region));
  EXPECT_EQ(weighted, q(7) * signed_area(region));
}
