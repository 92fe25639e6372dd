#include <gtest/gtest.h>

#include "multitile/json_io.hpp"
#include "support.hpp"

using namespace multitile;
using namespace testing_support;

TEST(FieldJson, CanonicalEncoding) {
  FieldElement x = q(1, 2) + 3 * FieldElement::sqrt(2);
  EXPECT_EQ(to_json(x).dump(),
            R"([{"monomial":"1","num":"1","den":"2"},{"monomial":"r2","num":"3","den":"1"}])");
  EXPECT_EQ(to_json(FieldElement()).dump(), "[]");
}

TEST(FieldJson, AcceptsShorthand) {
  EXPECT_EQ(field_from_json(Json(5)), q(5));
  EXPECT_EQ(field_from_json(Json("-3/4")), q(-3, 4));
  EXPECT_EQ(field_from_json(Json("sqrt(2)")), FieldElement::sqrt(2));
  EXPECT_EQ(field_from_json(Json("1 - 2/3*sqrt(5)")), 1 - q(2, 3) * FieldElement::sqrt(5));
  EXPECT_EQ(parse_field_text("sqrt(8)"), 2 * FieldElement::sqrt(2));
}

TEST(FieldJson, RoundTripsRandomElements) {
  Random rng(61);
  FieldDescriptor f({2, 3, 5, 7});
  for (int i = 0; i < 300; ++i) {
    FieldElement x = rng.element(f, 50, 40);
    Json j = to_json(x);
    ASSERT_EQ(field_from_json(j), x);
    ASSERT_EQ(field_from_json(parse_json_text(j.dump())), x);
    ASSERT_EQ(parse_field_text(x.to_string()), x);
  }
}

TEST(FieldJson, Errors) {
  EXPECT_THROW(field_from_json(Json("sqrt(")), ParseError);
  EXPECT_THROW(field_from_json(Json("1/0")), ParseError);
  EXPECT_THROW(field_from_json(Json(1.5)), ParseError);
  EXPECT_THROW(field_from_json(parse_json_text(R"([{"monomial":"r4","num":"1","den":"1"}])")),
               ParseError);
  EXPECT_THROW(field_from_json(parse_json_text(R"([{"monomial":"1","num":"1","den":"0"}])")),
               ParseError);
  EXPECT_THROW(field_from_json(parse_json_text(R"([{"monomial":"1","num":"x","den":"1"}])")),
               ParseError);
}

TEST(GeometryJson, RoundTrips) {
  PlaneLattice l = PlaneLattice::from_basis({1, FieldElement::sqrt(2)}, vq(1, 3, 2, 1));
  EXPECT_EQ(lattice_from_json(to_json(l)), l);
  Zonotope z = Zonotope::from_generators({v(1, 0), {1, FieldElement::sqrt(3)}, v(-1, 2)}, vq(1, 2, 0, 1));
  EXPECT_EQ(zonotope_from_json(to_json(z)), z);
  Polygon p = zonotope_polygon(z);
  EXPECT_EQ(polygon_from_json(to_json(p)), p);
  Box b{q(-1), q(1, 2), FieldElement::sqrt(5), q(7)};
  EXPECT_EQ(box_from_json(to_json(b)), b);
}

TEST(GeometryJson, EqualValuesGiveIdenticalText) {
  PlaneLattice a = PlaneLattice::from_basis(v(1, 0), v(0, 2));
  PlaneLattice b = PlaneLattice::from_basis(v(1, 2), v(-1, 0));
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  EXPECT_EQ(to_json(a).dump(), to_json(lattice_from_json(parse_json_text(to_json(a).dump()))).dump());
}

TEST(GeometryJson, ZonotopeFromVertices) {
  Json j = parse_json_text(
      R"({"vertices": [[1,0],[2,0],[3,1],[3,2],[2,3],[1,3],[0,2],[0,1]]})");
  EXPECT_EQ(zonotope_from_json(j), octagon());
}

TEST(GeometryJson, Errors) {
  EXPECT_THROW(vector_from_json(parse_json_text("[1]")), ParseError);
  EXPECT_THROW(lattice_from_json(parse_json_text(R"({"basis": [[1,0],[2,0]]})")), ParseError);
  EXPECT_THROW(lattice_from_json(parse_json_text(R"({"basis": [[1,0]]})")), ParseError);
  EXPECT_THROW(zonotope_from_json(parse_json_text(R"({"edges": []})")), ParseError);
  EXPECT_THROW(box_from_json(parse_json_text("[0,0,1]")), ParseError);
  EXPECT_THROW(parse_json_text("{not json"), ParseError);
  EXPECT_THROW(read_json_file("/nonexistent/scene.json"), ParseError);
}

TEST(SceneJson, PeriodicSceneRoundTrip) {
  Json j = parse_json_text(R"json({
    "polygon": {"generators": [[1,0],[1,1],[0,1],[-1,1]], "center": ["3/2","3/2"]},
    "lambda": {"periodic": [{"lattice": {"basis": [[1,0],[0,2]]}, "offset": [0,0]},
                            {"lattice": {"basis": [[1,0],[0,2]]}, "offset": ["sqrt(2)",1]}]},
    "mode": "sampled", "samples": 50})json");
  SceneInput s = scene_from_json(j);
  EXPECT_EQ(s.polygon, zonotope_polygon(octagon()));
  ASSERT_TRUE(s.lambda.is_periodic());
  EXPECT_EQ(s.lambda.cosets().size(), 2u);
  EXPECT_EQ(s.lambda.cosets()[1].offset, PlaneVector(FieldElement::sqrt(2), 1));
  EXPECT_EQ(s.mode, VerifyMode::sampled);
  EXPECT_EQ(s.samples, 50u);
  SceneInput again = scene_from_json(to_json(s));
  EXPECT_EQ(again.polygon, s.polygon);
  EXPECT_EQ(again.lambda.cosets(), s.lambda.cosets());
  EXPECT_EQ(to_json(again).dump(), to_json(s).dump());
}

TEST(SceneJson, BuiltinScenes) {
  for (const std::string& name : builtin_names()) {
    Json j = builtin_scene_json(name, default_window(), q(1, 3));
    SceneInput s = scene_from_json(j);
    Scene direct = builtin_pattern(name, default_window(), q(1, 3));
    EXPECT_EQ(s.polygon, direct.polygon) << name;
    EXPECT_EQ(s.lambda.is_periodic(), direct.lambda.is_periodic()) << name;
    EXPECT_EQ(s.lambda.cosets(), direct.lambda.cosets()) << name;
    EXPECT_EQ(s.lambda.points().size(), direct.lambda.points().size()) << name;
  }
  EXPECT_THROW(builtin_scene_json("penrose", default_window(), q(0)), ParseError);
}

TEST(SceneJson, ExplicitPoints) {
  Json j = parse_json_text(R"({
    "polygon": {"vertices": [[0,0],[1,0],[1,1],[0,1]]},
    "lambda": {"points": [[0,0],[1,0],[0,1],[1,1]], "window": [0,0,1,1]}})");
  SceneInput s = scene_from_json(j);
  EXPECT_FALSE(s.lambda.is_periodic());
  EXPECT_EQ(s.lambda.points().size(), 4u);
}

TEST(SceneJson, Errors) {
  EXPECT_THROW(scene_from_json(parse_json_text("[]")), ParseError);
  EXPECT_THROW(scene_from_json(parse_json_text(R"({"polygon": {"vertices": [[0,0],[1,0],[0,1]]}})")),
               ParseError);
  EXPECT_THROW(scene_from_json(parse_json_text(
                   R"({"polygon": {"vertices": [[0,0],[1,0],[0,1]]}, "lambda": {"periodic": []}})")),
               ParseError);
  EXPECT_THROW(scene_from_json(parse_json_text(
                   R"({"polygon": {"vertices": [[0,0],[1,0],[0,1]]}, "lambda": {"builtin": "x"}})")),
               ParseError);
  EXPECT_THROW(
      scene_from_json(parse_json_text(
          R"({"polygon": {"vertices": [[0,0],[1,0],[0,1]]},
              "lambda": {"periodic": [{"lattice": {"basis": [[1,0],[0,1]]}}]}, "mode": "fast"})")),
      ParseError);
}

TEST(ReportJson, DecisionAndLP) {
  Json d = to_json(decide_multitile(octagon()));
  EXPECT_EQ(d["multi_tiles"], true);
  EXPECT_EQ(d["branch"], "even");
  EXPECT_EQ(d["j0"], 1);
  EXPECT_TRUE(d.contains("witness_lattice"));
  Json lp = to_json(compute_LP(octagon()));
  EXPECT_EQ(lattice_from_json(lp["lattice"]), PlaneLattice::rectangular(6, 6));
  EXPECT_EQ(lp["contributing_j"], Json::array({1, 2, 3, 4}));
}
