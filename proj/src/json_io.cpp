#include "multitile/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace multitile {

namespace {

Integer parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw ParseError("expected an integer, got '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected an integer, got '" + text + "'");
    }
  }
  Integer out;
  if (out.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0) {
    throw ParseError("expected an integer, got '" + text + "'");
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer integer_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("field element term lacks '") + key + "'");
  const Json& v = j.at(key);
  if (v.is_string()) return parse_integer(v.get<std::string>());
  if (v.is_number_integer()) return Integer(v.dump());
  throw ParseError(std::string("'") + key + "' must be an integer string");
}

const Json& member(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string(what) + " needs a '" + key + "' member");
  }
  return j.at(key);
}

std::vector<PlaneVector> vector_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of vectors");
  std::vector<PlaneVector> out;
  for (const Json& v : j) out.push_back(vector_from_json(v));
  return out;
}

Json vector_list_json(const std::vector<PlaneVector>& vs) {
  Json out = Json::array();
  for (const PlaneVector& v : vs) out.push_back(to_json(v));
  return out;
}

Json index_list(const std::vector<std::size_t>& xs) {
  Json out = Json::array();
  for (std::size_t x : xs) out.push_back(x);
  return out;
}

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

Json sample_json(const Sample& s) { return Json{{"point", to_json(s.point)}, {"count", s.count}}; }

}  // namespace

// ---------------------------------------------------------------------------
// Field elements

FieldElement parse_field_text(const std::string& input) {
  std::string text;
  for (char c : input) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  if (text.empty()) throw ParseError("empty field element");
  std::vector<FieldElement::Term> terms;
  std::size_t pos = 0;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("malformed field element '" + input + "'");
    }
    std::size_t end = pos;
    while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
    std::string term = text.substr(pos, end - pos);
    pos = end;
    if (term.empty()) throw ParseError("malformed field element '" + input + "'");

    Rational coeff = 1;
    std::uint64_t radicand = 1;
    std::string root_part = term;
    auto star = term.find('*');
    if (star != std::string::npos) {
      coeff = parse_rational(term.substr(0, star));
      root_part = term.substr(star + 1);
    } else if (term.rfind("sqrt(", 0) != 0) {
      coeff = parse_rational(term);
      root_part.clear();
    }
    if (!root_part.empty()) {
      if (root_part.rfind("sqrt(", 0) != 0 || root_part.back() != ')') {
        throw ParseError("malformed square root in '" + input + "'");
      }
      Integer n = parse_integer(root_part.substr(5, root_part.size() - 6));
      if (n < 0 || !n.fits_ulong_p()) throw ParseError("bad radicand in '" + input + "'");
      FieldElement root = FieldElement::sqrt(n.get_ui());
      for (const auto& t : root.terms()) {
        terms.push_back({t.radicand, sign * coeff * t.coeff});
      }
      continue;
    }
    terms.push_back({radicand, sign * coeff});
  }
  return FieldElement::from_terms(std::move(terms));
}

Json to_json(const FieldElement& value) {
  Json out = Json::array();
  for (const auto& t : value.terms()) {
    out.push_back({{"monomial", monomial_key(t.radicand)},
                   {"num", t.coeff.get_num().get_str()},
                   {"den", t.coeff.get_den().get_str()}});
  }
  return out;
}

FieldElement field_from_json(const Json& j) {
  if (j.is_number_integer()) return FieldElement(Rational(Integer(j.dump())));
  if (j.is_string()) return parse_field_text(j.get<std::string>());
  if (!j.is_array()) throw ParseError("field element must be an array of terms, integer or string");
  std::vector<FieldElement::Term> terms;
  for (const Json& t : j) {
    if (!t.is_object()) throw ParseError("field element term must be an object");
    const Json& key = member(t, "monomial", "field element term");
    if (!key.is_string()) throw ParseError("monomial key must be a string");
    std::uint64_t radicand = parse_monomial_key(key.get<std::string>());
    Integer num = integer_field(t, "num");
    Integer den = integer_field(t, "den");
    if (den == 0) throw ParseError("zero denominator in field element term");
    Rational q(num, den);
    q.canonicalize();
    terms.push_back({radicand, q});
  }
  return FieldElement::from_terms(std::move(terms));
}

Json to_json(const PlaneVector& v) { return Json::array({to_json(v.x), to_json(v.y)}); }

PlaneVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("vector must be a 2-element array");
  return {field_from_json(j[0]), field_from_json(j[1])};
}

// ---------------------------------------------------------------------------
// Lattices, polygons, boxes

Json to_json(const PlaneLattice& lattice) {
  return Json{{"basis", Json::array({to_json(lattice.b1()), to_json(lattice.b2())})}};
}

PlaneLattice lattice_from_json(const Json& j) {
  std::vector<PlaneVector> basis = vector_list(member(j, "basis", "lattice"), "lattice basis");
  if (basis.size() != 2) throw ParseError("lattice basis must have exactly 2 vectors");
  try {
    return PlaneLattice::from_basis(basis[0], basis[1]);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const Zonotope& zonotope) {
  Json out{{"generators", vector_list_json(zonotope.generators())}};
  if (!zonotope.center().is_zero()) out["center"] = to_json(zonotope.center());
  return out;
}

Zonotope zonotope_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("zonotope must be an object");
  if (j.contains("generators")) {
    PlaneVector center(0, 0);
    if (j.contains("center")) center = vector_from_json(j.at("center"));
    return Zonotope::from_generators(vector_list(j.at("generators"), "generators"), center);
  }
  if (j.contains("vertices")) return Zonotope::from_vertices(vector_list(j.at("vertices"), "vertices"));
  throw ParseError("zonotope needs 'generators' or 'vertices'");
}

Json to_json(const Polygon& polygon) { return Json{{"vertices", vector_list_json(polygon.vertices())}}; }

Polygon polygon_from_json(const Json& j) {
  if (j.is_object() && j.contains("generators")) return zonotope_polygon(zonotope_from_json(j));
  std::vector<PlaneVector> vertices = vector_list(member(j, "vertices", "polygon"), "vertices");
  try {
    return Polygon(std::move(vertices));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const Box& box) {
  return Json::array({to_json(box.x0), to_json(box.y0), to_json(box.x1), to_json(box.y1)});
}

Box box_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("window must be [x0, y0, x1, y1]");
  return {field_from_json(j[0]), field_from_json(j[1]), field_from_json(j[2]), field_from_json(j[3])};
}

// ---------------------------------------------------------------------------
// Reports

Json to_json(const BolleReport& report) {
  Json pairs = Json::array();
  for (const PairRecord& p : report.pairs) {
    pairs.push_back({{"j", p.j}, {"cond1", p.cond1}, {"cond2", p.cond2}});
  }
  Json out{{"verdict", report.verdict}, {"pairs", pairs}};
  if (report.multiplicity) out["multiplicity"] = integer_json(*report.multiplicity);
  return out;
}

Json to_json(const Decision& d) {
  Json out{{"multi_tiles", d.multi_tiles}, {"branch", to_string(d.branch)}};
  if (d.j0) out["j0"] = *d.j0;
  if (d.branch == Branch::even) out["accepted_j0"] = index_list(d.accepted);
  if (d.witness) out["witness_lattice"] = to_json(*d.witness);
  if (d.witness_multiplicity) out["witness_multiplicity"] = integer_json(*d.witness_multiplicity);
  if (d.failure) out["failure_reason"] = to_string(*d.failure);
  return out;
}

Json to_json(const LPResult& r) {
  Json out{{"lattice", to_json(r.lattice)}};
  if (r.from_tau_span) {
    out["source"] = "tau-span";
  } else {
    out["source"] = "intersection";
    out["contributing_j"] = index_list(r.contributing);
  }
  return out;
}

Json to_json(const VerifyReport& r) {
  Json out{{"constant", r.constant}};
  if (r.multiplicity) out["multiplicity"] = *r.multiplicity;
  if (r.counterexample) {
    out["counterexample"] =
        Json::array({sample_json(r.counterexample->first), sample_json(r.counterexample->second)});
  }
  out["cells_checked"] = r.cells_checked;
  out["window_relative"] = r.window_relative;
  out["region"] = vector_list_json(r.region);
  return out;
}

Json to_json(const std::vector<StripEntry>& profile) {
  Json strips = Json::array();
  for (const StripEntry& e : profile) {
    Json s{{"n", e.n}, {"mean", to_json(e.mean)}};
    if (e.count) s["count"] = *e.count;
    strips.push_back(s);
  }
  return Json{{"strips", strips}};
}

// ---------------------------------------------------------------------------
// Scenes

SceneInput scene_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("scene must be an object");
  const Json& lj = member(j, "lambda", "scene");
  if (!lj.is_object()) throw ParseError("'lambda' must be an object");

  std::optional<Polygon> polygon;
  if (j.contains("polygon")) polygon = polygon_from_json(j.at("polygon"));
  std::optional<TranslateSet> lambda;

  if (lj.contains("periodic")) {
    const Json& list = lj.at("periodic");
    if (!list.is_array() || list.empty()) throw ParseError("'periodic' must be a nonempty array");
    std::vector<Coset> cosets;
    for (const Json& c : list) {
      PlaneVector offset(0, 0);
      if (c.contains("offset")) offset = vector_from_json(c.at("offset"));
      cosets.push_back({lattice_from_json(member(c, "lattice", "coset")), offset});
    }
    lambda = TranslateSet::periodic(std::move(cosets));
  } else if (lj.contains("builtin")) {
    const Json& name = lj.at("builtin");
    if (!name.is_string()) throw ParseError("'builtin' must be a string");
    Box window = lj.contains("window") ? box_from_json(lj.at("window")) : default_window();
    FieldElement beta = lj.contains("beta") ? field_from_json(lj.at("beta")) : FieldElement();
    if (!window.proper()) throw WindowError("builtin window is empty");
    Scene s = builtin_pattern(name.get<std::string>(), window, beta);
    if (!polygon) polygon = s.polygon;
    lambda = std::move(s.lambda);
  } else if (lj.contains("points")) {
    Box window = box_from_json(member(lj, "window", "explicit point set"));
    if (!window.proper()) throw WindowError("point set window is empty");
    lambda = TranslateSet::explicit_points("points", vector_list(lj.at("points"), "points"), window);
  } else {
    throw ParseError("'lambda' needs 'periodic', 'builtin' or 'points'");
  }
  if (!polygon) throw ParseError("scene needs a 'polygon'");

  SceneInput scene{std::move(*polygon), std::move(*lambda), lj, std::nullopt, std::nullopt};
  if (j.contains("mode")) {
    const Json& m = j.at("mode");
    if (m == "exact") {
      scene.mode = VerifyMode::exact;
    } else if (m == "sampled") {
      scene.mode = VerifyMode::sampled;
    } else {
      throw ParseError("'mode' must be \"exact\" or \"sampled\"");
    }
  }
  if (j.contains("samples")) {
    const Json& s = j.at("samples");
    if (!s.is_number_unsigned() || s.get<std::size_t>() == 0) {
      throw ParseError("'samples' must be a positive integer");
    }
    scene.samples = s.get<std::size_t>();
  }
  return scene;
}

Json to_json(const SceneInput& scene) {
  Json out{{"polygon", to_json(scene.polygon)}, {"lambda", scene.lambda_json}};
  if (scene.mode) out["mode"] = *scene.mode == VerifyMode::exact ? "exact" : "sampled";
  if (scene.samples) out["samples"] = *scene.samples;
  return out;
}

Json builtin_scene_json(const std::string& name, const Box& window, const FieldElement& beta) {
  Scene s = builtin_pattern(name, window, beta);
  Json lambda{{"builtin", name}};
  if (name == "octagon-family") {
    lambda["beta"] = to_json(beta);
  } else {
    lambda["window"] = to_json(window);
  }
  return Json{{"polygon", to_json(s.polygon)}, {"lambda", lambda}};
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

}  // namespace multitile
