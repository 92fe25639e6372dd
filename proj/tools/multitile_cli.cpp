// multitile: decide, check and verify translational multi-tilings of planar
// polygons. Exit codes: 0 positive answer, 1 negative answer, 2 error.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "multitile/criteria.hpp"
#include "multitile/json_io.hpp"
#include "multitile/oracle.hpp"
#include "multitile/patterns.hpp"
#include "multitile/render.hpp"

using namespace multitile;

namespace {

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

Box parse_window(const std::string& text) {
  std::vector<FieldElement> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) parts.push_back(parse_field_text(item));
  if (parts.size() != 4) throw ParseError("--window expects x0,y0,x1,y1");
  Box box{parts[0], parts[1], parts[2], parts[3]};
  if (!box.proper()) throw WindowError("window " + text + " is empty");
  return box;
}

VerifyMode parse_mode(const std::string& text) {
  if (text == "exact") return VerifyMode::exact;
  if (text == "sampled") return VerifyMode::sampled;
  throw ParseError("--mode must be exact or sampled");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multi-tiling decisions and checks for planar polygons"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string polygon_file, lattice_file, scene_file, output_file, window_text, mode_text, name,
      beta_text;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  long strip_from = 0, strip_to = 3;

  auto* decide = app.add_subcommand("decide", "decide whether a zonotope multi-tiles");
  decide->add_option("polygon", polygon_file, "zonotope JSON file")->required();
  decide->callback([&] {
    action = [&] {
      Decision d = decide_multitile(zonotope_from_json(read_json_file(polygon_file)));
      print(to_json(d));
      return d.multi_tiles ? kPositive : kNegative;
    };
  });

  auto* bolle = app.add_subcommand("bolle", "check Bolle's conditions for a zonotope and lattice");
  bolle->add_option("polygon", polygon_file, "zonotope JSON file")->required();
  bolle->add_option("lattice", lattice_file, "lattice JSON file")->required();
  bolle->callback([&] {
    action = [&] {
      BolleReport r = bolle_check(zonotope_from_json(read_json_file(polygon_file)),
                                  lattice_from_json(read_json_file(lattice_file)));
      print(to_json(r));
      return r.verdict ? kPositive : kNegative;
    };
  });

  auto* lp = app.add_subcommand("lp", "compute the canonical lattice L_P of a zonotope");
  lp->add_option("polygon", polygon_file, "zonotope JSON file")->required();
  lp->callback([&] {
    action = [&] {
      Zonotope z = zonotope_from_json(read_json_file(polygon_file));
      try {
        print(to_json(compute_LP(z)));
        return kPositive;
      } catch (const PreconditionError& e) {
        print(Json{{"defined", false}, {"reason", e.what()}});
        return kNegative;
      }
    };
  });

  auto* verify = app.add_subcommand("verify", "check that a scene covers the plane evenly");
  verify->add_option("scene", scene_file, "scene JSON file")->required();
  verify->add_option("--mode", mode_text, "exact or sampled (default: scene's, else exact)");
  verify->add_option("--samples", samples, "number of random points in sampled mode");
  verify->add_option("--seed", seed, "random seed for sampled mode");
  verify->callback([&] {
    action = [&] {
      SceneInput scene = scene_from_json(read_json_file(scene_file));
      VerifyOptions options;
      options.mode = scene.mode.value_or(VerifyMode::exact);
      if (!mode_text.empty()) options.mode = parse_mode(mode_text);
      options.samples = samples > 0 ? samples : scene.samples.value_or(1000);
      options.seed = seed;
      VerifyReport r = verify_multitiling(scene.polygon, scene.lambda, options);
      Json out = to_json(r);
      out["mode"] = options.mode == VerifyMode::exact ? "exact" : "sampled";
      print(out);
      return r.constant ? kPositive : kNegative;
    };
  });

  auto* render = app.add_subcommand("render", "draw a scene as SVG");
  render->add_option("scene", scene_file, "scene JSON file")->required();
  render->add_option("-o,--output", output_file, "output SVG path")->required();
  render->add_option("--window", window_text, "x0,y0,x1,y1");
  render->callback([&] {
    action = [&] {
      SceneInput scene = scene_from_json(read_json_file(scene_file));
      Box window = window_text.empty() ? default_render_window(scene.polygon, scene.lambda)
                                       : parse_window(window_text);
      std::string svg = render_svg(scene.polygon, scene.lambda, window);
      std::ofstream out(output_file, std::ios::binary);
      if (!out || !(out << svg) || !out.flush()) {
        std::cerr << "error: cannot write '" << output_file << "'\n";
        return kError;
      }
      return kPositive;
    };
  });

  auto* examples = app.add_subcommand("examples", "print the scene JSON of a builtin example");
  examples->add_option("name", name, "builtin name; omit to list them");
  examples->add_option("--beta", beta_text, "offset of the second coset (octagon-family)");
  examples->add_option("--window", window_text, "x0,y0,x1,y1 (tetromino patterns)");
  examples->callback([&] {
    action = [&] {
      if (name.empty()) {
        for (const std::string& n : builtin_names()) std::cout << n << "\n";
        return kPositive;
      }
      Box window = window_text.empty() ? default_window() : parse_window(window_text);
      FieldElement beta = beta_text.empty() ? FieldElement() : parse_field_text(beta_text);
      print(builtin_scene_json(name, window, beta));
      return kPositive;
    };
  });

  auto* strip = app.add_subcommand("strip", "covering profile on horizontal strips");
  strip->add_option("polygon", polygon_file, "polygon JSON file")->required();
  strip->add_option("lattice", lattice_file, "lattice JSON file")->required();
  strip->add_option("--from", strip_from, "first strip index n (strip is y in [n, n+1])");
  strip->add_option("--to", strip_to, "last strip index");
  strip->callback([&] {
    action = [&] {
      auto profile = strip_profile(polygon_from_json(read_json_file(polygon_file)),
                                   lattice_from_json(read_json_file(lattice_file)), strip_from,
                                   strip_to);
      print(to_json(profile));
      return kPositive;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kError;
  }
  try {
    return action ? action() : kError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kError;
  }
}
