#include "multitile/patterns.hpp"

#include <algorithm>

namespace multitile {

namespace {

PlaneVector iv(long x, long y) { return {x, y}; }

bool lex_less(const PlaneVector& a, const PlaneVector& b) {
  int c = compare(a.x, b.x);
  return c != 0 ? c < 0 : a.y < b.y;
}

// Integer range of the window's x or y extent.
std::pair<long, long> integer_range(const FieldElement& lo, const FieldElement& hi) {
  return {lo.ceil().get_si(), hi.floor().get_si()};
}

template <typename Pred>
std::vector<PlaneVector> integer_points(const Box& window, Pred keep) {
  std::vector<PlaneVector> out;
  auto [x0, x1] = integer_range(window.x0, window.x1);
  auto [y0, y1] = integer_range(window.y0, window.y1);
  for (long m = x0; m <= x1; ++m) {
    for (long n = y0; n <= y1; ++n) {
      if (keep(m, n)) out.push_back(iv(m, n));
    }
  }
  return out;
}

bool even(long v) { return v % 2 == 0; }

}  // namespace

Polygon tetromino() {
  return Polygon({iv(-1, -1), iv(0, -1), iv(0, 0), iv(1, 0), iv(1, 2), iv(0, 2), iv(0, 1),
                  iv(-1, 1)});
}

Zonotope octagon() {
  return Zonotope::from_vertices(
      {iv(1, 0), iv(2, 0), iv(3, 1), iv(3, 2), iv(2, 3), iv(1, 3), iv(0, 2), iv(0, 1)});
}

std::vector<PlaneVector> tetromino_lambda1(const Box& window) {
  return integer_points(window, [](long m, long n) {
    return (even(m) && m != 0 && even(n)) || (m == 0 && !even(n));
  });
}

std::vector<PlaneVector> tetromino_lambda2(const Box& window) {
  return integer_points(window, [](long m, long n) {
    return (even(m) && even(n) && m >= n) || (!even(m) && !even(n) && m < n);
  });
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"tetromino-L1", "tetromino-L2",
                                                 "tetromino-union", "octagon-family"};
  return names;
}

Box default_window() { return {-6, -6, 6, 6}; }

Scene builtin_pattern(const std::string& name, const Box& window, const FieldElement& beta) {
  if (name == "octagon-family") {
    PlaneLattice l = PlaneLattice::rectangular(1, 2);
    return {zonotope_polygon(octagon()),
            TranslateSet::periodic({{l, iv(0, 0)}, {l, PlaneVector(beta, 1)}})};
  }
  std::vector<PlaneVector> points;
  if (name == "tetromino-L1") {
    points = tetromino_lambda1(window);
  } else if (name == "tetromino-L2") {
    points = tetromino_lambda2(window);
  } else if (name == "tetromino-union") {
    points = tetromino_lambda1(window);
    std::vector<PlaneVector> second = tetromino_lambda2(window);
    points.insert(points.end(), second.begin(), second.end());
  } else {
    throw ParseError("unknown builtin pattern '" + name + "'");
  }
  return {tetromino(), TranslateSet::explicit_points(name, std::move(points), window)};
}

std::vector<PlaneVector> window_periods(const PointGenerator& generate, const Box& window,
                                        long radius) {
  std::vector<PlaneVector> all = generate(window);
  std::vector<PlaneVector> periods;
  for (long dx = -radius; dx <= radius; ++dx) {
    for (long dy = -radius; dy <= radius; ++dy) {
      if (dx == 0 && dy == 0) continue;
      const PlaneVector v = iv(dx, dy);
      const Box shifted = window.translated(v);
      const Box common{max(window.x0, shifted.x0), max(window.y0, shifted.y0),
                       min(window.x1, shifted.x1), min(window.y1, shifted.y1)};
      if (common.empty()) continue;
      std::vector<PlaneVector> original, moved;
      for (const PlaneVector& p : all) {
        if (common.contains(p)) original.push_back(p);
        PlaneVector q = p + v;
        if (common.contains(q)) moved.push_back(std::move(q));
      }
      std::sort(original.begin(), original.end(), lex_less);
      std::sort(moved.begin(), moved.end(), lex_less);
      if (original == moved) periods.push_back(v);
    }
  }
  return periods;
}

}  // namespace multitile
