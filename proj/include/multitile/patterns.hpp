#pragma once

// Built-in example scenes: the skew tetromino with its two tilings and the
// octagon family of non-lattice multi-tilings of multiplicity 7.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "multitile/oracle.hpp"

namespace multitile {

struct Scene {
  Polygon polygon;
  TranslateSet lambda;
};

// The 8-vertex union of four unit squares used by the tetromino examples.
Polygon tetromino();

// The octagon with vertices (1,0),(2,0),(3,1),(3,2),(2,3),(1,3),(0,2),(0,1).
Zonotope octagon();

// ((2Z \ {0}) x 2Z) u ({0} x (2Z + 1)), restricted to the window.
std::vector<PlaneVector> tetromino_lambda1(const Box& window);
// {(m,n) in (2Z)^2 : m >= n} u {(m,n) in (2Z - 1)^2 : m < n}, restricted to the window.
std::vector<PlaneVector> tetromino_lambda2(const Box& window);

const std::vector<std::string>& builtin_names();

// Names: tetromino-L1, tetromino-L2, tetromino-union, octagon-family. The
// window bounds the explicit tetromino patterns; beta is the horizontal
// offset of the second coset in the octagon family. Throws ParseError for an
// unknown name.
Scene builtin_pattern(const std::string& name, const Box& window, const FieldElement& beta);

Box default_window();

using PointGenerator = std::function<std::vector<PlaneVector>(const Box&)>;

// Integer vectors v != 0 with max(|v.x|, |v.y|) <= radius for which the
// point multiset is invariant under translation by v, as far as can be seen
// in the window (compared on window n (window + v)).
std::vector<PlaneVector> window_periods(const PointGenerator& points, const Box& window,
                                        long radius);

}  // namespace multitile
