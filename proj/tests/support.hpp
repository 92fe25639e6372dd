#pragma once

// Shared helpers for tests: seeded random instances and brute-force oracles
// that avoid the library code paths they check.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "multitile/criteria.hpp"
#include "multitile/geometry.hpp"
#include "multitile/oracle.hpp"
#include "multitile/plane.hpp"
#include "multitile/zonotope.hpp"

namespace testing_support {

using namespace multitile;

inline FieldElement q(long num, long den = 1) { return FieldElement(Rational(num, den)); }
inline PlaneVector v(long x, long y) { return {x, y}; }
inline PlaneVector vq(long xn, long xd, long yn, long yd) { return {q(xn, xd), q(yn, yd)}; }

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Rational rational(long bound, long max_den) {
    long den = uniform(1, max_den);
    Rational r(uniform(-bound * den, bound * den), den);
    r.canonicalize();
    return r;
  }

  // Random element of Q(sqrt r : r in radicands) with small coefficients;
  // each basis monomial appears with probability 1/2.
  FieldElement element(const FieldDescriptor& field, long bound, long max_den) {
    FieldElement out;
    for (std::size_t mask = 0; mask < field.degree(); ++mask) {
      if (mask != 0 && !coin()) continue;
      out += FieldElement(rational(bound, max_den)) * field.monomial(mask);
    }
    return out;
  }

  PlaneVector vector(const FieldDescriptor& field, long bound, long max_den) {
    return {element(field, bound, max_den), element(field, bound, max_den)};
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Random zonotope from m random generators over the field, ordered by argument.
inline Zonotope random_zonotope(Random& rng, const FieldDescriptor& field, std::size_t m,
                                long bound, long max_den) {
  for (;;) {
    std::vector<PlaneVector> gens;
    for (std::size_t i = 0; i < m; ++i) gens.push_back(rng.vector(field, bound, max_den));
    try {
      return Zonotope::from_unordered_generators(gens);
    } catch (const ConstructionError&) {
      // zero or colinear draw; try again
    }
  }
}

// Random centrally symmetric convex polygon with vertices in (1/unit) Z^2
// inside [-bound, bound]^2, built by walking edge vectors in argument order.
inline Zonotope random_lattice_zonotope(Random& rng, long unit, long bound, std::size_t min_m,
                                        std::size_t max_m, long max_step) {
  const FieldElement scale(Rational(1, unit));
  for (;;) {
    std::size_t m = static_cast<std::size_t>(
        rng.uniform(static_cast<long>(min_m), static_cast<long>(max_m)));
    std::vector<PlaneVector> gens;
    for (std::size_t i = 0; i < m; ++i) {
      gens.push_back(scale * v(rng.uniform(-max_step, max_step), rng.uniform(-max_step, max_step)));
    }
    std::optional<Zonotope> z;
    try {
      z = Zonotope::from_unordered_generators(gens);
    } catch (const ConstructionError&) {
      continue;
    }
    // Put the lowest vertex on a grid point so that every vertex is one.
    PlaneVector start = scale * v(rng.uniform(-bound * unit, bound * unit),
                                  rng.uniform(-bound * unit, bound * unit));
    PlaneVector sum(0, 0);
    for (const PlaneVector& g : z->generators()) sum += g;
    PlaneVector center = start + FieldElement(Rational(1, 2)) * sum;
    Zonotope placed = Zonotope::from_generators(z->generators(), center);
    bool inside = true;
    for (const PlaneVector& p : placed.vertices()) {
      if (p.x < q(-bound) || p.x > q(bound) || p.y < q(-bound) || p.y > q(bound)) inside = false;
    }
    if (inside) return placed;
  }
}

// Shoelace area straight from the vertex list.
inline FieldElement shoelace(const std::vector<PlaneVector>& vs) {
  FieldElement twice;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const PlaneVector& a = vs[i];
    const PlaneVector& b = vs[(i + 1) % vs.size()];
    twice += a.x * b.y - a.y * b.x;
  }
  return (FieldElement(Rational(1, 2)) * twice).abs();
}

// Lattice points in a box, scanning every coefficient pair whose point can
// lie in it: coordinates are linear, so their extremes over the box occur at
// corners.
inline std::vector<PlaneVector> brute_points(const PlaneLattice& l, const Box& box) {
  std::optional<Integer> lo[2], hi[2];
  for (const PlaneVector& c : box.corners()) {
    auto coords = l.coordinates(c);
    for (int i = 0; i < 2; ++i) {
      Integer f = coords[i].floor(), g = coords[i].ceil();
      if (!lo[i] || f < *lo[i]) lo[i] = f;
      if (!hi[i] || g > *hi[i]) hi[i] = g;
    }
  }
  std::vector<PlaneVector> out;
  for (Integer a = *lo[0]; a <= *hi[0]; ++a) {
    for (Integer b = *lo[1]; b <= *hi[1]; ++b) {
      PlaneVector p = l.point(a, b);
      if (box.contains(p)) out.push_back(p);
    }
  }
  return out;
}

inline bool lex_less(const PlaneVector& a, const PlaneVector& b) {
  int c = compare(a.x, b.x);
  return c != 0 ? c < 0 : a.y < b.y;
}

inline std::vector<PlaneVector> sorted(std::vector<PlaneVector> vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  return vs;
}

// Same point set: each basis lies in the other lattice.
inline bool same_lattice(const PlaneLattice& a, const PlaneLattice& b) {
  return b.contains(a.b1()) && b.contains(a.b2()) && a.contains(b.b1()) && a.contains(b.b2());
}

// Searches lattice points m*b1 + n*b2, |m|, |n| <= bound, on the line
// t*e + tau.
inline bool line_hits_lattice(const PlaneLattice& l, const PlaneVector& e, const PlaneVector& tau,
                              long bound) {
  for (long m = -bound; m <= bound; ++m) {
    for (long n = -bound; n <= bound; ++n) {
      if (det(l.point(m, n) - tau, e).is_zero()) return true;
    }
  }
  return false;
}

// tau_j from the vertex walk: midpoint of the opposite edge minus midpoint of
// edge j, where edge j runs from vertex j-1 to vertex j (0-based vertices).
inline PlaneVector tau_from_vertices(const std::vector<PlaneVector>& vs, std::size_t j) {
  const std::size_t n = vs.size();
  const std::size_t m = n / 2;
  const FieldElement half(Rational(1, 2));
  PlaneVector mid = half * (vs[j - 1] + vs[j % n]);
  PlaneVector opposite = half * (vs[(j - 1 + m) % n] + vs[(j + m) % n]);
  return opposite - mid;
}

}  // namespace testing_support
