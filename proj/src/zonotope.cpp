#include "multitile/zonotope.hpp"

#include <algorithm>

namespace multitile {

namespace {

std::string index_label(std::size_t i) { return "generator " + std::to_string(i + 1); }

}  // namespace

Zonotope Zonotope::from_generators(std::vector<PlaneVector> generators, PlaneVector center) {
  const std::size_t m = generators.size();
  if (m < 2) throw ConstructionError("a zonotope needs at least 2 generators");
  for (std::size_t i = 0; i < m; ++i) {
    if (generators[i].is_zero()) throw ConstructionError(index_label(i) + " is zero");
    generators[i] = upper_half_plane(generators[i]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (det(generators[i], generators[j]).is_zero()) {
        throw ConstructionError(index_label(j) + " is colinear with " + index_label(i));
      }
    }
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (det(generators[i], generators[i + 1]).sign() <= 0) {
      throw ConstructionError(index_label(i + 1) + " does not have a larger argument than " +
                              index_label(i));
    }
  }
  if (det(generators[0], generators[m - 1]).sign() <= 0) {
    throw ConstructionError(index_label(m - 1) + " leaves the half-plane started by generator 1");
  }
  return Zonotope(std::move(generators), std::move(center));
}

Zonotope Zonotope::from_unordered_generators(std::vector<PlaneVector> generators,
                                             PlaneVector center) {
  for (PlaneVector& g : generators) {
    if (!g.is_zero()) g = upper_half_plane(g);
  }
  // In the upper half-plane, "a before b" is det(a, b) > 0; zero vectors and
  // colinear pairs are left for from_generators to report.
  std::stable_sort(generators.begin(), generators.end(),
                   [](const PlaneVector& a, const PlaneVector& b) {
                     if (a.is_zero() || b.is_zero()) return false;
                     return det(a, b).sign() > 0;
                   });
  return from_generators(std::move(generators), std::move(center));
}

Zonotope Zonotope::from_vertices(const std::vector<PlaneVector>& input) {
  const std::size_t n = input.size();
  if (n < 4 || n % 2 != 0) {
    throw SymmetryError("a centrally symmetric polygon needs an even number (>= 4) of vertices, got " +
                        std::to_string(n));
  }
  const std::size_t m = n / 2;
  const PlaneVector doubled_center = input[0] + input[m];
  for (std::size_t i = 1; i < m; ++i) {
    if (!(input[i] + input[i + m] == doubled_center)) {
      throw SymmetryError("vertices " + std::to_string(i + 1) + " and " +
                          std::to_string(i + m + 1) + " are not symmetric about the center");
    }
  }
  std::vector<PlaneVector> vertices = input;
  int turn = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int o = orientation(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]);
    if (o == 0 || (turn != 0 && o != turn)) {
      throw SymmetryError("polygon is not strictly convex at vertex " +
                          std::to_string((i + 1) % n + 1));
    }
    turn = o;
  }
  if (turn < 0) std::reverse(vertices.begin(), vertices.end());

  std::vector<PlaneVector> edges;
  for (std::size_t i = 0; i < m; ++i) edges.push_back(vertices[i + 1] - vertices[i]);
  FieldElement half(Rational(1, 2));
  Zonotope z = from_unordered_generators(std::move(edges), half * doubled_center);

  // Convex turning alone admits star polygons; the rebuilt outline must match.
  std::vector<PlaneVector> rebuilt = z.vertices();
  auto start = std::find(rebuilt.begin(), rebuilt.end(), vertices[0]);
  if (start == rebuilt.end()) throw SymmetryError("vertex list is not a simple convex polygon");
  std::rotate(rebuilt.begin(), start, rebuilt.end());
  if (rebuilt != vertices) throw SymmetryError("vertex list is not a simple convex polygon");
  return z;
}

PlaneVector Zonotope::edge(long j) const {
  const long m = static_cast<long>(generators_.size());
  long k = ((j - 1) % (2 * m) + 2 * m) % (2 * m);
  return k < m ? generators_[static_cast<std::size_t>(k)]
               : -generators_[static_cast<std::size_t>(k - m)];
}

PlaneVector Zonotope::tau(long j) const {
  const long m = static_cast<long>(generators_.size());
  PlaneVector sum(0, 0);
  for (long k = j + 1; k <= j + m - 1; ++k) sum += edge(k);
  return sum;
}

std::vector<PlaneVector> Zonotope::tau_vectors() const {
  std::vector<PlaneVector> out;
  for (std::size_t j = 1; j <= generators_.size(); ++j) out.push_back(tau(static_cast<long>(j)));
  return out;
}

std::vector<std::pair<std::size_t, int>> Zonotope::even_representation(std::size_t j) const {
  const std::size_t m = generators_.size();
  if (m < 4 || m % 2 != 0) {
    throw PreconditionError("the alternating tau representation needs even m >= 4");
  }
  if (j < 1 || j > m) throw PreconditionError("edge index out of range");
  // e_j = -tau_{j+1} + sum_{k=0}^{(m-4)/2} (tau_{j+2+2k} - tau_{j+3+2k}),
  // with tau_{n+m} = -tau_n.
  std::vector<std::pair<std::size_t, int>> out;
  auto push = [&](std::size_t index, int sign) {
    if (index > m) {
      index -= m;
      sign = -sign;
    }
    out.emplace_back(index, sign);
  };
  push(j + 1, -1);
  for (std::size_t k = 0; k <= (m - 4) / 2; ++k) {
    push(j + 2 + 2 * k, +1);
    push(j + 3 + 2 * k, -1);
  }
  return out;
}

std::vector<PlaneVector> Zonotope::vertices() const {
  PlaneVector sum(0, 0);
  for (const PlaneVector& g : generators_) sum += g;
  PlaneVector v = center_ - FieldElement(Rational(1, 2)) * sum;
  std::vector<PlaneVector> out;
  const long m = static_cast<long>(generators_.size());
  for (long k = 1; k <= 2 * m; ++k) {
    out.push_back(v);
    v += edge(k);
  }
  return out;
}

FieldElement Zonotope::area() const {
  FieldElement total;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      total += det(generators_[i], generators_[j]).abs();
    }
  }
  return total;
}

}  // namespace multitile
