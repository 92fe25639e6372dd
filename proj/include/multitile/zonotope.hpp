#pragma once

// Planar zonotopes: centrally symmetric convex 2m-gons given by generators.

#include <utility>
#include <vector>

#include "multitile/plane.hpp"

namespace multitile {

class Zonotope {
 public:
  // Generators are sign-normalized into the upper half-plane and must then
  // have strictly increasing arguments. Throws ConstructionError naming the
  // offending (1-based) index.
  static Zonotope from_generators(std::vector<PlaneVector> generators,
                                  PlaneVector center = PlaneVector(0, 0));
  // Same, but sorts the normalized generators by argument first.
  static Zonotope from_unordered_generators(std::vector<PlaneVector> generators,
                                            PlaneVector center = PlaneVector(0, 0));
  // A cyclically ordered, centrally symmetric, strictly convex vertex list.
  // Throws SymmetryError otherwise.
  static Zonotope from_vertices(const std::vector<PlaneVector>& vertices);

  std::size_t size() const { return generators_.size(); }
  const std::vector<PlaneVector>& generators() const { return generators_; }
  const PlaneVector& center() const { return center_; }

  // e_j for any integer j (1-based) with e_{j+m} = -e_j.
  PlaneVector edge(long j) const;
  // tau_j = e_{j+1} + ... + e_{j+m-1}, for any integer j (1-based), so that
  // tau_{j+m} = -tau_j.
  PlaneVector tau(long j) const;
  std::vector<PlaneVector> tau_vectors() const;

  // Coefficients (index in 1..m, sign) of the alternating combination of
  // tau_{j'}, j' != j, that equals e_j. Only defined for even m >= 4.
  std::vector<std::pair<std::size_t, int>> even_representation(std::size_t j) const;

  // Counter-clockwise, starting at the vertex center - (e_1 + ... + e_m)/2.
  std::vector<PlaneVector> vertices() const;
  FieldElement area() const;
  bool is_parallelogram() const { return generators_.size() == 2; }

  bool operator==(const Zonotope& other) const {
    return generators_ == other.generators_ && center_ == other.center_;
  }

 private:
  Zonotope(std::vector<PlaneVector> generators, PlaneVector center)
      : generators_(std::move(generators)), center_(std::move(center)) {}
  std::vector<PlaneVector> generators_;
  PlaneVector center_;
};

}  // namespace multitile
