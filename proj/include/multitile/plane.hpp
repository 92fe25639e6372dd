#pragma once

// Plane vectors and full-rank lattices over multi-quadratic coordinates.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multitile/qfield.hpp"

namespace multitile {

struct PlaneVector {
  FieldElement x;
  FieldElement y;

  PlaneVector() = default;
  PlaneVector(FieldElement x_, FieldElement y_) : x(std::move(x_)), y(std::move(y_)) {}

  bool is_zero() const { return x.is_zero() && y.is_zero(); }

  PlaneVector operator-() const { return {-x, -y}; }
  PlaneVector& operator+=(const PlaneVector& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  PlaneVector& operator-=(const PlaneVector& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend PlaneVector operator+(PlaneVector a, const PlaneVector& b) { return a += b; }
  friend PlaneVector operator-(PlaneVector a, const PlaneVector& b) { return a -= b; }
  friend PlaneVector operator*(const FieldElement& s, const PlaneVector& v) {
    return {s * v.x, s * v.y};
  }
  bool operator==(const PlaneVector& o) const { return x == o.x && y == o.y; }

  std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
};

FieldElement det(const PlaneVector& a, const PlaneVector& b);
FieldElement dot(const PlaneVector& a, const PlaneVector& b);

// Orientation of c relative to the directed line a -> b: +1 left, -1 right.
int orientation(const PlaneVector& a, const PlaneVector& b, const PlaneVector& c);

// Sign-normalizes v into the half-plane y > 0 or (y = 0 and x > 0).
PlaneVector upper_half_plane(const PlaneVector& v);

// A full-rank lattice kept in a canonical basis, so lattices with the same
// point set compare (and serialize) equal.
//
// When the lattice contains a nonzero horizontal vector the basis is the
// Hermite form b1 = (a, 0) with a > 0, b2 = (c, d) with d > 0 and 0 <= c < a.
// Otherwise it is the Gauss-reduced basis: b1 a shortest vector with y > 0,
// b2 the shortest partner with det(b1, b2) > 0, ties broken by smaller x and
// then smaller y.
class PlaneLattice {
 public:
  // Throws PreconditionError when the two vectors are linearly dependent.
  static PlaneLattice from_basis(const PlaneVector& b1, const PlaneVector& b2);
  // The standard lattice Z^2 scaled to a Z x b Z.
  static PlaneLattice rectangular(const FieldElement& a, const FieldElement& b);

  const PlaneVector& b1() const { return basis_[0]; }
  const PlaneVector& b2() const { return basis_[1]; }
  const std::array<PlaneVector, 2>& basis() const { return basis_; }

  // |det(b1, b2)|, the covolume.
  const FieldElement& determinant() const { return det_; }

  // Real coordinates c with c1*b1 + c2*b2 = v.
  std::array<FieldElement, 2> coordinates(const PlaneVector& v) const;
  // Integer coordinates when v is in the lattice.
  std::optional<std::array<Integer, 2>> integer_coordinates(const PlaneVector& v) const;
  // Rational coordinates when v lies in the rational span of the basis.
  std::optional<std::array<Rational, 2>> rational_coordinates(const PlaneVector& v) const;

  PlaneVector point(const Integer& c1, const Integer& c2) const;

  bool contains(const PlaneVector& v) const { return integer_coordinates(v).has_value(); }
  bool has_horizontal_vector() const { return basis_[0].y.is_zero(); }

  bool operator==(const PlaneLattice& other) const { return basis_ == other.basis_; }

  std::string to_string() const;

 private:
  PlaneLattice(PlaneVector b1, PlaneVector b2);
  std::array<PlaneVector, 2> basis_;
  FieldElement det_;
};

// Rank over Q of the vectors flattened to rational coordinates (one rational
// per coordinate per monomial).
std::size_t q_rank(std::span<const PlaneVector> vectors);

enum class SpanVerdict { lattice, not_discrete, rank_deficient };

struct SpanAnalysis {
  std::size_t q_rank = 0;
  SpanVerdict verdict = SpanVerdict::rank_deficient;
  std::optional<PlaneLattice> lattice;
};

// Decides whether span_Z(vectors) is a lattice and returns its basis.
SpanAnalysis zspan_lattice(std::span<const PlaneVector> vectors);

bool lattice_member(const PlaneLattice& lattice, const PlaneVector& v);
FieldElement lattice_det(const PlaneLattice& lattice);

// L1 and L2 must be commensurable; throws IncommensurableError otherwise.
PlaneLattice lattice_intersect(const PlaneLattice& l1, const PlaneLattice& l2);

// A full-rank sublattice of `lattice` missing the coset V + tau, where V is
// the subgroup generated by `v` (or {0} when absent).
PlaneLattice avoid_coset(const PlaneLattice& lattice, const std::optional<PlaneVector>& v,
                         const PlaneVector& tau);

// Decides "e in L and t*e + tau in L for some real t".
bool exact_condition2(const PlaneLattice& lattice, const PlaneVector& e, const PlaneVector& tau);

struct Superlattice {
  FieldElement t0;
  PlaneVector point;  // t0 * e + tau
  PlaneLattice lattice;
};

// For e in L with det(tau, e)/det(L) rational, a lattice containing L and a
// point of the line t*e + tau.
Superlattice condition2_superlattice(const PlaneLattice& lattice, const PlaneVector& e,
                                     const PlaneVector& tau);

}  // namespace multitile
