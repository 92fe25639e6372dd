#pragma once

// Brute-force covering oracle: counts how many translates P + lambda contain
// a point, and certifies (or refutes) that this count is constant.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multitile/geometry.hpp"
#include "multitile/zonotope.hpp"

namespace multitile {

Polygon zonotope_polygon(const Zonotope& zonotope);

struct Coset {
  PlaneLattice lattice;
  PlaneVector offset;
  bool operator==(const Coset& o) const = default;
};

// A multiset of translation vectors: either a finite union of lattice cosets,
// or an explicit point list known only inside a window.
class TranslateSet {
 public:
  static TranslateSet periodic(std::vector<Coset> cosets);
  static TranslateSet explicit_points(std::string name, std::vector<PlaneVector> points,
                                      Box window);

  bool is_periodic() const { return !cosets_.empty(); }
  const std::vector<Coset>& cosets() const { return cosets_; }
  const std::string& name() const { return name_; }
  const std::vector<PlaneVector>& points() const { return points_; }
  const Box& window() const { return window_; }

  // All translation vectors in the closed box, with multiplicity. For an
  // explicit set the box must lie inside the window (WindowError otherwise).
  std::vector<PlaneVector> translates_in(const Box& box) const;

  TranslateSet shifted(const PlaneVector& v) const;

 private:
  std::vector<Coset> cosets_;
  std::string name_;
  std::vector<PlaneVector> points_;
  Box window_;
};

// Number of translates whose interior contains x. Throws BoundaryError when x
// is on the boundary of some translate.
std::int64_t covering_at(const Polygon& polygon, const TranslateSet& lambda, const PlaneVector& x);

// Common period lattice of a periodic set; IncommensurableError when the
// cosets' lattices do not share one.
PlaneLattice period_lattice(const TranslateSet& lambda);

enum class VerifyMode { exact, sampled };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::exact;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
};

struct Sample {
  PlaneVector point;
  std::int64_t count = 0;
};

struct VerifyReport {
  bool constant = false;
  std::optional<std::int64_t> multiplicity;
  std::optional<std::pair<Sample, Sample>> counterexample;
  std::size_t cells_checked = 0;
  bool window_relative = false;
  std::vector<PlaneVector> region;  // the cell or inner window that was checked
};

// Periodic sets are checked on one fundamental cell of the period lattice;
// explicit sets on the part of their window where every covering translate
// is known. Throws IncommensurableError or WindowError for unusable input.
VerifyReport verify_multitiling(const Polygon& polygon, const TranslateSet& lambda,
                                const VerifyOptions& options = {});

// The region verify_multitiling checks, as a counter-clockwise polygon.
std::vector<PlaneVector> verification_region(const Polygon& polygon, const TranslateSet& lambda);

// Translates of the polygon that can meet the given box.
std::vector<Polygon> translates_meeting(const Polygon& polygon, const TranslateSet& lambda,
                                        const Box& box);

struct StripEntry {
  long n = 0;
  FieldElement mean;                 // average covering over R x [n, n+1]
  std::optional<std::int64_t> count;  // the covering number if constant there
};

// Covering behaviour on horizontal strips R x [n, n+1], n_first <= n <= n_last.
// The lattice must contain a horizontal vector (PreconditionError otherwise).
std::vector<StripEntry> strip_profile(const Polygon& polygon, const PlaneLattice& lattice,
                                      long n_first, long n_last);

}  // namespace multitile
