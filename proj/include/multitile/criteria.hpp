#pragma once

// Lattice multi-tiling criteria for zonotopes: Bolle's per-edge-pair test,
// the existence decision with a witness lattice, and the canonical lattice L_P.

#include <optional>
#include <vector>

#include "multitile/plane.hpp"
#include "multitile/zonotope.hpp"

namespace multitile {

struct PairRecord {
  std::size_t j = 0;  // 1-based edge index
  bool cond1 = false;  // tau_j in L
  bool cond2 = false;  // e_j in L and some t*e_j + tau_j in L
};

struct BolleReport {
  std::vector<PairRecord> pairs;
  bool verdict = false;
  std::optional<Integer> multiplicity;  // area / det(L) when verdict holds
};

BolleReport bolle_check(const Zonotope& polygon, const PlaneLattice& lattice);

enum class Branch { parallelogram, odd, even };
enum class FailureReason { span_not_discrete, det_ratio_irrational };

const char* to_string(Branch branch);
const char* to_string(FailureReason reason);

struct Decision {
  bool multi_tiles = false;
  Branch branch = Branch::parallelogram;
  std::optional<std::size_t> j0;      // even branch: the index used for the witness
  std::vector<std::size_t> accepted;  // even branch: every index that would work
  std::optional<PlaneLattice> witness;
  std::optional<Integer> witness_multiplicity;
  std::optional<FailureReason> failure;
};

Decision decide_multitile(const Zonotope& polygon);

struct LPResult {
  PlaneLattice lattice;
  bool from_tau_span = false;              // odd m: the span of all tau_j
  std::vector<std::size_t> contributing;   // even m: indices j with Lambda_j a lattice
};

// Throws PreconditionError for parallelograms and non-multi-tiling polygons.
LPResult compute_LP(const Zonotope& polygon);

// n * area / det(L); throws AccountingError when not an integer.
Integer lattice_multiplicity(const Zonotope& polygon, const PlaneLattice& lattice,
                             const Integer& n_translates);

// Z-span of all tau_k with k != j (1-based).
SpanAnalysis tau_span_without(const Zonotope& polygon, std::size_t j);

}  // namespace multitile
