#include "multitile/criteria.hpp"

namespace multitile {

const char* to_string(Branch branch) {
  switch (branch) {
    case Branch::parallelogram:
      return "parallelogram";
    case Branch::odd:
      return "odd";
    case Branch::even:
      return "even";
  }
  return "?";
}

const char* to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::span_not_discrete:
      return "span-not-discrete";
    case FailureReason::det_ratio_irrational:
      return "det-ratio-irrational";
  }
  return "?";
}

BolleReport bolle_check(const Zonotope& polygon, const PlaneLattice& lattice) {
  BolleReport report;
  report.verdict = true;
  for (std::size_t j = 1; j <= polygon.size(); ++j) {
    PlaneVector e = polygon.edge(static_cast<long>(j));
    PlaneVector t = polygon.tau(static_cast<long>(j));
    PairRecord record;
    record.j = j;
    record.cond1 = lattice.contains(t);
    record.cond2 = lattice.contains(e) && exact_condition2(lattice, e, t);
    report.verdict = report.verdict && (record.cond1 || record.cond2);
    report.pairs.push_back(record);
  }
  if (report.verdict) {
    FieldElement k = polygon.area() / lattice_det(lattice);
    if (!k.is_integer()) {
      throw InternalConsistencyError("Bolle's conditions hold but area/det = " + k.to_string() +
                                     " is not an integer");
    }
    report.multiplicity = k.rational_value()->get_num();
  }
  return report;
}

SpanAnalysis tau_span_without(const Zonotope& polygon, std::size_t j) {
  std::vector<PlaneVector> taus;
  for (std::size_t k = 1; k <= polygon.size(); ++k) {
    if (k != j) taus.push_back(polygon.tau(static_cast<long>(k)));
  }
  return zspan_lattice(taus);
}

namespace {

void attach_witness(const Zonotope& polygon, Decision& decision, PlaneLattice witness) {
  BolleReport check = bolle_check(polygon, witness);
  if (!check.verdict) {
    throw InternalConsistencyError("witness lattice " + witness.to_string() +
                                   " fails Bolle's conditions");
  }
  decision.multi_tiles = true;
  decision.witness = std::move(witness);
  decision.witness_multiplicity = check.multiplicity;
}

}  // namespace

Decision decide_multitile(const Zonotope& polygon) {
  Decision decision;
  const std::size_t m = polygon.size();
  if (polygon.is_parallelogram()) {
    decision.branch = Branch::parallelogram;
    attach_witness(polygon, decision,
                   PlaneLattice::from_basis(polygon.generators()[0], polygon.generators()[1]));
    return decision;
  }
  if (m % 2 == 1) {
    decision.branch = Branch::odd;
    std::vector<PlaneVector> taus = polygon.tau_vectors();
    SpanAnalysis span = zspan_lattice(taus);
    if (span.verdict != SpanVerdict::lattice) {
      decision.failure = FailureReason::span_not_discrete;
      return decision;
    }
    attach_witness(polygon, decision, std::move(*span.lattice));
    return decision;
  }

  decision.branch = Branch::even;
  bool any_lattice = false;
  std::optional<PlaneLattice> first_witness;
  for (std::size_t j = 1; j <= m; ++j) {
    SpanAnalysis span = tau_span_without(polygon, j);
    if (span.verdict != SpanVerdict::lattice) continue;
    any_lattice = true;
    const PlaneVector e = polygon.edge(static_cast<long>(j));
    const PlaneVector t = polygon.tau(static_cast<long>(j));
    if (!(det(e, t) / lattice_det(*span.lattice)).is_rational()) continue;
    decision.accepted.push_back(j);
    if (!first_witness) {
      decision.j0 = j;
      first_witness = condition2_superlattice(*span.lattice, e, t).lattice;
    }
  }
  if (first_witness) {
    attach_witness(polygon, decision, std::move(*first_witness));
  } else {
    decision.failure =
        any_lattice ? FailureReason::det_ratio_irrational : FailureReason::span_not_discrete;
  }
  return decision;
}

LPResult compute_LP(const Zonotope& polygon) {
  if (polygon.is_parallelogram()) {
    throw PreconditionError("L_P is not defined for parallelograms");
  }
  Decision decision = decide_multitile(polygon);
  if (!decision.multi_tiles) {
    throw PreconditionError("L_P is only defined for polygons that multi-tile");
  }
  const std::size_t m = polygon.size();
  if (m % 2 == 1) {
    std::vector<PlaneVector> taus = polygon.tau_vectors();
    SpanAnalysis span = zspan_lattice(taus);
    return {std::move(*span.lattice), true, {}};
  }
  std::optional<PlaneLattice> acc;
  std::vector<std::size_t> contributing;
  for (std::size_t j = 1; j <= m; ++j) {
    SpanAnalysis span = tau_span_without(polygon, j);
    if (span.verdict != SpanVerdict::lattice) continue;
    contributing.push_back(j);
    acc = acc ? lattice_intersect(*acc, *span.lattice) : std::move(*span.lattice);
  }
  if (!acc) throw InternalConsistencyError("multi-tiling polygon with no lattice Lambda_j");
  return {std::move(*acc), false, std::move(contributing)};
}

Integer lattice_multiplicity(const Zonotope& polygon, const PlaneLattice& lattice,
                             const Integer& n_translates) {
  if (n_translates <= 0) throw PreconditionError("translate count must be positive");
  FieldElement k = FieldElement(Rational(n_translates)) * polygon.area() / lattice_det(lattice);
  if (!k.is_integer()) {
    throw AccountingError("n * area / det = " + k.to_string() + " is not an integer");
  }
  return k.rational_value()->get_num();
}

}  // namespace multitile
