#include "multitile/plane.hpp"

#include <algorithm>
#include <map>

#include "multitile/hnf.hpp"

namespace multitile {

namespace {

FieldElement from_integer(const Integer& n) { return FieldElement(Rational(n)); }

PlaneVector scaled(const Integer& k, const PlaneVector& v) { return from_integer(k) * v; }

FieldElement norm2(const PlaneVector& v) { return dot(v, v); }

// Lexicographic (x, y) order on exact coordinates.
bool lex_less(const PlaneVector& a, const PlaneVector& b) {
  int cx = compare(a.x, b.x);
  if (cx != 0) return cx < 0;
  return compare(a.y, b.y) < 0;
}

std::array<PlaneVector, 2> hermite_basis(const PlaneVector& b1, const PlaneVector& b2,
                                         const Integer& p, const Integer& q) {
  // (p, q) is primitive; complete it to a unimodular matrix [[p, q], [s, t]].
  Integer x, y;
  extended_gcd(p, q, x, y);
  PlaneVector h = scaled(p, b1) + scaled(q, b2);
  PlaneVector w = scaled(-y, b1) + scaled(x, b2);
  if (h.x.sign() < 0) h = -h;
  if (w.y.sign() < 0) w = -w;
  Integer k = (w.x / h.x).floor();
  if (k != 0) w -= scaled(k, h);
  return {h, w};
}

std::array<PlaneVector, 2> gauss_basis(PlaneVector b1, PlaneVector b2) {
  for (;;) {
    if (norm2(b2) < norm2(b1)) std::swap(b1, b2);
    Integer mu = (dot(b1, b2) / norm2(b1)).round();
    if (mu == 0) break;
    b2 -= scaled(mu, b1);
  }
  const FieldElement covolume = det(b1, b2).abs();
  const std::array<PlaneVector, 8> candidates = {b1, -b1, b2, -b2, b1 + b2, -(b1 + b2),
                                                 b1 - b2, b2 - b1};

  auto better = [](const PlaneVector& a, const FieldElement& na, const PlaneVector& b,
                   const FieldElement& nb) {
    int c = compare(na, nb);
    if (c != 0) return c < 0;
    return lex_less(a, b);
  };

  std::optional<PlaneVector> first;
  FieldElement first_norm;
  for (const PlaneVector& v : candidates) {
    if (v.y.sign() <= 0) continue;
    FieldElement n = norm2(v);
    if (!first || better(v, n, *first, first_norm)) {
      first = v;
      first_norm = n;
    }
  }
  std::optional<PlaneVector> second;
  FieldElement second_norm;
  for (const PlaneVector& v : candidates) {
    if (det(*first, v) != covolume) continue;
    FieldElement n = norm2(v);
    if (!second || better(v, n, *second, second_norm)) {
      second = v;
      second_norm = n;
    }
  }
  if (!second) throw InternalConsistencyError("Gauss reduction lost a basis partner");
  return {*first, *second};
}

std::array<PlaneVector, 2> canonical_basis(const PlaneVector& b1, const PlaneVector& b2) {
  if (b1.y.is_zero()) return hermite_basis(b1, b2, 1, 0);
  if (b2.y.is_zero()) return hermite_basis(b1, b2, 0, 1);
  if (auto r = (b1.y / b2.y).rational_value()) {
    // den * y1 - num * y2 = 0
    return hermite_basis(b1, b2, r->get_den(), -r->get_num());
  }
  return gauss_basis(b1, b2);
}

}  // namespace

FieldElement det(const PlaneVector& a, const PlaneVector& b) { return a.x * b.y - a.y * b.x; }

FieldElement dot(const PlaneVector& a, const PlaneVector& b) { return a.x * b.x + a.y * b.y; }

int orientation(const PlaneVector& a, const PlaneVector& b, const PlaneVector& c) {
  return det(b - a, c - a).sign();
}

PlaneVector upper_half_plane(const PlaneVector& v) {
  int sy = v.y.sign();
  if (sy < 0 || (sy == 0 && v.x.sign() < 0)) return -v;
  return v;
}

// ---------------------------------------------------------------------------
// PlaneLattice

PlaneLattice::PlaneLattice(PlaneVector b1, PlaneVector b2)
    : basis_{std::move(b1), std::move(b2)}, det_(det(basis_[0], basis_[1])) {}

PlaneLattice PlaneLattice::from_basis(const PlaneVector& b1, const PlaneVector& b2) {
  if (det(b1, b2).is_zero()) {
    throw PreconditionError("lattice basis vectors " + b1.to_string() + " and " +
                            b2.to_string() + " are linearly dependent");
  }
  auto [c1, c2] = canonical_basis(b1, b2);
  PlaneLattice out(std::move(c1), std::move(c2));
  if (out.det_.sign() <= 0) throw InternalConsistencyError("canonical basis has det <= 0");
  return out;
}

PlaneLattice PlaneLattice::rectangular(const FieldElement& a, const FieldElement& b) {
  return from_basis({a, 0}, {0, b});
}

std::array<FieldElement, 2> PlaneLattice::coordinates(const PlaneVector& v) const {
  return {det(v, basis_[1]) / det_, det(basis_[0], v) / det_};
}

std::optional<std::array<Rational, 2>> PlaneLattice::rational_coordinates(
    const PlaneVector& v) const {
  auto c = coordinates(v);
  auto c1 = c[0].rational_value();
  auto c2 = c[1].rational_value();
  if (!c1 || !c2) return std::nullopt;
  return std::array<Rational, 2>{*c1, *c2};
}

std::optional<std::array<Integer, 2>> PlaneLattice::integer_coordinates(
    const PlaneVector& v) const {
  auto c = rational_coordinates(v);
  if (!c || (*c)[0].get_den() != 1 || (*c)[1].get_den() != 1) return std::nullopt;
  return std::array<Integer, 2>{(*c)[0].get_num(), (*c)[1].get_num()};
}

PlaneVector PlaneLattice::point(const Integer& c1, const Integer& c2) const {
  return scaled(c1, basis_[0]) + scaled(c2, basis_[1]);
}

std::string PlaneLattice::to_string() const {
  return "span{" + basis_[0].to_string() + ", " + basis_[1].to_string() + "}";
}

// ---------------------------------------------------------------------------

std::size_t q_rank(std::span<const PlaneVector> vectors) {
  std::map<std::uint64_t, std::size_t> column;
  for (const PlaneVector& v : vectors) {
    for (const auto& t : v.x.terms()) column.emplace(t.radicand, 0);
    for (const auto& t : v.y.terms()) column.emplace(t.radicand, 0);
  }
  std::size_t next = 0;
  for (auto& [radicand, index] : column) index = next++;
  std::vector<std::vector<Rational>> rows(vectors.size(),
                                          std::vector<Rational>(2 * column.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (const auto& t : vectors[i].x.terms()) rows[i][2 * column[t.radicand]] = t.coeff;
    for (const auto& t : vectors[i].y.terms()) rows[i][2 * column[t.radicand] + 1] = t.coeff;
  }
  return rational_rank(std::move(rows));
}

SpanAnalysis zspan_lattice(std::span<const PlaneVector> vectors) {
  SpanAnalysis out;
  out.q_rank = q_rank(vectors);
  if (out.q_rank > 2) {
    out.verdict = SpanVerdict::not_discrete;
    return out;
  }
  std::optional<std::pair<std::size_t, std::size_t>> frame;
  for (std::size_t i = 0; i < vectors.size() && !frame; ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      if (!det(vectors[i], vectors[j]).is_zero()) {
        frame = {i, j};
        break;
      }
    }
  }
  if (!frame) {
    out.verdict = SpanVerdict::rank_deficient;
    return out;
  }

  // With rational rank 2, every generator is a rational combination of the
  // two frame vectors.
  const PlaneVector& g1 = vectors[frame->first];
  const PlaneVector& g2 = vectors[frame->second];
  const FieldElement d = det(g1, g2);
  std::vector<std::array<Rational, 2>> coords;
  Integer common_den = 1;
  for (const PlaneVector& v : vectors) {
    auto a = (det(v, g2) / d).rational_value();
    auto b = (det(g1, v) / d).rational_value();
    if (!a || !b) throw InternalConsistencyError("rank-2 span with irrational frame coordinates");
    mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), a->get_den_mpz_t());
    mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), b->get_den_mpz_t());
    coords.push_back({*a, *b});
  }
  IntegerMatrix m;
  for (const auto& c : coords) {
    Rational a = c[0] * common_den;
    Rational b = c[1] * common_den;
    m.push_back({a.get_num(), b.get_num()});
  }
  HermiteForm hf = hermite_normal_form(m);
  if (hf.rank != 2) throw InternalConsistencyError("rank-2 span produced a degenerate HNF");
  const FieldElement inv_den(Rational(Integer(1), common_den));
  auto to_vector = [&](const std::vector<Integer>& row) {
    return inv_den * (scaled(row[0], g1) + scaled(row[1], g2));
  };
  out.verdict = SpanVerdict::lattice;
  out.lattice = PlaneLattice::from_basis(to_vector(hf.form[0]), to_vector(hf.form[1]));
  return out;
}

bool lattice_member(const PlaneLattice& lattice, const PlaneVector& v) {
  return lattice.contains(v);
}

FieldElement lattice_det(const PlaneLattice& lattice) { return lattice.determinant().abs(); }

PlaneLattice lattice_intersect(const PlaneLattice& l1, const PlaneLattice& l2) {
  auto c1 = l1.rational_coordinates(l2.b1());
  auto c2 = l1.rational_coordinates(l2.b2());
  if (!c1 || !c2) {
    throw IncommensurableError("lattices " + l1.to_string() + " and " + l2.to_string() +
                               " are not commensurable");
  }
  // Points of L2 in L1 coordinates are M a for a in Z^2; solve D c = (D M) a.
  Integer d = 1;
  for (const Rational* q : {&(*c1)[0], &(*c1)[1], &(*c2)[0], &(*c2)[1]}) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q->get_den_mpz_t());
  }
  auto scaled_entry = [&](const Rational& q) { return Rational(q * d).get_num(); };
  IntegerMatrix relation = {
      {d, 0, -scaled_entry((*c1)[0]), -scaled_entry((*c2)[0])},
      {0, d, -scaled_entry((*c1)[1]), -scaled_entry((*c2)[1])},
  };
  IntegerMatrix kernel = integer_kernel(relation);
  if (kernel.size() != 2) throw InternalConsistencyError("intersection kernel is not rank 2");
  return PlaneLattice::from_basis(l1.point(kernel[0][0], kernel[0][1]),
                                  l1.point(kernel[1][0], kernel[1][1]));
}

namespace {

bool in_cyclic_group(const std::optional<PlaneVector>& v, const PlaneVector& p) {
  if (!v) return p.is_zero();
  if (!det(*v, p).is_zero()) return false;
  FieldElement k = v->x.is_zero() ? p.y / v->y : p.x / v->x;
  return k.is_integer();
}

// The shorter basis vector of L not parallel to `direction`.
PlaneVector completion_vector(const PlaneLattice& lattice, const PlaneVector& direction) {
  const PlaneVector& a = lattice.b1();
  const PlaneVector& b = lattice.b2();
  bool a_ok = !det(a, direction).is_zero();
  bool b_ok = !det(b, direction).is_zero();
  if (a_ok && b_ok) return norm2(b) < norm2(a) ? b : a;
  return a_ok ? a : b;
}

}  // namespace

PlaneLattice avoid_coset(const PlaneLattice& lattice, const std::optional<PlaneVector>& v,
                         const PlaneVector& tau) {
  if (!lattice.contains(tau)) throw PreconditionError("tau is not in the lattice");
  if (v && (v->is_zero() || !lattice.contains(*v))) {
    throw PreconditionError("the subgroup generator must be a nonzero lattice vector");
  }
  if (in_cyclic_group(v, tau)) throw PreconditionError("tau lies in the subgroup V");

  if (!v) {
    PlaneVector twice = FieldElement(2) * tau;
    return PlaneLattice::from_basis(twice, completion_vector(lattice, tau));
  }
  if (det(*v, tau).is_zero()) {
    // tau is on the line of V but not in V; V plus any independent vector
    // meets that line exactly in V.
    return PlaneLattice::from_basis(*v, completion_vector(lattice, *v));
  }
  return PlaneLattice::from_basis(*v, FieldElement(2) * tau);
}

bool exact_condition2(const PlaneLattice& lattice, const PlaneVector& e, const PlaneVector& tau) {
  auto ec = lattice.integer_coordinates(e);
  if (!ec) return false;
  const Integer& e1 = (*ec)[0];
  const Integer& e2 = (*ec)[1];
  if (e1 == 0 && e2 == 0) return lattice.contains(tau);
  auto tc = lattice.coordinates(tau);
  // The line t*e + tau meets Z^2 (in lattice coordinates) at (m, n) iff
  // e1*n - e2*m = det(e, tau); solvable iff that value is an integer
  // divisible by gcd(e1, e2).
  FieldElement d = from_integer(e1) * tc[1] - from_integer(e2) * tc[0];
  if (!d.is_integer()) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), e1.get_mpz_t(), e2.get_mpz_t());
  Integer dn = d.rational_value()->get_num();
  return mpz_divisible_p(dn.get_mpz_t(), g.get_mpz_t()) != 0;
}

Superlattice condition2_superlattice(const PlaneLattice& lattice, const PlaneVector& e,
                                     const PlaneVector& tau) {
  auto ec = lattice.integer_coordinates(e);
  if (!ec) throw PreconditionError("e is not in the lattice");
  if (e.is_zero()) throw PreconditionError("e must be nonzero");
  FieldElement ratio = det(tau, e) / lattice_det(lattice);
  if (!ratio.is_rational()) {
    throw RationalityError("det(tau, e)/det(L) = " + ratio.to_string() + " is irrational");
  }
  // Foot of the perpendicular from the line t*e + tau, taken in lattice
  // coordinates (where L is Z^2) so the foot is a rational point.
  PlaneVector ebar(from_integer((*ec)[0]), from_integer((*ec)[1]));
  auto tc = lattice.coordinates(tau);
  PlaneVector taubar(tc[0], tc[1]);
  FieldElement t0 = -dot(taubar, ebar) / dot(ebar, ebar);
  PlaneVector point = t0 * e + tau;

  std::array<PlaneVector, 3> generators = {lattice.b1(), lattice.b2(), point};
  SpanAnalysis span = zspan_lattice(generators);
  if (span.verdict != SpanVerdict::lattice) {
    throw InternalConsistencyError("superlattice generators do not span a lattice");
  }
  return {std::move(t0), std::move(point), std::move(*span.lattice)};
}

}  // namespace multitile
