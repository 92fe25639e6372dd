#pragma once

// Exact arithmetic in multi-quadratic fields Q(sqrt d1, ..., sqrt dk).
//
// An element is stored as a sparse sum  sum_n c_n * sqrt(n)  over squarefree
// positive integers n (n = 1 is the rational part). Square roots of distinct
// squarefree integers are linearly independent over Q, so this representation
// is canonical: an element is zero iff it has no terms, and two elements are
// equal iff their term lists are equal. Every multi-quadratic field embeds in
// this space with its monomial basis prod_{i in S} sqrt(d_i) mapped to the
// squarefree part of prod_{i in S} d_i, which is why elements do not carry a
// descriptor pointer: FieldDescriptor only validates membership.

#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multitile/errors.hpp"

namespace multitile {

using Integer = mpz_class;
using Rational = mpq_class;

// Closed rational interval [lo, hi].
struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
};

class FieldElement {
 public:
  struct Term {
    std::uint64_t radicand;  // squarefree, 1 for the rational part
    Rational coeff;          // never zero inside a FieldElement

    bool operator==(const Term& other) const {
      return radicand == other.radicand && coeff == other.coeff;
    }
  };

  FieldElement() = default;
  FieldElement(long value);  // NOLINT(google-explicit-constructor)
  FieldElement(const Rational& value);  // NOLINT(google-explicit-constructor)

  // a/b as an element; b must be nonzero.
  static FieldElement ratio(long num, long den);
  // sqrt(n) for any n >= 0, reduced to s*sqrt(f) with f squarefree.
  static FieldElement sqrt(std::uint64_t n);
  // Builds a canonical element from arbitrary terms. Radicands must be
  // squarefree; duplicates are summed and zero coefficients dropped.
  static FieldElement from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // The rational value when every irrational coefficient vanishes.
  std::optional<Rational> rational_value() const;
  bool is_rational() const;
  // True iff the element is a rational integer.
  bool is_integer() const;

  // -1, 0 or +1 for the real embedding with every sqrt(n) > 0.
  int sign() const;

  // Enclosure of the real value of width at most 2^-bits.
  RationalInterval approx(unsigned bits) const;

  // Double approximation together with a rigorous absolute error bound.
  struct DoubleEnclosure {
    double value;
    double error;
    bool valid;  // false when magnitudes fall outside the safe double range
  };
  DoubleEnclosure approx_double() const;
  double to_double() const;

  Integer floor() const;
  Integer ceil() const;
  // Nearest integer, ties rounded up.
  Integer round() const;

  FieldElement abs() const { return sign() < 0 ? -*this : *this; }
  FieldElement inverse() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

  bool operator==(const FieldElement& other) const { return terms_ == other.terms_; }

  // Largest radicand in use (1 for rationals); handy for diagnostics.
  std::uint64_t max_radicand() const;

  // Human-readable form, e.g. "1/2 + 3*sqrt(2)". Not a serialization format.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;  // sorted by radicand, no zero coefficients
};

// Exact ordering of the real embeddings.
int compare(const FieldElement& a, const FieldElement& b);
inline bool operator<(const FieldElement& a, const FieldElement& b) { return compare(a, b) < 0; }
inline bool operator>(const FieldElement& a, const FieldElement& b) { return compare(a, b) > 0; }
inline bool operator<=(const FieldElement& a, const FieldElement& b) { return compare(a, b) <= 0; }
inline bool operator>=(const FieldElement& a, const FieldElement& b) { return compare(a, b) >= 0; }

const FieldElement& min(const FieldElement& a, const FieldElement& b);
const FieldElement& max(const FieldElement& a, const FieldElement& b);

// Validated description of Q(sqrt d1, ..., sqrt dk), k <= 4.
class FieldDescriptor {
 public:
  static constexpr std::size_t kMaxRadicands = 4;

  FieldDescriptor() = default;  // the rational field
  explicit FieldDescriptor(std::vector<std::int64_t> radicands);

  const std::vector<std::uint64_t>& radicands() const { return radicands_; }
  std::size_t degree() const { return basis_.size(); }

  // basis()[mask] is the squarefree integer whose square root equals the
  // monomial prod_{i in mask} sqrt(d_i).
  const std::vector<std::uint64_t>& basis() const { return basis_; }
  std::string monomial_key(std::size_t mask) const;

  FieldElement generator(std::size_t i) const;  // sqrt(d_i)
  FieldElement monomial(std::size_t mask) const;
  bool contains(const FieldElement& a) const;

 private:
  std::vector<std::uint64_t> radicands_;
  std::vector<std::uint64_t> basis_{1};
};

// Squarefree test by trial division. n = 0 is not squarefree.
bool is_squarefree(std::uint64_t n);

// JSON monomial key: "1" for the rational part, "r<n>" otherwise.
std::string monomial_key(std::uint64_t radicand);
// Inverse of monomial_key; throws ParseError on malformed or non-squarefree keys.
std::uint64_t parse_monomial_key(const std::string& key);

// Extended gcd on big integers: returns g = gcd(a, b) >= 0 with a*x + b*y = g.
Integer extended_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y);

}  // namespace multitile
