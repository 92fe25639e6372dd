#include "multitile/qfield.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace multitile {

namespace {

constexpr std::uint64_t kMaxRadicand = std::uint64_t{1} << 62;

// sqrt(a) * sqrt(b) = factor * sqrt(radicand) for squarefree a, b.
struct RadicandProduct {
  std::uint64_t factor;
  std::uint64_t radicand;
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

RadicandProduct multiply_radicands(std::uint64_t a, std::uint64_t b) {
  std::uint64_t g = gcd_u64(a, b);
  unsigned __int128 r = static_cast<unsigned __int128>(a / g) * (b / g);
  if (r > kMaxRadicand) {
    throw ArithmeticError("radicand product overflows the supported range");
  }
  return {g, static_cast<std::uint64_t>(r)};
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t p = 3; p <= n / p; p += 2) {
    if (n % p == 0) return p;
  }
  return n;
}

// floor(sqrt(n) * 2^bits), cached per thread since the same few radicands
// are refined over and over during geometric predicates.
const Integer& scaled_sqrt_floor(std::uint64_t n, unsigned bits) {
  thread_local std::map<std::pair<std::uint64_t, unsigned>, Integer> cache;
  auto key = std::make_pair(n, bits);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Integer scaled(static_cast<unsigned long>(n));
  if constexpr (sizeof(unsigned long) < 8) {
    scaled = Integer(std::to_string(n));
  }
  scaled <<= 2 * bits;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return cache.emplace(key, std::move(root)).first->second;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer u64_to_integer(std::uint64_t n) {
  if constexpr (sizeof(unsigned long) >= 8) {
    return Integer(static_cast<unsigned long>(n));
  } else {
    return Integer(std::to_string(n));
  }
}

}  // namespace

bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

std::string monomial_key(std::uint64_t radicand) {
  return radicand == 1 ? std::string("1") : "r" + std::to_string(radicand);
}

std::uint64_t parse_monomial_key(const std::string& key) {
  if (key == "1") return 1;
  if (key.size() < 2 || key[0] != 'r' || key.size() > 17) {
    throw ParseError("malformed monomial key '" + key + "'");
  }
  std::uint64_t n = 0;
  for (std::size_t i = 1; i < key.size(); ++i) {
    if (key[i] < '0' || key[i] > '9') {
      throw ParseError("malformed monomial key '" + key + "'");
    }
    n = n * 10 + static_cast<std::uint64_t>(key[i] - '0');
  }
  if (n < 2 || !is_squarefree(n)) {
    throw ParseError("monomial key '" + key + "' is not a squarefree radicand >= 2");
  }
  return n;
}

Integer extended_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  Integer g;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g < 0) {
    g = -g;
    x = -x;
    y = -y;
  }
  return g;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(long value) {
  if (value != 0) terms_.push_back({1, Rational(value)});
}

FieldElement::FieldElement(const Rational& value) {
  if (value != 0) {
    Rational v = value;
    v.canonicalize();
    terms_.push_back({1, v});
  }
}

FieldElement FieldElement::ratio(long num, long den) {
  if (den == 0) throw ArithmeticError("division by zero");
  Rational q(num, den);
  q.canonicalize();
  return FieldElement(q);
}

FieldElement FieldElement::sqrt(std::uint64_t n) {
  if (n == 0) return {};
  std::uint64_t square_part = 1;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p <= rest / p; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      square_part *= p;
    }
  }
  FieldElement out;
  out.terms_.push_back({rest, Rational(u64_to_integer(square_part))});
  return out;
}

FieldElement FieldElement::from_terms(std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (!is_squarefree(t.radicand)) {
      throw ArithmeticError("radicand " + std::to_string(t.radicand) + " is not squarefree");
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.radicand < b.radicand; });
  FieldElement out;
  for (Term& t : terms) {
    t.coeff.canonicalize();
    if (!out.terms_.empty() && out.terms_.back().radicand == t.radicand) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else if (t.coeff != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

std::optional<Rational> FieldElement::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].radicand == 1) return terms_[0].coeff;
  return std::nullopt;
}

bool FieldElement::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1);
}

bool FieldElement::is_integer() const {
  if (terms_.empty()) return true;
  return is_rational() && terms_[0].coeff.get_den() == 1;
}

std::uint64_t FieldElement::max_radicand() const {
  return terms_.empty() ? 1 : terms_.back().radicand;
}

FieldElement::DoubleEnclosure FieldElement::approx_double() const {
  DoubleEnclosure out{0.0, 0.0, true};
  double abs_sum = 0.0;
  for (const Term& t : terms_) {
    double c = t.coeff.get_d();
    double mag = std::fabs(c);
    if (!std::isfinite(c) || mag < 1e-280 || mag > 1e280 ||
        t.radicand > (std::uint64_t{1} << 52)) {
      out.valid = false;
      return out;
    }
    double v = t.radicand == 1 ? c : c * std::sqrt(static_cast<double>(t.radicand));
    out.value += v;
    abs_sum += std::fabs(v);
  }
  // Conversion, square root, product and summation each contribute at most a
  // few units in the last place of the running magnitude.
  out.error = abs_sum * static_cast<double>(terms_.size() + 8) * 0x1p-52;
  return out;
}

double FieldElement::to_double() const {
  DoubleEnclosure e = approx_double();
  if (e.valid) return e.value;
  RationalInterval iv = approx(64);
  return Rational((iv.lo + iv.hi) / 2).get_d();
}

RationalInterval FieldElement::approx(unsigned bits) const {
  Rational exact_part;
  Rational abs_irrational;
  for (const Term& t : terms_) {
    if (t.radicand == 1) {
      exact_part += t.coeff;
    } else {
      abs_irrational += ::abs(t.coeff);
    }
  }
  if (abs_irrational == 0) return {exact_part, exact_part};

  Integer bound = floor_of(abs_irrational) + 1;
  unsigned precision = bits + static_cast<unsigned>(mpz_sizeinbase(bound.get_mpz_t(), 2));
  Rational scale(Integer(1), Integer(1) << precision);
  scale.canonicalize();

  RationalInterval out{exact_part, exact_part};
  for (const Term& t : terms_) {
    if (t.radicand == 1) continue;
    const Integer& s = scaled_sqrt_floor(t.radicand, precision);
    Rational low = Rational(s) * scale;
    Rational high = Rational(s + 1) * scale;
    if (t.coeff > 0) {
      out.lo += t.coeff * low;
      out.hi += t.coeff * high;
    } else {
      out.lo += t.coeff * high;
      out.hi += t.coeff * low;
    }
  }
  out.lo.canonicalize();
  out.hi.canonicalize();
  return out;
}

int FieldElement::sign() const {
  if (terms_.empty()) return 0;
  if (is_rational()) return sgn(terms_[0].coeff);

  DoubleEnclosure e = approx_double();
  if (e.valid) {
    if (e.value > e.error) return 1;
    if (e.value < -e.error) return -1;
  }
  // Nonzero, so some finite precision separates the value from zero.
  for (unsigned bits = 64;; bits *= 2) {
    RationalInterval iv = approx(bits);
    if (iv.lo > 0) return 1;
    if (iv.hi < 0) return -1;
  }
}

Integer FieldElement::floor() const {
  if (auto q = rational_value()) return floor_of(*q);
  DoubleEnclosure e = approx_double();
  if (e.valid) {
    double lo = std::floor(e.value - e.error);
    double hi = std::floor(e.value + e.error);
    if (lo == hi && std::fabs(lo) < 0x1p52) return Integer(lo);
  }
  // Irrational values are never integers, so the enclosure eventually
  // lands strictly between two consecutive integers.
  for (unsigned bits = 32;; bits *= 2) {
    RationalInterval iv = approx(bits);
    Integer lo = floor_of(iv.lo);
    if (lo == floor_of(iv.hi)) return lo;
  }
}

Integer FieldElement::ceil() const { return -(-*this).floor(); }

Integer FieldElement::round() const {
  return (*this + FieldElement(Rational(1, 2))).floor();
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->radicand < b->radicand)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->radicand < a->radicand) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) merged.push_back({a->radicand, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) { return *this += -other; }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_rational() && b.is_rational()) {
    return FieldElement(Rational(a.terms_[0].coeff * b.terms_[0].coeff));
  }
  std::vector<FieldElement::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      RadicandProduct p = multiply_radicands(s.radicand, t.radicand);
      Rational c = s.coeff * t.coeff;
      if (p.factor != 1) c *= Rational(u64_to_integer(p.factor));
      products.push_back({p.radicand, std::move(c)});
    }
  }
  std::sort(products.begin(), products.end(),
            [](const auto& x, const auto& y) { return x.radicand < y.radicand; });
  FieldElement out;
  for (auto& t : products) {
    if (!out.terms_.empty() && out.terms_.back().radicand == t.radicand) {
      out.terms_.back().coeff += t.coeff;
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(out.terms_, [](const auto& t) { return t.coeff == 0; });
  return out;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  *this = *this * other;
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (auto q = rational_value()) return FieldElement(Rational(1 / *q));
  // Multiply by the conjugate sqrt(p) -> -sqrt(p) for a prime p dividing
  // some radicand; the norm b * conj(b) no longer involves sqrt(p).
  std::uint64_t p = smallest_prime_factor(max_radicand());
  FieldElement conj = *this;
  for (Term& t : conj.terms_) {
    if (t.radicand % p == 0) t.coeff = -t.coeff;
  }
  FieldElement norm = *this * conj;
  return conj * norm.inverse();
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  if (b.is_zero()) throw ArithmeticError("division by zero");
  if (auto q = b.rational_value()) {
    FieldElement out = a;
    for (auto& t : out.terms_) t.coeff /= *q;
    return out;
  }
  return a * b.inverse();
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  *this = *this / other;
  return *this;
}

std::string FieldElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) os << (t.coeff < 0 ? " - " : " + ");
    Rational c = first ? t.coeff : Rational(::abs(t.coeff));
    if (t.radicand == 1) {
      os << c;
    } else if (c == 1) {
      os << "sqrt(" << t.radicand << ")";
    } else if (c == -1) {
      os << "-sqrt(" << t.radicand << ")";
    } else {
      os << c << "*sqrt(" << t.radicand << ")";
    }
    first = false;
  }
  return os.str();
}

int compare(const FieldElement& a, const FieldElement& b) {
  if (a.is_rational() && b.is_rational()) {
    int c = cmp(*a.rational_value(), *b.rational_value());
    return (c > 0) - (c < 0);
  }
  return (a - b).sign();
}

const FieldElement& min(const FieldElement& a, const FieldElement& b) { return b < a ? b : a; }
const FieldElement& max(const FieldElement& a, const FieldElement& b) { return a < b ? b : a; }

// ---------------------------------------------------------------------------
// FieldDescriptor

FieldDescriptor::FieldDescriptor(std::vector<std::int64_t> radicands) {
  if (radicands.size() > kMaxRadicands) {
    throw DescriptorError("at most " + std::to_string(kMaxRadicands) + " radicands are supported");
  }
  for (std::int64_t d : radicands) {
    if (d < 2) throw DescriptorError("radicand " + std::to_string(d) + " is below 2");
    if (!is_squarefree(static_cast<std::uint64_t>(d))) {
      throw DescriptorError("radicand " + std::to_string(d) + " is not squarefree");
    }
    radicands_.push_back(static_cast<std::uint64_t>(d));
  }
  basis_.assign(std::size_t{1} << radicands_.size(), 1);
  for (std::size_t mask = 1; mask < basis_.size(); ++mask) {
    std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    basis_[mask] = multiply_radicands(basis_[mask & (mask - 1)], radicands_[low]).radicand;
  }
  // Distinct squarefree radicands can still be multiplicatively dependent
  // (2, 3, 6); the monomials are independent iff all basis values differ.
  std::vector<std::uint64_t> sorted = basis_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DescriptorError("radicands are duplicated or multiplicatively dependent");
  }
}

std::string FieldDescriptor::monomial_key(std::size_t mask) const {
  return multitile::monomial_key(basis_.at(mask));
}

FieldElement FieldDescriptor::generator(std::size_t i) const {
  return FieldElement::sqrt(radicands_.at(i));
}

FieldElement FieldDescriptor::monomial(std::size_t mask) const {
  return FieldElement::sqrt(basis_.at(mask));
}

bool FieldDescriptor::contains(const FieldElement& a) const {
  return std::all_of(a.terms().begin(), a.terms().end(), [&](const FieldElement::Term& t) {
    return std::find(basis_.begin(), basis_.end(), t.radicand) != basis_.end();
  });
}

}  // namespace multitile
