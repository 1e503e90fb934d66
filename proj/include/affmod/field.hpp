#pragma once

// Exact coefficient fields. A field is a small value type that owns the
// arithmetic; elements are plain values and never carry their field.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace affmod {

/// The rationals, backed by GMP. Every result is kept in lowest terms.
class RationalField {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }
  Element from_integer(const mpz_class& z) const { return Element(z); }
  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw std::domain_error("zero denominator");
    Element q(num, den);
    q.canonicalize();
    return q;
  }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  /// True when the element is an integer, so it can be printed in the
  /// integer-coefficient surface syntax.
  bool is_integral(const Element& a) const { return a.get_den() == 1; }
  mpz_class numerator(const Element& a) const { return a.get_num(); }
  mpz_class denominator(const Element& a) const { return a.get_den(); }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }

  unsigned long characteristic() const { return 0; }
  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string name() const { return "rational"; }

  bool operator==(const RationalField&) const { return true; }
};

/// Z/pZ for a prime p < 2^31, with representatives kept in [0, p).
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime");
    if (p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("modulus must be below 2^31");
  }

  std::uint64_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<Element>(r < 0 ? r + static_cast<long>(p_) : r);
  }
  Element from_integer(const mpz_class& z) const {
    mpz_class r = z % mpz_class(static_cast<unsigned long>(p_));
    if (r < 0) r += static_cast<unsigned long>(p_);
    return static_cast<Element>(r.get_ui());
  }
  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    Element d = from_integer(den);
    if (d == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
    return div(from_integer(num), d);
  }

  bool is_zero(const Element& a) const { return a == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element add(Element a, Element b) const { return (a + b) % p_; }
  Element sub(Element a, Element b) const { return (a + p_ - b) % p_; }
  Element mul(Element a, Element b) const { return (a * b) % p_; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return power(a, p_ - 2);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_integral(const Element&) const { return true; }
  mpz_class numerator(const Element& a) const { return mpz_class(static_cast<unsigned long>(a)); }
  mpz_class denominator(const Element&) const { return 1; }
  bool is_negative(const Element&) const { return false; }

  unsigned long characteristic() const { return static_cast<unsigned long>(p_); }
  std::string to_string(const Element& a) const { return std::to_string(a); }
  std::string name() const { return "fp:" + std::to_string(p_); }

  bool operator==(const PrimeField& other) const { return p_ == other.p_; }

 private:
  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  Element power(Element base, std::uint64_t e) const {
    Element result = 1;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  std::uint64_t p_;
};

}  // namespace affmod
