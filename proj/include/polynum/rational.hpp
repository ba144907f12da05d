#ifndef POLYNUM_RATIONAL_HPP
#define POLYNUM_RATIONAL_HPP

#include <gmp.h>

#include <iosfwd>
#include <string>

#include "polynum/integer.hpp"

namespace polynum {

// Arbitrary-precision rational, always kept canonical: denominator >= 1 and
// gcd(|num|, den) = 1, with zero stored as 0/1. Canonical form makes equality
// a plain limb comparison, which the identity verifiers lean on.
class Rational {
 public:
  Rational() noexcept { mpq_init(q_); }  // 0/1
  Rational(long n) {                     // NOLINT: implicit by design
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }
  Rational(long num, long den);
  explicit Rational(const Integer& n);
  Rational(const Integer& num, const Integer& den);

  Rational(const Rational& other) {
    mpq_init(q_);
    mpq_set(q_, other.q_);
  }
  Rational(Rational&& other) noexcept {
    mpq_init(q_);
    mpq_swap(q_, other.q_);
  }
  Rational& operator=(const Rational& other) {
    if (this != &other) mpq_set(q_, other.q_);
    return *this;
  }
  Rational& operator=(Rational&& other) noexcept {
    mpq_swap(q_, other.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  // Parses "p/q" or a bare integer "p"; canonicalizes. Throws
  // std::invalid_argument on malformed input, std::domain_error on q = 0.
  static Rational parse(const std::string& text);

  Rational& operator+=(const Rational& rhs) {
    mpq_add(q_, q_, rhs.q_);
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    mpq_sub(q_, q_, rhs.q_);
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    mpq_mul(q_, q_, rhs.q_);
    return *this;
  }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) {
    Rational out;
    mpq_neg(out.q_, x.q_);
    return out;
  }

  // x^e; e < 0 requires x != 0.
  Rational pow(long e) const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  int sign() const { return mpq_sgn(q_); }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

  Integer num() const;
  Integer den() const;

  // Canonical serialization, always with the denominator: "5/6", "-1/36", "0/1".
  std::string str() const;

 private:
  mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace polynum

#endif  // POLYNUM_RATIONAL_HPP
