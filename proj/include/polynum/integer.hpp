#ifndef POLYNUM_INTEGER_HPP
#define POLYNUM_INTEGER_HPP

#include <gmp.h>

#include <iosfwd>
#include <string>

namespace polynum {

// Arbitrary-precision signed integer: a value-semantics wrapper over GMP's
// mpz_t. Every operation is exact.
class Integer {
 public:
  Integer() noexcept { mpz_init(v_); }
  Integer(long n) { mpz_init_set_si(v_, n); }  // NOLINT: implicit by design
  explicit Integer(const std::string& decimal);

  Integer(const Integer& other) { mpz_init_set(v_, other.v_); }
  Integer(Integer&& other) noexcept {
    mpz_init(v_);
    mpz_swap(v_, other.v_);
  }
  Integer& operator=(const Integer& other) {
    if (this != &other) mpz_set(v_, other.v_);
    return *this;
  }
  Integer& operator=(Integer&& other) noexcept {
    mpz_swap(v_, other.v_);
    return *this;
  }
  ~Integer() { mpz_clear(v_); }

  Integer& operator+=(const Integer& rhs) {
    mpz_add(v_, v_, rhs.v_);
    return *this;
  }
  Integer& operator-=(const Integer& rhs) {
    mpz_sub(v_, v_, rhs.v_);
    return *this;
  }
  Integer& operator*=(const Integer& rhs) {
    mpz_mul(v_, v_, rhs.v_);
    return *this;
  }

  friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
  friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
  friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }
  friend Integer operator-(const Integer& x) {
    Integer out;
    mpz_neg(out.v_, x.v_);
    return out;
  }

  friend bool operator==(const Integer& a, const Integer& b) {
    return mpz_cmp(a.v_, b.v_) == 0;
  }
  friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
  friend bool operator<(const Integer& a, const Integer& b) {
    return mpz_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator<=(const Integer& a, const Integer& b) {
    return mpz_cmp(a.v_, b.v_) <= 0;
  }
  friend bool operator>(const Integer& a, const Integer& b) { return b < a; }
  friend bool operator>=(const Integer& a, const Integer& b) { return b <= a; }

  bool is_zero() const { return mpz_sgn(v_) == 0; }
  int sign() const { return mpz_sgn(v_); }
  bool fits_long() const { return mpz_fits_slong_p(v_) != 0; }
  long to_long() const;  // throws std::overflow_error if out of range

  std::string str() const;

  // Raw handles for sibling wrappers (Rational).
  mpz_srcptr raw() const { return v_; }
  mpz_ptr raw() { return v_; }

 private:
  mpz_t v_;
};

// n! for n >= 0.
Integer factorial(long n);

// Binomial coefficient; 0 whenever k < 0 or k > n. Requires n >= 0. The
// out-of-range-is-zero convention is what makes the identity sums with
// vanishing terms well-defined.
Integer binomial(long n, long k);

// base^exp for exp >= 0 (0^0 = 1).
Integer pow(const Integer& base, long exp);

// Quotient a/b when b divides a exactly; throws std::domain_error otherwise.
Integer div_exact(const Integer& a, const Integer& b);

std::ostream& operator<<(std::ostream& os, const Integer& x);

}  // namespace polynum

#endif  // POLYNUM_INTEGER_HPP
