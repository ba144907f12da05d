#include "polynum/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace polynum {

Rational::Rational(long num, long den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  mpq_init(q_);
  mpz_set_si(mpq_numref(q_), num);
  mpz_set_si(mpq_denref(q_), den);
  mpq_canonicalize(q_);
}

Rational::Rational(const Integer& n) {
  mpq_init(q_);
  mpz_set(mpq_numref(q_), n.raw());
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) {
    throw std::domain_error("rational with zero denominator");
  }
  mpq_init(q_);
  mpz_set(mpq_numref(q_), num.raw());
  mpz_set(mpq_denref(q_), den.raw());
  mpq_canonicalize(q_);
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(Integer(text));
  }
  if (text.find('/', slash + 1) != std::string::npos) {
    throw std::invalid_argument("not a rational: \"" + text + "\"");
  }
  Integer num(text.substr(0, slash));
  Integer den(text.substr(slash + 1));
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("rational division by zero");
  }
  mpq_div(q_, q_, rhs.q_);
  return *this;
}

Rational Rational::pow(long e) const {
  if (e == 0) {
    return Rational(1);
  }
  if (e < 0) {
    if (is_zero()) {
      throw std::domain_error("zero raised to a negative power");
    }
    Rational inv;
    mpq_inv(inv.q_, q_);
    return inv.pow(-e);
  }
  Rational out;
  // num and den are coprime, so their powers are too: no re-canonicalization.
  mpz_pow_ui(mpq_numref(out.q_), mpq_numref(q_), static_cast<unsigned long>(e));
  mpz_pow_ui(mpq_denref(out.q_), mpq_denref(q_), static_cast<unsigned long>(e));
  return out;
}

Integer Rational::num() const {
  Integer out;
  mpz_set(out.raw(), mpq_numref(q_));
  return out;
}

Integer Rational::den() const {
  Integer out;
  mpz_set(out.raw(), mpq_denref(q_));
  return out;
}

std::string Rational::str() const { return num().str() + "/" + den().str(); }

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.str();
}

}  // namespace polynum
