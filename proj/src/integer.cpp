#include "polynum/integer.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace polynum {

Integer::Integer(const std::string& decimal) {
  if (mpz_init_set_str(v_, decimal.c_str(), 10) != 0) {
    mpz_clear(v_);
    throw std::invalid_argument("not a decimal integer: \"" + decimal + "\"");
  }
}

long Integer::to_long() const {
  if (!fits_long()) {
    throw std::overflow_error("Integer does not fit in long: " + str());
  }
  return mpz_get_si(v_);
}

std::string Integer::str() const {
  char* raw = mpz_get_str(nullptr, 10, v_);
  std::string out(raw);
  std::free(raw);
  return out;
}

Integer factorial(long n) {
  if (n < 0) {
    throw std::invalid_argument("factorial requires n >= 0, got " +
                                std::to_string(n));
  }
  Integer out;
  mpz_fac_ui(out.raw(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial(long n, long k) {
  if (n < 0) {
    throw std::invalid_argument("binomial requires n >= 0, got n = " +
                                std::to_string(n));
  }
  if (k < 0 || k > n) {
    return Integer(0);
  }
  Integer out;
  mpz_bin_uiui(out.raw(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

Integer pow(const Integer& base, long exp) {
  if (exp < 0) {
    throw std::invalid_argument("Integer pow requires exp >= 0, got " +
                                std::to_string(exp));
  }
  Integer out;
  mpz_pow_ui(out.raw(), base.raw(), static_cast<unsigned long>(exp));
  return out;
}

Integer div_exact(const Integer& a, const Integer& b) {
  if (b.is_zero()) {
    throw std::domain_error("div_exact: division by zero");
  }
  if (mpz_divisible_p(a.raw(), b.raw()) == 0) {
    throw std::domain_error("div_exact: " + b.str() + " does not divide " +
                            a.str());
  }
  Integer out;
  mpz_divexact(out.raw(), a.raw(), b.raw());
  return out;
}

std::ostream& operator<<(std::ostream& os, const Integer& x) {
  return os << x.str();
}

}  // namespace polynum
