#ifndef POLYNUM_SERIES_HPP
#define POLYNUM_SERIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polynum/rational.hpp"

namespace polynum {

// Formal power series over Rational, truncated at a known order N: exactly the
// coefficients of t^0..t^N are stored. Coefficients past N are *unknown*, not
// zero; no operation here ever claims a coefficient it cannot know exactly,
// which is why binary operations return the min of the input orders (and
// division additionally loses the denominator valuation).
class TruncatedSeries {
 public:
  // All-zero series of the given order (order >= 0).
  explicit TruncatedSeries(int order);
  // Takes the coefficients c_0..c_N; order = size - 1. Must be nonempty.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Coefficient of t^m for 0 <= m <= order; throws std::out_of_range beyond.
  const Rational& operator[](int m) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  // Index of the first nonzero stored coefficient; nullopt when all stored
  // coefficients vanish.
  std::optional<int> valuation() const;

  // View of the first new_order + 1 coefficients (new_order <= order).
  TruncatedSeries truncated(int new_order) const;

  // "c0 + c1*t + c2*t^2 + ... + cN*t^N" with canonical "p/q" coefficients.
  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
};

// Binary operations truncate to min(order(a), order(b)).
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, const Rational& c);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// a/b as a power series. Requires b not all-zero and valuation(b) <=
// valuation(a); result order = min(order(a), order(b)) - valuation(b).
// Factors t^valuation(b) from both operands, then long-divides by the
// now-unit denominator.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);

// outer(inner(t)) truncated to min(order(outer), order(inner)); inner must
// have zero constant term. Horner evaluation over series.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

// d/dt; drops the order by one (order >= 1 required — nothing is known about
// the derivative of an order-0 truncation).
TruncatedSeries diff(const TruncatedSeries& a);

// Definite integral from 0; raises the order by one and sets c_0 = 0.
TruncatedSeries integrate(const TruncatedSeries& a);

// a^e for e >= 0 at the order of a (a^0 = 1).
TruncatedSeries pow(const TruncatedSeries& a, int e);

// True when the stored coefficients agree on the common known range
// 0..min(order(a), order(b)). Orders beyond that are unknown, so this is the
// only comparison a truncation can honestly answer.
bool coefficients_match(const TruncatedSeries& a, const TruncatedSeries& b);

// Named builtin series, each exact to the requested order.
TruncatedSeries geometric_series(int order);           // 1/(1-t)
TruncatedSeries exp_series(int order);                 // e^t
TruncatedSeries one_minus_exp_neg_series(int order);   // 1 - e^{-t}
TruncatedSeries log_one_plus_series(int order);        // log(1+t)
TruncatedSeries neg_log_one_minus_series(int order);   // -log(1-t)
TruncatedSeries monomial_series(int k, int order);     // t^k
TruncatedSeries one_series(int order);                 // 1
TruncatedSeries one_minus_t_series(int order);         // 1 - t
TruncatedSeries bernoulli_gf_series(int r, int order); // (t/(e^t - 1))^r, r >= 1

// CLI-facing dispatcher. Names: geometric, one_minus_exp_neg, exp,
// log_one_plus, neg_log_one_minus, power, bernoulli_gf_order_r. `param` is
// the exponent k for "power" and the order r for "bernoulli_gf_order_r";
// those two require it, the rest ignore it. Unknown name or missing param →
// std::invalid_argument.
TruncatedSeries builtin_series(std::string_view name, int order,
                               std::optional<int> param = std::nullopt);

// True iff `name` is one of the builtin_series names.
bool is_builtin_series_name(std::string_view name);

}  // namespace polynum

#endif  // POLYNUM_SERIES_HPP
