#include "polynum/multi_numbers.hpp"

#include <stdexcept>

#include "polynum/config.hpp"
#include "polynum/integer.hpp"
#include "polynum/series.hpp"

namespace polynum {

namespace {

void require_standard(const MultiIndex& k, const char* what) {
  if (!k.is_standard()) {
    throw std::invalid_argument(std::string(what) +
                                " requires a standard-mode index (every "
                                "entry >= 1), got (" +
                                k.str() + ")");
  }
}

std::vector<Rational> scaled_by_factorials(const TruncatedSeries& s, int max_n) {
  std::vector<Rational> out(static_cast<size_t>(max_n) + 1);
  Rational fact(1);
  for (int n = 0; n <= max_n; ++n) {
    if (n > 0) fact *= Rational(n);
    out[static_cast<size_t>(n)] = s[n] * fact;
  }
  return out;
}

}  // namespace

std::vector<Rational> multi_stirling1_row(const MultiIndex& k, int max_n) {
  require_standard(k, "multi_stirling1");
  if (max_n < 0) {
    throw std::invalid_argument("multi_stirling1_row requires max_n >= 0");
  }
  return scaled_by_factorials(li_series(k, max_n), max_n);
}

Rational multi_stirling1(const MultiIndex& k, int n) {
  require_standard(k, "multi_stirling1");
  if (n < 0) {
    throw std::invalid_argument("multi_stirling1 requires n >= 0");
  }
  if (n < k.depth()) return Rational(0);
  return li_series(k, n)[n] * Rational(factorial(n));
}

std::vector<Rational> multi_bernoulli(const MultiIndex& k, int max_m) {
  require_standard(k, "multi_bernoulli");
  if (max_m < 0) {
    throw std::invalid_argument("multi_bernoulli requires max_m >= 0");
  }
  int r = k.depth();
  int work_order = max_m + r;
  require_within_cap(work_order, "multi_bernoulli working order");
  TruncatedSeries w = one_minus_exp_neg_series(work_order);
  TruncatedSeries substituted = compose(li_series(k, work_order), w);
  TruncatedSeries quotient = div(substituted, pow(w, r));  // order max_m
  return scaled_by_factorials(quotient, max_m);
}

std::vector<Rational> multi_lah_row(const MultiIndex& k, int max_n) {
  if (max_n < 0) {
    throw std::invalid_argument("multi_lah_row requires max_n >= 0");
  }
  require_within_cap(max_n, "multi_lah working order");
  int r = k.depth();
  TruncatedSeries w = one_minus_exp_neg_series(max_n);
  TruncatedSeries substituted = compose(li_series(k, max_n), w);
  TruncatedSeries quotient = div(substituted, pow(one_minus_t_series(max_n), r));
  return scaled_by_factorials(quotient, max_n);
}

Rational multi_lah(const MultiIndex& k, int n) {
  if (n < 0) {
    throw std::invalid_argument("multi_lah requires n >= 0");
  }
  if (n < k.depth()) return Rational(0);
  return multi_lah_row(k, n)[static_cast<size_t>(n)];
}

std::vector<Rational> multi_lah_last_entry_split_row(const MultiIndex& k_pos,
                                                     int max_n) {
  require_standard(k_pos, "multi_lah_last_entry_split_row");
  if (k_pos.depth() < 2) {
    throw std::invalid_argument(
        "the last-entry split needs depth >= 2 (a nonempty chain prefix)");
  }
  if (max_n < 0) {
    throw std::invalid_argument("multi_lah_last_entry_split_row requires "
                                "max_n >= 0");
  }
  require_within_cap(max_n, "multi_lah split working order");
  int r = k_pos.depth();
  int k_last = k_pos.last();
  TruncatedSeries w = one_minus_exp_neg_series(max_n);
  TruncatedSeries acc(max_n);
  for (int j = 0; j <= k_last; ++j) {
    TruncatedSeries last_factor =
        compose(li_series(MultiIndex({j - k_last}), max_n), w);
    MultiIndex prefix =
        k_pos.drop_last().with_last(k_pos.entry(r - 2) - j);
    TruncatedSeries prefix_factor = compose(li_series(prefix, max_n), w);
    acc = add(acc, scale(mul(last_factor, prefix_factor),
                         Rational(binomial(k_last, j))));
  }
  TruncatedSeries quotient = div(acc, pow(one_minus_t_series(max_n), r));
  return scaled_by_factorials(quotient, max_n);
}

}  // namespace polynum
