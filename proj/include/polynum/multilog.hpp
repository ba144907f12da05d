#ifndef POLYNUM_MULTILOG_HPP
#define POLYNUM_MULTILOG_HPP

#include <string>
#include <vector>

#include "polynum/identity_report.hpp"
#include "polynum/series.hpp"

namespace polynum {

// Exponent tuple (k_1,...,k_r) indexing the multiple logarithm and the
// multi-Stirling / multi-Bernoulli / multi-Lah families. Two regimes:
// standard mode has every entry >= 1; extended mode relaxes only the *last*
// entry to any integer (that is the one place a nonpositive exponent is ever
// needed, for the negative-last-index Lah recurrence). A nonpositive entry
// anywhere else is rejected at construction.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<int> entries);

  // Strict CLI grammar: comma-separated signed integers, no spaces, and a
  // leading '-' only on the final entry. Throws std::invalid_argument.
  static MultiIndex parse(const std::string& text);

  static MultiIndex ones(int r);

  int depth() const { return static_cast<int>(entries_.size()); }
  int entry(int i) const { return entries_[static_cast<size_t>(i)]; }
  int last() const { return entries_.back(); }
  const std::vector<int>& entries() const { return entries_; }

  bool is_standard() const;  // every entry >= 1
  bool all_ones() const;

  MultiIndex drop_last() const;          // depth must be >= 2
  MultiIndex with_last(int value) const; // replaces the final entry

  std::string str() const;  // "k1,k2,...,kr"

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<int> entries_;
};

// Truncated series of the multiple logarithm: the coefficient of t^n is the
// sum over strictly increasing chains 0 < m_1 < ... < m_r = n of
// prod_i m_i^{-k_i}. Computed by a prefix-sum dynamic program in O(r.N)
// rational operations:
//   f_1(n) = n^{-k_1},   f_j(n) = n^{-k_j} * sum_{m<n} f_{j-1}(m),
// and the coefficient of t^n is f_r(n). Coefficients below t^r vanish (no
// chain fits), so the series has valuation r whenever it is nonzero.
TruncatedSeries li_series(const MultiIndex& k, int order);

// (1/r!)(-log(1-t))^r — the closed form the all-ones multiple logarithm
// collapses to; its t^n coefficient times n! is the unsigned Stirling number
// [n brack r].
TruncatedSeries li_all_ones_closed_form(int r, int order);

// Checks the ladder recurrences of the multiple logarithm as exact series
// identities up to order N-1 (N >= 2):
//   last entry >= 2:          t * d/dt Li_k = Li_{k with last entry - 1}
//   last entry == 1, r >= 2:  (1-t) * d/dt Li_k = Li_{k without last entry}
// Any other index shape has no applicable branch and is rejected. The report
// identity id is "eq11" or "eq12" according to the branch taken.
IdentityReport check_derivative_recurrences(const MultiIndex& k, int order);

}  // namespace polynum

#endif  // POLYNUM_MULTILOG_HPP
