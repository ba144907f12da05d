#ifndef POLYNUM_MULTI_NUMBERS_HPP
#define POLYNUM_MULTI_NUMBERS_HPP

#include <vector>

#include "polynum/multilog.hpp"
#include "polynum/rational.hpp"

namespace polynum {

// The three multiple-logarithm number families. Values are Rational
// throughout: away from the all-ones index these "numbers" are generically
// non-integers, and no integrality is assumed anywhere.

// Multi-Stirling number of the first kind S1^{(k)}(n, r): n! times the t^n
// coefficient of the multiple logarithm of index k (depth r). Standard-mode
// index required; 0 for n < r. The _row form returns n = 0..max_n from one
// series expansion.
Rational multi_stirling1(const MultiIndex& k, int n);
std::vector<Rational> multi_stirling1_row(const MultiIndex& k, int max_n);

// Multi-Bernoulli numbers B_m^{(k)} for m = 0..max_m: m! times the t^m
// coefficient of Li_k(z)/z^r at z = 1-e^{-t}. Standard-mode index required.
// Pipeline: expand Li_k to order max_m + r, substitute z = 1-e^{-t}, divide
// by (1-e^{-t})^r — a valuation-r divisor, which is exactly why the working
// order carries the extra +r.
std::vector<Rational> multi_bernoulli(const MultiIndex& k, int max_m);

// Multi-Lah number L^{(k)}(n, r): n! times the t^n coefficient of
// Li_k(1-e^{-t})/(1-t)^r. Extended-mode index allowed (nonpositive last
// entry); 0 for n < r.
Rational multi_lah(const MultiIndex& k, int n);
std::vector<Rational> multi_lah_row(const MultiIndex& k, int max_n);

// Independent second route to L^{(k_1,...,k_{r-1},-k_r)}(n, r), the
// negative-last-entry multi-Lah values. `k_pos` holds (k_1,...,k_r), all
// >= 1, depth >= 2. Instead of running the extended-index dynamic program,
// the last chain variable is split off (m_r = m' + m_{r-1}) and
// (m' + m_{r-1})^{k_r} is expanded binomially, which factors the series into
//   sum_{j=0}^{k_r} C(k_r,j) * Li_{(j-k_r)}(w) * Li_{(k_1,...,k_{r-1}-j)}(w),
// with w = 1-e^{-t}, then divides by (1-t)^r. Used to cross-examine the
// extended pipeline; the two routes must agree exactly.
std::vector<Rational> multi_lah_last_entry_split_row(const MultiIndex& k_pos,
                                                     int max_n);

}  // namespace polynum

#endif  // POLYNUM_MULTI_NUMBERS_HPP
