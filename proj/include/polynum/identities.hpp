#ifndef POLYNUM_IDENTITIES_HPP
#define POLYNUM_IDENTITIES_HPP

#include <vector>

#include "polynum/identity_report.hpp"
#include "polynum/multilog.hpp"

namespace polynum {

// Mechanical verification of the number-family identities. Every verifier
// recomputes both sides from maximally independent code paths (dynamic
// program vs. closed sums vs. series algebra) and reports exact values per
// case. Reports are deterministic byte-for-byte.

// All-ones multi-Stirling numbers equal unsigned Stirling numbers of the
// first kind: cases (r, n) for 1 <= r <= r_max, r <= n <= n_max.
IdentityReport verify_lemma21(int r_max, int n_max);

// Multi-Bernoulli numbers from the series pipeline against the closed double
// sum over higher-order Bernoulli, second-kind Stirling, and multi-Stirling
// numbers; cases n = 0..n_max. Standard-mode index.
IdentityReport verify_thm22(const MultiIndex& k, int n_max);

// Negative-last-entry multi-Lah recurrence. `k_pos` = (k_1,...,k_r), all
// entries >= 1 and depth >= 2, denoting the index (k_1,...,k_{r-1},-k_r);
// n_max >= r. The left side is computed twice — extended-index pipeline and
// the binomial last-entry split — and the two routes must agree exactly (a
// route mismatch throws; it is a hard failure, not a reportable verdict).
// The comparison against the recurrence's quadruple sum is *recorded* per n
// with hard=false: this report IS the empirical verdict on that recurrence,
// so it must never be presumed. Sum limits follow the zero convention
// (multi-Lah vanishes below its valuation), under which the two printed
// readings of the upper limit coincide.
IdentityReport verify_thm23(const MultiIndex& k_pos, int n_max);

// Multi-Stirling numbers recovered from multi-Bernoulli numbers:
// S1^{(k)}(n+r,r) = r! C(n+r,n) sum_m B_m^{(k)} [n brack m], n = 0..n_max.
IdentityReport verify_thm24(const MultiIndex& k, int n_max);

// Multi-Lah numbers from multi-Stirling numbers through the double sum with
// second-kind Stirling numbers; cases n = r..n_max (n_max >= r).
IdentityReport verify_thm25(const MultiIndex& k, int n_max);

// The all-ones reductions bundled: multi-Stirling -> unsigned Stirling,
// multi-Lah -> Lah, multi-Bernoulli -> (1/r!)(-1)^m B_m^{(r)}, plus the
// closed-form series identity for the all-ones multiple logarithm.
IdentityReport verify_reductions(int r_max, int n_max);

// Generating-function cross-checks: n! [t^n] of the named power equals the
// classical table value, for 0 <= k <= n <= n_max (eq2 starts at k = 1).
IdentityReport verify_eq2(int n_max);  // (t/(1-t))^k /k!  vs Lah
IdentityReport verify_eq6(int n_max);  // (e^t-1)^k /k!    vs Stirling 2nd
IdentityReport verify_eq7(int n_max);  // (log(1+t))^k /k! vs signed Stirling 1st

// Derivative-recurrence grids: every index with depth <= r_max and entries in
// 1..entry_max for which the branch applies (last entry >= 2 for eq11; last
// entry == 1 and depth >= 2 for eq12), each checked to the given order.
IdentityReport verify_eq11_grid(int r_max, int entry_max, int order);
IdentityReport verify_eq12_grid(int r_max, int entry_max, int order);

// All-ones closed form per coefficient: dynamic program vs (1/r!)(-log(1-t))^r,
// r = 1..r_max, coefficients 0..n_max.
IdentityReport verify_eq13(int r_max, int n_max);

// All-ones multi-Lah reduction to Lah numbers, r = 1..r_max, n = r..n_max.
IdentityReport verify_eq19(int r_max, int n_max);

// Every multi-index with depth in 1..r_max and entries in 1..entry_max, in
// lexicographic order by (depth, entries) — the grid the verifier batteries
// sweep.
std::vector<MultiIndex> standard_index_grid(int r_max, int entry_max);

}  // namespace polynum

#endif  // POLYNUM_IDENTITIES_HPP
