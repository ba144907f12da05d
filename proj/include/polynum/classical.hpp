#ifndef POLYNUM_CLASSICAL_HPP
#define POLYNUM_CLASSICAL_HPP

#include <vector>

#include "polynum/identity_report.hpp"
#include "polynum/integer.hpp"
#include "polynum/rational.hpp"

namespace polynum {

// Unsigned Stirling numbers of the first kind [n brack k]: recurrence
// c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k), c(0,0) = 1. Memoized triangle,
// grown on demand, bounded by the global order cap. Out-of-triangle
// (k < 0 or k > n) is 0; n < 0 is rejected.
Integer stirling1_unsigned(int n, int k);

// Signed Stirling numbers of the first kind: (-1)^{n-k} [n brack k]; these
// are the coefficients of the falling factorial in the monomial basis.
Integer stirling1_signed(int n, int k);

// Stirling numbers of the second kind: S2(n,k) = k S2(n-1,k) + S2(n-1,k-1).
Integer stirling2(int n, int k);

// Unsigned Lah numbers: L(n,k) = C(n-1,k-1) n!/k! for n,k >= 1, with
// L(0,0) = 1 and L(n,0) = 0 for n >= 1.
Integer lah(int n, int k);

// Higher-order Bernoulli number B_n^{(r)}: n! times the t^n coefficient of
// (t/(e^t - 1))^r. r >= 1, n >= 0. bernoulli_order_row returns B_0..B_max_n
// from a single series expansion.
Rational bernoulli_order(int n, int r);
std::vector<Rational> bernoulli_order_row(int r, int max_n);

// x(x-1)...(x-n+1) and x(x+1)...(x+n-1); empty product 1 for n = 0.
Rational falling_factorial(const Rational& x, int n);
Rational rising_factorial(const Rational& x, int n);

// Certify the factorial-basis connection identities by evaluation: a degree-n
// polynomial identity is proven by n+1 evaluations at distinct points, so each
// checker requires at least n_max + 1 pairwise distinct sample points.
//
//   eq1: <x>_n = sum_k L(n,k) (x)_k, plus the inverse
//        (x)_n = sum_k (-1)^{n-k} L(n,k) <x>_k
//   eq4: (x)_n = sum_k S1(n,k) x^k        (signed Stirling, first kind)
//   eq5: x^n   = sum_k S2(n,k) (x)_k
IdentityReport check_lah_connection(int n_max, const std::vector<Rational>& points);
IdentityReport check_stirling1_connection(int n_max, const std::vector<Rational>& points);
IdentityReport check_stirling2_connection(int n_max, const std::vector<Rational>& points);

// All of the above bundled into one report.
IdentityReport check_connection_identities(int n_max,
                                           const std::vector<Rational>& points);

}  // namespace polynum

#endif  // POLYNUM_CLASSICAL_HPP
