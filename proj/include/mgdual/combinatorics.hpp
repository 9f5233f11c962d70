#pragma once

#include "mgdual/rational.hpp"

namespace mgdual {

/// Bernoulli number B_k with B_1 = -1/2, from the recurrence
///   sum_{j=0}^{m} C(m+1, j) B_j = 0   (m >= 1),   B_0 = 1.
/// Values are memoized in a table shared by all threads.
Rational bernoulli(unsigned k);

/// m!/j! for j >= 0 (a rational when j > m), and 0 when j < 0: the
/// reciprocal factorial of a negative integer vanishes.
Rational factorial_quotient(unsigned m, long j);

/// C(n, k); 0 outside 0 <= k <= n.
BigInt binomial(unsigned n, long k);

/// n (n-1) ... (n-k+1); 0 when k > n.
BigInt falling_factorial(long n, unsigned k);

BigInt factorial(unsigned n);

BigInt pow2(unsigned k);

}  // namespace mgdual
