#pragma once

#include <gmpxx.h>

namespace sqfdepth {

/// Exact signed integer used for every rank count and binomial value.
using ExactInt = mpz_class;

/// Binomial coefficient with the vanishing convention: C(n,k) = 0 unless
/// 0 <= k <= n. Throws std::invalid_argument for n < 0; use binom_gen for
/// negative tops.
ExactInt binom_nat(long n, long k);

/// Polynomial binomial a(a-1)...(a-k+1)/k!, defined for any integer a.
/// Throws std::invalid_argument for k < 0.
ExactInt binom_gen(long a, long k);

/// sum_{j=0}^{k} (-1)^{k-j} C(d-j, k-j) C(n, j), evaluated term by term.
/// Equals binom_gen(n-d+k-1, k).
ExactInt vandermonde_fold(long n, long d, long k);

} // namespace sqfdepth
