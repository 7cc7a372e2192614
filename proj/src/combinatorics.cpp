#include "sqfdepth/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace sqfdepth {

namespace {

// Falling factorial divided step by step; after step i the accumulator holds
// a(a-1)...(a-i+1)/i!, which is always an integer.
ExactInt falling_over_factorial(long a, long k) {
  ExactInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= a - i + 1;
    if (r == 0) return r;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return r;
}

} // namespace

ExactInt binom_nat(long n, long k) {
  if (n < 0) throw std::invalid_argument("binom_nat: negative top " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  return falling_over_factorial(n, k);
}

ExactInt binom_gen(long a, long k) {
  if (k < 0) throw std::invalid_argument("binom_gen: negative bottom " + std::to_string(k));
  return falling_over_factorial(a, k);
}

ExactInt vandermonde_fold(long n, long d, long k) {
  if (n < 0 || k < 0 || k > d)
    throw std::invalid_argument("vandermonde_fold: requires n >= 0 and 0 <= k <= d");
  ExactInt sum = 0;
  for (long j = 0; j <= k; ++j) {
    ExactInt term = binom_nat(d - j, k - j) * binom_nat(n, j);
    if ((k - j) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

} // namespace sqfdepth
