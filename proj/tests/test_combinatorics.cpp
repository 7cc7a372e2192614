#include <doctest.h>

#include "sqfdepth/combinatorics.hpp"

using namespace sqfdepth;

namespace {

// Factorial-ratio oracle, independent of the multiplicative loop.
ExactInt factorial_ratio(unsigned long n, unsigned long k) {
  ExactInt a, b, c;
  mpz_fac_ui(a.get_mpz_t(), n);
  mpz_fac_ui(b.get_mpz_t(), k);
  mpz_fac_ui(c.get_mpz_t(), n - k);
  return a / (b * c);
}

// Falling factorial over k! with a single division at the end.
ExactInt falling_oracle(long a, long k) {
  ExactInt num = 1;
  for (long i = 0; i < k; ++i) num *= a - i;
  ExactInt den;
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(k));
  return num / den;
}

} // namespace

TEST_CASE("binom_nat worked values") {
  CHECK(binom_nat(4, 2) == 6);
  CHECK(binom_nat(2, 3) == 0);
  CHECK(binom_nat(5, -1) == 0);
  CHECK(factorial_ratio(52, 5) == 2598960);
  CHECK(binom_nat(52, 5) == 2598960);
  CHECK(binom_nat(0, 0) == 1);
}

TEST_CASE("binom_nat matches the factorial ratio up to C(128,64)") {
  for (unsigned long n = 0; n <= 128; n += 7)
    for (unsigned long k = 0; k <= n; ++k) CHECK(binom_nat(static_cast<long>(n), static_cast<long>(k)) == factorial_ratio(n, k));
  CHECK(binom_nat(128, 64) == factorial_ratio(128, 64));
  CHECK(binom_nat(128, 64) > ExactInt("1" + std::string(37, '0')));
}

TEST_CASE("binom_nat rejects a negative top") {
  CHECK_THROWS_AS(binom_nat(-1, 2), std::invalid_argument);
}

TEST_CASE("binom_gen worked values and conventions") {
  CHECK(binom_gen(-1, 3) == -1);
  CHECK(binom_gen(-2, 3) == -4);
  CHECK(binom_gen(5, 2) == 10);
  CHECK(binom_gen(2, 3) == 0);
  CHECK(binom_gen(-7, 0) == 1);
  CHECK_THROWS_AS(binom_gen(3, -1), std::invalid_argument);
}

TEST_CASE("binom_gen agrees with the oracle, binom_nat, and the sign rule") {
  for (long a = -25; a <= 25; ++a)
    for (long k = 0; k <= 12; ++k) {
      CHECK(binom_gen(a, k) == falling_oracle(a, k));
      if (a >= 0) CHECK(binom_gen(a, k) == binom_nat(a, k));
      if (a < 0) {
        ExactInt mag = binom_nat(-a + k - 1, k);
        CHECK(binom_gen(a, k) == (k % 2 == 0 ? mag : -mag));
        // binom(-x,k) = (-1)^k binom(x+k-1,k)
        CHECK(binom_gen(a, k) == (k % 2 == 0 ? 1 : -1) * binom_gen(-a + k - 1, k));
      }
    }
}

TEST_CASE("vandermonde_fold worked values") {
  // -C(3,1) C(2,0) + C(2,0) C(2,1) = -1, and binom_gen(-1,1) = -1.
  CHECK(vandermonde_fold(2, 3, 1) == -1);
  CHECK(binom_gen(2 - 3 + 1 - 1, 1) == -1);
  CHECK(vandermonde_fold(0, 0, 0) == 1);
  CHECK(vandermonde_fold(3, 3, 3) == 0);
  CHECK(binom_gen(2, 3) == 0);
}

TEST_CASE("vandermonde_fold closed forms for all 0 <= k <= d <= 30, 0 <= n <= 30") {
  for (long n = 0; n <= 30; ++n)
    for (long d = 0; d <= 30; ++d)
      for (long k = 0; k <= d; ++k) {
        ExactInt fold = vandermonde_fold(n, d, k);
        REQUIRE(fold == binom_gen(n - d + k - 1, k));
        REQUIRE(fold == (k % 2 == 0 ? 1 : -1) * binom_gen(d - n, k));
      }
}

TEST_CASE("convolution identity sum_j C(m,j) C(n,k-j) = C(m+n,k)") {
  for (long m = 0; m <= 20; ++m)
    for (long n = 0; n <= 20; ++n)
      for (long k = 0; k <= 20; ++k) {
        ExactInt sum = 0;
        for (long j = 0; j <= k; ++j) sum += binom_nat(m, j) * binom_nat(n, k - j);
        REQUIRE(sum == binom_nat(m + n, k));
      }
}
