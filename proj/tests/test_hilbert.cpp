#include <doctest.h>

#include <random>

#include "sqfdepth/hilbert.hpp"

using namespace sqfdepth;

namespace {

AlphaVector alpha_of(std::initializer_list<long> v) {
  AlphaVector a;
  a.ground_size = static_cast<int>(v.size()) - 1;
  for (long x : v) a.counts.emplace_back(x);
  return a;
}

std::vector<long> longs(const std::vector<ExactInt>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

AlphaVector random_alpha(std::mt19937_64& rng, int n) {
  AlphaVector a;
  a.ground_size = n;
  for (int k = 0; k <= n; ++k) {
    long hi = binom_nat(n, k).get_si();
    a.counts.emplace_back(std::uniform_int_distribution<long>(0, hi)(rng));
  }
  return a;
}

} // namespace

TEST_CASE("beta_row worked values") {
  auto a = alpha_of({1, 3, 3, 0});
  CHECK(longs(beta_row(a, 2)) == std::vector<long>{1, 1, 1});
  CHECK(longs(beta_row(a, 3)) == std::vector<long>{1, 0, 0, -1});
  CHECK(longs(beta_row(alpha_of({1}), 0)) == std::vector<long>{1});
  CHECK_THROWS_AS(beta_row(a, 4), std::invalid_argument);
}

TEST_CASE("beta_row_recurrence worked values") {
  CHECK(longs(beta_row_recurrence(alpha_of({1, 3, 3, 0}), 3)) == std::vector<long>{1, 0, 0, -1});
  CHECK(longs(beta_row_recurrence(alpha_of({0, 0, 1}), 2)) == std::vector<long>{0, 0, 1});
  CHECK(longs(beta_row_recurrence(alpha_of({0, 2, 1}), 2)) == std::vector<long>{0, 2, -1});
}

TEST_CASE("alpha_from_beta worked values") {
  std::vector<ExactInt> row{1, 0, 0, -1};
  CHECK(longs(alpha_from_beta(row, 3)) == std::vector<long>{1, 3, 3, 0});
  std::vector<ExactInt> one{1};
  CHECK(longs(alpha_from_beta(one, 0)) == std::vector<long>{1});
  std::vector<ExactInt> principal{0, 0, 1};
  CHECK(longs(alpha_from_beta(principal, 2)) == std::vector<long>{0, 0, 1});
  CHECK_THROWS_AS(alpha_from_beta(principal, 3), std::invalid_argument);
}

TEST_CASE("transform pair properties on 1000 random alpha vectors") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = trial % 13;
    AlphaVector a = random_alpha(rng, n);
    for (int d = 0; d <= n; ++d) {
      BetaRow direct = beta_row(a, d);
      REQUIRE(direct == beta_row_recurrence(a, d));
      auto back = alpha_from_beta(direct, d);
      for (int k = 0; k <= d; ++k) REQUIRE(back[k] == a.counts[k]);
    }
  }
}

TEST_CASE("hdepth worked values") {
  CHECK(hdepth(alpha_of({0, 0, 4, 4, 1})) == 3);
  CHECK(hdepth(alpha_of({0, 0, 1})) == 2);
  CHECK(hdepth(alpha_of({1, 3, 3, 0})) == 2);
  CHECK_THROWS_AS(hdepth(alpha_of({0, 0, 0})), ZeroModuleError);
}

TEST_CASE("hdepth of the full lattice is n and never negative") {
  std::mt19937_64 rng(3);
  for (int n = 0; n <= 12; ++n) {
    AlphaVector full;
    full.ground_size = n;
    for (int k = 0; k <= n; ++k) full.counts.push_back(binom_nat(n, k));
    CHECK(hdepth(full) == n);
    AlphaVector a = random_alpha(rng, n);
    if (!a.is_zero()) {
      int h = hdepth(a);
      CHECK(h >= 0);
      CHECK(h <= n);
      // maximality: every row above h has a negative entry
      for (int d = h + 1; d <= n; ++d) CHECK(first_negative(a, d).has_value());
      CHECK_FALSE(first_negative(a, h).has_value());
    }
  }
}

TEST_CASE("qdepth_of_pair worked values") {
  CHECK(qdepth_of_pair(QuotientPair::quotient(bipartite(2, 2))) == 1);
  CHECK(qdepth_of_pair(QuotientPair::ideal(bipartite(3, 2))) == 3);
  CHECK(qdepth_of_pair(QuotientPair::quotient(SquarefreeIdeal::zero(3))) == 3);
  CHECK_THROWS_AS(qdepth_of_pair(QuotientPair::ideal(SquarefreeIdeal::zero(3))), ZeroModuleError);
}

TEST_CASE("first failing entry certifies maximality") {
  auto e = first_negative(alpha_vector(QuotientPair::ideal(bipartite(2, 2))), 4);
  REQUIRE(e);
  CHECK(e->k == 3);
  CHECK(e->value == -4);
  auto q = first_negative(alpha_vector(QuotientPair::quotient(multipartite(MultipartiteSpec({1, 1, 1})))), 3);
  REQUIRE(q);
  CHECK(q->k == 3);
  CHECK(q->value == -1);
}

TEST_CASE("BetaTable rows") {
  auto t = BetaTable::of(alpha_of({1, 3, 3, 0}));
  REQUIRE(t.rows.size() == 4);
  CHECK(longs(t.rows[3]) == std::vector<long>{1, 0, 0, -1});
}
