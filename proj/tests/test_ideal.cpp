#include <doctest.h>

#include <random>

#include "sqfdepth/ideal.hpp"
#include "sqfdepth/ideal_io.hpp"

using namespace sqfdepth;

namespace {

SquarefreeIdeal ideal_of(int n, std::initializer_list<std::initializer_list<int>> gens) {
  std::vector<VarSet> v;
  for (auto g : gens) v.push_back(VarSet::of(n, g));
  return minimalize(n, v);
}

SquarefreeIdeal random_ideal(std::mt19937_64& rng, int n, int max_gens) {
  std::uniform_int_distribution<Mask> bits(0, (Mask{1} << n) - 1);
  std::uniform_int_distribution<int> count(0, max_gens);
  std::vector<VarSet> gens;
  for (int i = count(rng); i > 0; --i) gens.emplace_back(n, bits(rng));
  return minimalize(n, gens);
}

// Direct definition: some generator is a subset of u.
bool naive_contains(const SquarefreeIdeal& ideal, Mask u) {
  for (const VarSet& g : ideal.generators())
    if ((g.bits() & u) == g.bits()) return true;
  return false;
}

} // namespace

TEST_CASE("VarSet basics") {
  VarSet a = VarSet::of(5, {1, 3});
  CHECK(a.size() == 2);
  CHECK(a.contains(3));
  CHECK_FALSE(a.contains(2));
  CHECK(a.members() == std::vector<int>{1, 3});
  CHECK(a.to_string() == "[1,3]");
  CHECK(VarSet::empty(5).to_string() == "[]");
  CHECK(a.subset_of(VarSet::of(5, {1, 2, 3})));
  CHECK_THROWS_AS(VarSet::of(3, {4}), std::invalid_argument);
  CHECK_THROWS_AS(VarSet::of(3, {0}), std::invalid_argument);
  CHECK(VarSet::full(64).size() == 64);
  CHECK(VarSet::of(3, {1}) < VarSet::of(3, {1, 2}));
  CHECK(VarSet::of(3, {1, 2}) < VarSet::of(3, {1, 3}));
}

TEST_CASE("minimalize") {
  CHECK(ideal_of(3, {{1, 2}, {1, 2, 3}}).generators() == std::vector<VarSet>{VarSet::of(3, {1, 2})});
  CHECK(minimalize(3, {}).is_zero());
  CHECK(ideal_of(3, {{1}, {2}, {1, 2}}).generators() ==
        std::vector<VarSet>{VarSet::of(3, {1}), VarSet::of(3, {2})});
  std::vector<VarSet> mixed{VarSet::of(3, {1}), VarSet::of(4, {2})};
  CHECK_THROWS_AS(minimalize(3, mixed), std::invalid_argument);
}

TEST_CASE("minimalize yields an antichain with unchanged membership") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 8;
    std::uniform_int_distribution<Mask> bits(0, (Mask{1} << n) - 1);
    std::vector<VarSet> raw;
    for (int i = 0; i < 6; ++i) raw.emplace_back(n, bits(rng));
    SquarefreeIdeal ideal = minimalize(n, raw);
    const auto& g = ideal.generators();
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j)
        if (i != j) REQUIRE_FALSE(g[i].subset_of(g[j]));
    for (Mask u = 0; u < (Mask{1} << n); ++u) {
      bool raw_member = false;
      for (const VarSet& v : raw) raw_member = raw_member || (v.bits() & ~u) == 0;
      REQUIRE(ideal.contains(u) == raw_member);
    }
  }
}

TEST_CASE("contains") {
  auto i = ideal_of(3, {{1, 2}});
  CHECK(contains(i, VarSet::of(3, {1, 2, 3})));
  CHECK_FALSE(contains(i, VarSet::of(3, {1, 3})));
  CHECK_FALSE(contains(SquarefreeIdeal::zero(3), VarSet::of(3, {1, 2, 3})));
  CHECK(contains(SquarefreeIdeal::unit(3), VarSet::empty(3)));
  CHECK_THROWS_AS(contains(i, VarSet::of(4, {1})), std::invalid_argument);
}

TEST_CASE("intersect worked values") {
  auto a = ideal_of(4, {{1}, {3}});
  auto b = ideal_of(4, {{2}, {4}});
  CHECK(intersect(a, b) == ideal_of(4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}}));
  auto x1 = ideal_of(2, {{1}});
  CHECK(intersect(x1, x1) == x1);
  CHECK(intersect(x1, ideal_of(2, {{2}})) == ideal_of(2, {{1, 2}}));
}

TEST_CASE("intersect is membership conjunction, exhaustively for n <= 10") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 10; ++n)
    for (int trial = 0; trial < 6; ++trial) {
      auto a = random_ideal(rng, n, 4);
      auto b = random_ideal(rng, n, 4);
      auto c = intersect(a, b);
      for (Mask u = 0; u < (Mask{1} << n); ++u)
        REQUIRE(c.contains(u) == (naive_contains(a, u) && naive_contains(b, u)));
    }
}

TEST_CASE("multipartite generators") {
  CHECK(multipartite(MultipartiteSpec({1, 1, 1})) == ideal_of(3, {{1, 2, 3}}));
  CHECK(multipartite(MultipartiteSpec({2, 2})) == ideal_of(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  CHECK(multipartite(MultipartiteSpec({2, 1, 1})) == ideal_of(4, {{1, 3, 4}, {2, 3, 4}}));
  CHECK_THROWS_AS(MultipartiteSpec({}), std::invalid_argument);
  CHECK_THROWS_AS(MultipartiteSpec({2, 0}), std::invalid_argument);
}

TEST_CASE("multipartite equals the intersection of block primes") {
  for (auto blocks : std::vector<std::vector<int>>{{1}, {3}, {2, 2}, {3, 1, 2}, {2, 2, 2}, {1, 2, 3, 1}}) {
    MultipartiteSpec spec(blocks);
    SquarefreeIdeal acc = SquarefreeIdeal::unit(spec.total());
    long expected_gens = 1;
    for (int i = 0; i < spec.parts(); ++i) {
      acc = intersect(acc, prime_ideal(spec.total(), spec.block_variables(i)));
      expected_gens *= blocks[i];
    }
    auto ideal = multipartite(spec);
    CHECK(ideal == acc);
    CHECK(static_cast<long>(ideal.generators().size()) == expected_gens);
  }
}

TEST_CASE("path_aux worked values") {
  CHECK(path_aux(2, 2) == ideal_of(4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}}));
  CHECK(path_aux(1, 1) == ideal_of(2, {{1}, {2}}));
  CHECK(path_aux(3, 1) == ideal_of(4, {{1, 2, 3}, {2, 3, 4}}));
}

TEST_CASE("path_aux intersection form equals the unordered residue-class form") {
  for (int m = 1; m <= 4; ++m)
    for (int t = 1; t <= 6; ++t) CHECK(path_aux(m, t) == path_aux_residue_form(m, t));
}

TEST_CASE("cycle_aux") {
  CHECK(cycle_aux(4, 2) == ideal_of(4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}}));
  CHECK(cycle_aux(3, 1) == ideal_of(3, {{1}, {2}, {3}}));
  CHECK(cycle_aux(6, 3) == intersect(intersect(ideal_of(6, {{1}, {4}}), ideal_of(6, {{2}, {5}})),
                                     ideal_of(6, {{3}, {6}})));
  CHECK_THROWS_AS(cycle_aux(6, 4), std::invalid_argument);
}

TEST_CASE("QuotientPair validates I subset J") {
  auto j = ideal_of(3, {{1}});
  auto i = ideal_of(3, {{1, 2}});
  CHECK_NOTHROW(QuotientPair(i, j));
  CHECK_THROWS_AS(QuotientPair(j, i), std::invalid_argument);
}

TEST_CASE("alpha_vector worked values") {
  auto b22 = multipartite(MultipartiteSpec({2, 2}));
  auto to_longs = [](const AlphaVector& a) {
    std::vector<long> v;
    for (const auto& c : a.counts) v.push_back(c.get_si());
    return v;
  };
  CHECK(to_longs(alpha_vector(QuotientPair::ideal(b22))) == std::vector<long>{0, 0, 4, 4, 1});
  CHECK(to_longs(alpha_vector(QuotientPair::quotient(multipartite(MultipartiteSpec({1, 1, 1}))))) ==
        std::vector<long>{1, 3, 3, 0});
  CHECK(to_longs(alpha_vector(QuotientPair::quotient(SquarefreeIdeal::zero(2)))) == std::vector<long>{1, 2, 1});
}

TEST_CASE("alpha_vector respects the enumeration cap") {
  auto big = maximal_ideal(20);
  CHECK_THROWS_AS(alpha_vector(QuotientPair::ideal(big), 16), ResourceError);
}

TEST_CASE("rank additivity and convexity on random pairs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 9;
    auto j = random_ideal(rng, n, 4);
    auto i = intersect(j, random_ideal(rng, n, 4));
    QuotientPair ji(i, j);
    auto a_ji = alpha_vector(ji);
    auto a_i = alpha_vector(QuotientPair::ideal(i));
    auto a_j = alpha_vector(QuotientPair::ideal(j));
    for (int k = 0; k <= n; ++k) {
      REQUIRE(a_j.counts[k] == a_ji.counts[k] + a_i.counts[k]);
      REQUIRE(a_ji.counts[k] <= binom_nat(n, k));
    }
    REQUIRE(region_is_convex(ji, 24));
  }
}

TEST_CASE("ideal text format") {
  auto ideal = parse_ideal("# comment\nn 4\n1 2\n\n2 3 4\n1 2 3\n");
  CHECK(ideal == ideal_of(4, {{1, 2}, {2, 3, 4}}));
  CHECK(parse_ideal(format_ideal(ideal)) == ideal);
  CHECK(parse_ideal("n 3\n").is_zero());
  CHECK(parse_ideal("n 3\n-\n").is_unit());

  auto line_of = [](const std::string& text) {
    try {
      parse_ideal(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("1 2\n") == 1);
  CHECK(line_of("n 3\n1 2\n1 x\n") == 3);
  CHECK(line_of("n 3\n\n1 4\n") == 3);
  CHECK(line_of("") == 1);
}
