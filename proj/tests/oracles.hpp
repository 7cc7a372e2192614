#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "sqfdepth/ideal.hpp"

namespace sqfdepth::testing {


// Independent oracle: enumerates interval partitions by always covering the
// uncovered element with the smallest bitmask, trying every interval [C,D]
// in P that contains it. Branch and bound on the best min-top found so far.
class NaiveSdepth {
 public:
  explicit NaiveSdepth(const QuotientPair& pair) : region_(region_table(pair, 8)) {
    uncovered_ = region_;
  }

  int best() {
    if (std::none_of(region_.begin(), region_.end(), [](auto v) { return v != 0; })) return -1;
    best_ = -1;
    recurse(64);
    return best_;
  }

 private:
  void recurse(int current_min) {
    std::size_t a = 0;
    while (a < uncovered_.size() && !uncovered_[a]) ++a;
    if (a == uncovered_.size()) {
      best_ = std::max(best_, current_min);
      return;
    }
    const std::size_t full = uncovered_.size() - 1;
    for (std::size_t c = a;; c = (c - 1) & a) {  // every subset C of a
      if (uncovered_[c]) {
        const std::size_t rest = full & ~a;
        for (std::size_t x = rest;; x = (x - 1) & rest) {  // every D = a | x
          const std::size_t d = a | x;
          const int top = std::popcount(d);
          if (std::min(current_min, top) > best_ && all_uncovered(c, d)) {
            set(c, d, 0);
            recurse(std::min(current_min, top));
            set(c, d, 1);
          }
          if (x == 0) break;
        }
      }
      if (c == 0) break;
    }
  }

  bool all_uncovered(std::size_t c, std::size_t d) const {
    const std::size_t free = d & ~c;
    for (std::size_t x = free;; x = (x - 1) & free) {
      if (!uncovered_[c | x]) return false;
      if (x == 0) break;
    }
    return true;
  }

  void set(std::size_t c, std::size_t d, std::uint8_t v) {
    const std::size_t free = d & ~c;
    for (std::size_t x = free;; x = (x - 1) & free) {
      uncovered_[c | x] = v;
      if (x == 0) break;
    }
  }

  std::vector<std::uint8_t> region_;
  std::vector<std::uint8_t> uncovered_;
  int best_ = -1;
};

inline SquarefreeIdeal random_ideal(std::mt19937_64& rng, int n, int max_gens) {
  std::uniform_int_distribution<Mask> bits(0, (Mask{1} << n) - 1);
  std::uniform_int_distribution<int> count(1, max_gens);
  std::vector<VarSet> gens;
  for (int i = count(rng); i > 0; --i) gens.emplace_back(n, bits(rng));
  return minimalize(n, gens);
}


} // namespace sqfdepth::testing
