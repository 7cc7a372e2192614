#include "sqfdepth/stanley.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <random>
#include <unordered_set>
#include <sstream>

#include "sqfdepth/hilbert.hpp"

namespace sqfdepth {

const char* to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::undecided: return "undecided";
  }
  return "?";
}

std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("SDEPTH_NODE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

bool verify_partition(const QuotientPair& pair, const IntervalPartition& part, int d, int cap) {
  const int n = pair.ground_size();
  auto region = region_table(pair, cap);
  std::vector<std::uint8_t> covered(region.size(), 0);
  for (const Interval& iv : part) {
    if (iv.base.ground_size() != n || iv.top.ground_size() != n) return false;
    if (!iv.base.subset_of(iv.top)) return false;
    if (iv.top.size() < d) return false;
    const Mask base = iv.base.bits();
    const Mask free = iv.top.bits() & ~base;
    // Walk every subset of `free`.
    Mask x = 0;
    do {
      const Mask s = base | x;
      if (!region[s] || covered[s]) return false;
      covered[s] = 1;
      x = (x - free) & free;
    } while (x != 0);
  }
  for (std::size_t s = 0; s < region.size(); ++s)
    if (region[s] && !covered[s]) return false;
  return true;
}

namespace {

struct BudgetExhausted {};

// 128-bit Zobrist fingerprint of the uncovered set.
struct Fingerprint {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  bool operator==(const Fingerprint&) const = default;
};

struct FingerprintHash {
  std::size_t operator()(const Fingerprint& f) const { return static_cast<std::size_t>(f.lo ^ (f.hi * 0x9e3779b97f4a7c15ULL)); }
};

constexpr std::size_t kMemoLimit = 1u << 22;
constexpr int kLinkSize = 2;
constexpr std::size_t kAutomorphismLimit = 2000;

using Permutation = std::vector<int>;

Mask permute(const Permutation& p, Mask s) {
  Mask out = 0;
  for (; s; s &= s - 1) out |= Mask{1} << p[std::countr_zero(s)];
  return out;
}

// Variable permutations mapping the region onto itself, identity first,
// at most `limit` of them.
std::vector<Permutation> region_automorphisms(int n, const std::vector<std::uint8_t>& region, std::size_t limit) {
  std::vector<Permutation> out;
  Permutation p(n, -1);
  std::vector<std::uint8_t> used(n, 0);
  std::function<void(int)> assign = [&](int k) {
    if (out.size() >= limit) return;
    if (k == n) {
      out.push_back(p);
      return;
    }
    for (int v = 0; v < n && out.size() < limit; ++v) {
      if (used[v]) continue;
      p[k] = v;
      // Every set whose largest variable is k must keep its membership.
      bool ok = true;
      const Mask low = (Mask{1} << k) - 1;
      for (Mask rest = low;; rest = (rest - 1) & low) {
        const Mask s = rest | (Mask{1} << k);
        if (region[s] != region[permute(p, s)]) {
          ok = false;
          break;
        }
        if (rest == 0) break;
      }
      if (ok) {
        used[v] = 1;
        assign(k + 1);
        used[v] = 0;
      }
    }
    p[k] = -1;
  };
  assign(0);
  return out;
}

// Backtracking over interval partitions whose non-singleton tops all have
// exactly `target` elements. Any partition with tops >= target refines to
// that shape, and elements of rank >= target may stay singletons, so the
// restriction loses nothing. Each node covers a minimum-rank uncovered
// element A; in any completion, A is the base of its own interval.
class PartitionSearcher {
 public:
  PartitionSearcher(int n, std::vector<std::uint8_t> region, int target, std::uint64_t budget)
      : n_(n), target_(target), budget_(budget), uncovered_(std::move(region)),
        by_rank_(n + 1), left_(n + 1, 0), keys_(uncovered_.size()) {
    std::mt19937_64 rng(0x5d3a);
    for (auto& k : keys_) k = {rng(), rng()};
    for (std::size_t t = 0; t < uncovered_.size(); ++t)
      if (std::popcount(t) <= kLinkSize) links_.push_back(static_cast<Mask>(t));
    link_left_.assign(links_.size(), std::vector<long long>(n + 1, 0));
    for (std::size_t s = 0; s < uncovered_.size(); ++s)
      if (uncovered_[s]) {
        toggle(s);
        by_rank_[std::popcount(s)].push_back(static_cast<Mask>(s));
        count(s, 1);
      }
    binom_.assign(n + 1, std::vector<long long>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
      binom_[i][0] = 1;
      for (int j = 1; j <= i; ++j) binom_[i][j] = binom_[i - 1][j - 1] + (j <= i - 1 ? binom_[i - 1][j] : 0);
    }
  }

  bool run() {
    std::vector<const Permutation*> all;
    autos_ = region_automorphisms(n_, uncovered_, kAutomorphismLimit);
    for (std::size_t i = 1; i < autos_.size(); ++i) all.push_back(&autos_[i]);
    return search(all);
  }
  std::uint64_t nodes() const { return nodes_; }

  IntervalPartition witness() const {
    IntervalPartition out;
    for (const auto& [base, top] : placed_) out.push_back({VarSet(n_, base), VarSet(n_, top)});
    for (std::size_t s = 0; s < uncovered_.size(); ++s)
      if (uncovered_[s]) out.push_back({VarSet(n_, s), VarSet(n_, s)});
    return out;
  }

 private:
  // `symmetries` are region automorphisms, identity excluded, that map the
  // current uncovered family onto itself.
  bool search(const std::vector<const Permutation*>& symmetries) {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    int rank = 0;
    while (rank < target_ && left_[rank] == 0) ++rank;
    if (rank >= target_) return true;
    if (!counts_feasible()) return false;
    if (failed_.contains(state_)) return false;
    if (!expand(rank, symmetries)) {
      if (failed_.size() < kMemoLimit) failed_.insert(state_);
      return false;
    }
    return true;
  }

  bool expand(int rank, const std::vector<const Permutation*>& symmetries) {

    // Among uncovered elements of minimum rank, branch on the one with the
    // fewest admissible tops; stop early on an element with none.
    Mask best = 0;
    std::vector<Mask> best_tops;
    bool have = false;
    for (Mask a : by_rank_[rank]) {
      if (!uncovered_[a]) continue;
      std::vector<Mask> tops;
      collect_tops(a, tops);
      if (tops.empty()) return false;
      if (!have || tops.size() < best_tops.size()) {
        best = a;
        best_tops = std::move(tops);
        have = true;
        if (best_tops.size() == 1) break;
      }
    }
    // Every other uncovered element below the target rank must still admit a top.
    for (int k = rank + 1; k < target_; ++k)
      for (Mask b : by_rank_[k])
        if (uncovered_[b] && !has_top(b)) return false;

    // Symmetries fixing the base map solutions through one top onto
    // solutions through its image, so a top equivalent to a failed one is skipped.
    std::vector<const Permutation*> fixing;
    for (const Permutation* p : symmetries)
      if (permute(*p, best) == best) fixing.push_back(p);
    std::vector<Mask> failed_tops;
    std::vector<const Permutation*> child;
    for (Mask top : best_tops) {
      bool equivalent = false;
      for (const Permutation* p : fixing) {
        const Mask image = permute(*p, top);
        if (image != top && std::find(failed_tops.begin(), failed_tops.end(), image) != failed_tops.end()) {
          equivalent = true;
          break;
        }
      }
      if (equivalent) continue;
      child.clear();
      for (const Permutation* p : fixing)
        if (permute(*p, top) == top) child.push_back(p);
      cover(best, top, 0);
      placed_.emplace_back(best, top);
      if (search(child)) return true;
      placed_.pop_back();
      cover(best, top, 1);
      failed_tops.push_back(top);
    }
    return false;
  }

  // A partition of the uncovered family with tops of size target has exactly
  // beta_k intervals with base rank k, so the beta^target row of the rank
  // counts is nonnegative. Restricting to the elements containing a set T
  // gives a partition with tops of size target - |T| on the link of T, so the
  // same holds there.
  bool counts_feasible() const {
    for (std::size_t t = 0; t < links_.size(); ++t) {
      const int shift = std::popcount(links_[t]);
      const int d = target_ - shift;
      if (d < 0) continue;
      long long beta[kMaxGround + 1];
      for (int k = 0; k <= d; ++k) {
        long long v = link_left_[t][k + shift];
        for (int j = 0; j < k; ++j) v -= binom_[d - j][k - j] * beta[j];
        if (v < 0) return false;
        beta[k] = v;
      }
    }
    return true;
  }

  void count(Mask s, int delta) {
    const int r = std::popcount(s);
    left_[r] += delta;
    for (std::size_t t = 0; t < links_.size(); ++t)
      if ((s & links_[t]) == links_[t]) link_left_[t][r] += delta;
  }

  void cover(Mask base, Mask top, std::uint8_t value) {
    const Mask free = top & ~base;
    Mask x = 0;
    do {
      const Mask s = base | x;
      uncovered_[s] = value;
      toggle(s);
      count(s, value ? 1 : -1);
      x = (x - free) & free;
    } while (x != 0);
  }

  void toggle(std::size_t s) {
    state_.lo ^= keys_[s].lo;
    state_.hi ^= keys_[s].hi;
  }

  // True iff [base, top] consists of uncovered elements only.
  bool interval_open(Mask base, Mask top) const {
    const Mask free = top & ~base;
    Mask x = 0;
    do {
      if (!uncovered_[base | x]) return false;
      x = (x - free) & free;
    } while (x != 0);
    return true;
  }

  // Variables x outside a with a + x still uncovered.
  std::vector<int> extension_vars(Mask a) const {
    std::vector<int> vars;
    for (int i = 0; i < n_; ++i) {
      const Mask bit = Mask{1} << i;
      if (!(a & bit) && uncovered_[a | bit]) vars.push_back(i);
    }
    return vars;
  }

  // Tops of size exactly target over base a, in lexicographic order.
  void collect_tops(Mask a, std::vector<Mask>& out) const {
    const int need = target_ - std::popcount(a);
    auto vars = extension_vars(a);
    extend(a, a, vars, 0, need, [&](Mask top) {
      out.push_back(top);
      return false;
    });
  }

  bool has_top(Mask a) const {
    const int need = target_ - std::popcount(a);
    auto vars = extension_vars(a);
    return extend(a, a, vars, 0, need, [](Mask) { return true; });
  }

  // Depth-first growth of top from base using vars[from..]; every partial
  // interval stays open. Returns true as soon as `found` does.
  template <typename F>
  bool extend(Mask base, Mask top, const std::vector<int>& vars, std::size_t from, int need, F&& found) const {
    if (need == 0) return found(top);
    if (vars.size() - from < static_cast<std::size_t>(need)) return false;
    for (std::size_t i = from; i + need <= vars.size(); ++i) {
      const Mask bit = Mask{1} << vars[i];
      // New elements of [base, top + bit] are {s + bit : s in [base, top]}.
      if (!interval_open(base | bit, top | bit)) continue;
      if (extend(base, top | bit, vars, i + 1, need - 1, found)) return true;
    }
    return false;
  }

  int n_;
  int target_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint8_t> uncovered_;
  std::vector<std::vector<Mask>> by_rank_;
  std::vector<long long> left_;
  std::vector<std::vector<long long>> binom_;
  std::vector<std::pair<Mask, Mask>> placed_;
  std::vector<Permutation> autos_;
  std::vector<Mask> links_;  // the sets T of size <= kLinkSize
  std::vector<std::vector<long long>> link_left_;
  std::vector<Fingerprint> keys_;
  Fingerprint state_;
  std::unordered_set<Fingerprint, FingerprintHash> failed_;  // uncovered sets known to have no completion
};

int min_rank(const std::vector<std::uint8_t>& region) {
  int best = -1;
  for (std::size_t s = 0; s < region.size(); ++s)
    if (region[s] && (best < 0 || std::popcount(s) < best)) best = std::popcount(s);
  return best;
}

} // namespace

PartitionSearch exists_partition(const QuotientPair& pair, int d, const SolverOptions& opts) {
  PartitionSearch result;
  const int n = pair.ground_size();
  if (n > opts.ground_cap) return result;
  if (d > n) {
    // Tops have at most n elements; only the empty region qualifies.
    auto region = region_table(pair, opts.ground_cap);
    bool empty = std::none_of(region.begin(), region.end(), [](std::uint8_t v) { return v != 0; });
    result.decision = empty ? Decision::yes : Decision::no;
    if (empty) result.witness = IntervalPartition{};
    return result;
  }
  PartitionSearcher searcher(n, region_table(pair, opts.ground_cap), std::max(d, 0), opts.node_budget);
  try {
    bool found = searcher.run();
    result.decision = found ? Decision::yes : Decision::no;
    if (found) result.witness = searcher.witness();
  } catch (const BudgetExhausted&) {
    result.decision = Decision::undecided;
  }
  result.nodes = searcher.nodes();
  return result;
}

SdepthResult sdepth_exact(const QuotientPair& pair, const SolverOptions& opts) {
  const int n = pair.ground_size();
  SdepthResult out;
  if (n > opts.ground_cap) {
    // Bounds only: singleton intervals give the minimum rank, hdepth caps it.
    auto region = region_table(pair, default_enum_cap());
    int lo = min_rank(region);
    if (lo < 0) throw ZeroModuleError();
    out.lower = lo;
    out.upper = hdepth(alpha_vector(pair));
    return out;
  }
  const int upper = hdepth(alpha_vector(pair, opts.ground_cap));
  out.upper = upper;
  bool clean = true;  // no undecided level above the current one
  for (int d = upper; d >= 0; --d) {
    PartitionSearch s = exists_partition(pair, d, opts);
    out.nodes += s.nodes;
    if (s.decision == Decision::yes) {
      out.lower = d;
      out.witness = std::move(s.witness);
      return out;
    }
    if (s.decision == Decision::no && clean) out.upper = d - 1;
    if (s.decision == Decision::undecided) clean = false;
  }
  throw std::logic_error("sdepth_exact: no partition found at d = 0");
}

std::string format_witness(const IntervalPartition& part) {
  std::ostringstream out;
  for (const Interval& iv : part) out << iv.base.to_string() << " -> " << iv.top.to_string() << '\n';
  return out.str();
}

} // namespace sqfdepth
