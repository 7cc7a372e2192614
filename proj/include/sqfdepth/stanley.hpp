#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqfdepth/ideal.hpp"

namespace sqfdepth {

/// The interval [base, top] = {A : base subset A subset top}.
struct Interval {
  VarSet base;
  VarSet top;

  friend bool operator==(const Interval&, const Interval&) = default;
};

using IntervalPartition = std::vector<Interval>;

/// True iff the intervals lie in P, are pairwise disjoint, cover P exactly,
/// and every top has at least d elements.
bool verify_partition(const QuotientPair& pair, const IntervalPartition& part, int d,
                      int cap = default_enum_cap());

enum class Decision { yes, no, undecided };

const char* to_string(Decision d);

/// Node budget for one partition search: SDEPTH_NODE_BUDGET or 10^7.
std::uint64_t default_node_budget();

struct SolverOptions {
  int ground_cap = 12;
  std::uint64_t node_budget = default_node_budget();
};

struct PartitionSearch {
  Decision decision = Decision::undecided;
  std::optional<IntervalPartition> witness;  // set iff decision == yes
  std::uint64_t nodes = 0;
};

/// Decides whether P_{J/I} has an interval partition with every top of size
/// >= d. Exhausting the node budget, or a ground set past the solver cap,
/// gives Decision::undecided.
PartitionSearch exists_partition(const QuotientPair& pair, int d, const SolverOptions& opts = {});

struct SdepthResult {
  int lower = 0;
  int upper = 0;
  std::optional<IntervalPartition> witness;  // certifies `lower`
  std::uint64_t nodes = 0;

  bool solved() const { return lower == upper; }
};

/// Stanley depth of P_{J/I}. The search starts at the Hilbert depth and
/// walks down; an undecided level leaves a window [lower, upper].
/// Throws ZeroModuleError for an empty region.
SdepthResult sdepth_exact(const QuotientPair& pair, const SolverOptions& opts = {});

/// One interval per line: "[1,3] -> [1,2,3]".
std::string format_witness(const IntervalPartition& part);

} // namespace sqfdepth
