#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqfdepth/combinatorics.hpp"

namespace sqfdepth {

using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;

/// Raised when an exhaustive computation would exceed its configured cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest ground size for which the lattice 2^[n] is enumerated.
/// Defaults to 24; the ENUM_CAP environment variable overrides it.
int default_enum_cap();

/// A subset of [n] = {1,...,n}, i.e. the support of a squarefree monomial.
class VarSet {
 public:
  VarSet() = default;
  VarSet(int ground_size, Mask bits);

  /// Builds from 1-based variable indices.
  static VarSet of(int ground_size, std::initializer_list<int> indices);
  static VarSet of(int ground_size, std::span<const int> indices);
  static VarSet empty(int ground_size) { return VarSet(ground_size, 0); }
  static VarSet full(int ground_size);

  int ground_size() const { return ground_; }
  Mask bits() const { return bits_; }
  int size() const;
  bool contains(int index) const { return (bits_ >> (index - 1)) & 1U; }
  bool subset_of(const VarSet& other) const { return (bits_ & ~other.bits_) == 0; }
  VarSet unite(const VarSet& other) const;

  /// Sorted 1-based indices.
  std::vector<int> members() const;
  std::string to_string() const;

  friend bool operator==(const VarSet&, const VarSet&) = default;
  /// Graded order: by cardinality, then by bit pattern.
  friend std::strong_ordering operator<=>(const VarSet& a, const VarSet& b);

 private:
  int ground_ = 0;
  Mask bits_ = 0;
};

/// A squarefree monomial ideal stored by its minimal generators.
/// No generators is the zero ideal; the single empty generator is the unit ideal.
class SquarefreeIdeal {
 public:
  static SquarefreeIdeal zero(int ground_size);
  static SquarefreeIdeal unit(int ground_size);

  int ground_size() const { return ground_; }
  const std::vector<VarSet>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().bits() == 0; }

  bool contains(const VarSet& u) const;
  bool contains(Mask u) const;

  friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;

 private:
  friend SquarefreeIdeal minimalize(int, std::span<const VarSet>);
  SquarefreeIdeal(int ground, std::vector<VarSet> gens) : ground_(ground), gens_(std::move(gens)) {}

  int ground_ = 0;
  std::vector<VarSet> gens_;  // antichain, sorted by VarSet ordering
};

/// Keeps the inclusion-minimal sets. Rejects mixed or mismatching ground sizes.
SquarefreeIdeal minimalize(int ground_size, std::span<const VarSet> gens);

/// Membership test: true iff some generator divides x_u.
bool contains(const SquarefreeIdeal& ideal, const VarSet& u);

SquarefreeIdeal intersect(const SquarefreeIdeal& a, const SquarefreeIdeal& b);

/// The monomial prime (x_i : i in indices) on the given ground set.
SquarefreeIdeal prime_ideal(int ground_size, std::span<const int> indices);

/// Block sizes (n_1,...,n_r) of I_{n_1,...,n_r}.
class MultipartiteSpec {
 public:
  explicit MultipartiteSpec(std::vector<int> blocks);

  const std::vector<int>& blocks() const { return blocks_; }
  int parts() const { return static_cast<int>(blocks_.size()); }
  int total() const { return total_; }
  /// 1-based variable indices of block i (0-based block number).
  std::vector<int> block_variables(int i) const;
  std::string to_string() const;

 private:
  std::vector<int> blocks_;
  int total_ = 0;
};

/// Intersection of the variable-disjoint block primes; generators are the
/// transversals that pick one variable from every block.
SquarefreeIdeal multipartite(const MultipartiteSpec& spec);

/// Edge ideal of K_{n,m}: (x_1..x_n) cap (x_{n+1}..x_{n+m}).
SquarefreeIdeal bipartite(int n, int m);

/// The maximal ideal (x_1,...,x_n).
SquarefreeIdeal maximal_ideal(int n);

/// U_{m,t} on t+m variables, built as the intersection of the residue-class
/// primes V_{m,j,k} = (x_j, x_{j+m}, ..., x_{j+(k-1)m}).
SquarefreeIdeal path_aux(int m, int t);

/// U_{m,t} from its generator description: products x_{i_1}...x_{i_m} with
/// i_j = j (mod m), indices taken without any ordering constraint.
SquarefreeIdeal path_aux_residue_form(int m, int t);

/// U'_{n,d} = intersection over j of (x_j, x_{d+j}, ..., x_{(r-1)d+j}), r = n/d.
SquarefreeIdeal cycle_aux(int n, int d);

/// The pair I subset J defining the region P_{J/I} = {C : x_C in J, x_C not in I}.
class QuotientPair {
 public:
  QuotientPair(SquarefreeIdeal lower, SquarefreeIdeal upper);

  /// I viewed as the module I/0.
  static QuotientPair ideal(const SquarefreeIdeal& i);
  /// S/I.
  static QuotientPair quotient(const SquarefreeIdeal& i);

  const SquarefreeIdeal& lower() const { return lower_; }
  const SquarefreeIdeal& upper() const { return upper_; }
  int ground_size() const { return upper_.ground_size(); }

  bool in_region(Mask c) const { return upper_.contains(c) && !lower_.contains(c); }

 private:
  SquarefreeIdeal lower_;
  SquarefreeIdeal upper_;
};

/// Membership table of an ideal over 2^[n], indexed by bitmask.
std::vector<std::uint8_t> membership_table(const SquarefreeIdeal& ideal, int cap);

/// Region table of P_{J/I} over 2^[n], indexed by bitmask.
std::vector<std::uint8_t> region_table(const QuotientPair& pair, int cap);

/// True iff A subset B subset C with A, C in P forces B in P. Exponential.
bool region_is_convex(const QuotientPair& pair, int cap);

struct AlphaVector {
  int ground_size = 0;
  std::vector<ExactInt> counts;  // counts[k] = alpha_k, k = 0..n

  bool is_zero() const;
  friend bool operator==(const AlphaVector&, const AlphaVector&) = default;
};

/// Rank counts of P_{J/I} by exhaustive enumeration. Throws ResourceError
/// past the cap.
AlphaVector alpha_vector(const QuotientPair& pair, int cap = default_enum_cap());

} // namespace sqfdepth
