#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqfdepth/combinatorics.hpp"
#include "sqfdepth/ideal.hpp"

namespace sqfdepth {

/// Which module of a family: the ideal I (as I/0) or the quotient S/I.
enum class Part { ideal, quotient };

const char* to_string(Part p);

/// Parameters of the complete-bipartite edge ideal, n >= m >= 1.
struct BipartiteParams {
  int n;
  int m;

  BipartiteParams(int n_, int m_);
  int total() const { return n + m; }
};

/// A window for one invariant, with the rule it comes from.
struct BoundReport {
  std::string quantity;
  std::optional<long> lower;
  std::optional<long> upper;
  std::optional<long> exact;
  std::string citation;
  std::vector<std::string> notes;

  /// lower <= exact <= upper wherever both sides are present.
  bool consistent() const;
  /// True iff v lies in the window (missing sides are unbounded).
  bool admits(long v) const;
};

// ------------------------------------------------------------ bipartite

/// Rank counts from C(N,k) - C(n,k) - C(m,k) + [k=0] (ideal) and
/// C(n,k) + C(m,k) - [k=0] (quotient).
ExactInt bipartite_alpha(const BipartiteParams& p, int k, Part which);

/// Ideal rank counts as the convolution sum_{j=1}^{k-1} C(n,j) C(m,k-j).
ExactInt bipartite_alpha_convolution(const BipartiteParams& p, int k);

ExactInt bipartite_beta(const BipartiteParams& p, int d, int k, Part which);

/// beta^d_3(I) = n m (n + m - 2d + 2) / 2, valid for d >= 3.
ExactInt bipartite_beta3_cubic(const BipartiteParams& p, int d);

/// floor(n + m + 1/2 - sqrt(2mn + 1/4)), decided with integer arithmetic.
int bipartite_qdepth_quotient_upper(const BipartiteParams& p);

/// Largest d <= n+m with C(d-n,2l) + C(d-m,2l) >= C(d,2l) for every
/// 1 <= l <= d/2 (polynomial binomials). Needs m >= 2; m = 1 is answered by
/// enumeration.
int bipartite_qdepth_quotient(const BipartiteParams& p);

/// floor((n+m+2)/2).
int bipartite_hdepth_ideal(const BipartiteParams& p);

struct BipartiteSdepthBounds {
  BoundReport quotient;
  BoundReport ideal;
};

BipartiteSdepthBounds bipartite_sdepth_bounds(const BipartiteParams& p);

// ---------------------------------------------------------- multipartite

/// Rank counts by inclusion-exclusion over subsets of blocks.
ExactInt multipartite_alpha(const MultipartiteSpec& spec, int k, Part which);

/// Ideal rank counts summed over compositions l_1 + ... + l_r = k, l_i >= 1.
ExactInt multipartite_alpha_compositions(const MultipartiteSpec& spec, int k);

/// Signed block-subset sums with polynomial binomial tops.
/// Throws std::invalid_argument unless 0 <= k <= d <= N.
ExactInt multipartite_beta(const MultipartiteSpec& spec, int d, int k, Part which);

/// beta^d_r(S/I) = C(N-d+r-1, r) - n_1...n_r, for d >= r.
ExactInt multipartite_beta_r_quotient(const MultipartiteSpec& spec, int d);

/// Hilbert depth restricted to the window given by the ideal/quotient
/// bounds, checking closed-form beta^d_k for r <= k <= d only. Empty window
/// or no qualifying d yields nullopt.
std::optional<int> multipartite_qdepth_characterized(const MultipartiteSpec& spec, Part which);

/// floor((N+r)/2) >= qdepth(I) >= sdepth(I) >= sum ceil(n_i/2).
BoundReport multipartite_ideal_bounds(const MultipartiteSpec& spec);

/// N - min n_i >= qdepth(S/I) >= sdepth(S/I) >= sum ceil(n_i/2) - min ceil(n_i/2).
BoundReport multipartite_quotient_bounds(const MultipartiteSpec& spec);

/// min{d >= r : C(N-d+r-1, r) < n_1...n_r} - 1.
int quotient_upper_bound_binomial(const MultipartiteSpec& spec);

/// N - ceil((r! n_1...n_r)^(1/r)).
int quotient_safe_range(const MultipartiteSpec& spec);

/// Largest integer d <= N (1 - (r!/r^r)^(1/r)); never exceeds quotient_safe_range.
int means_safe_range(const MultipartiteSpec& spec);

/// Smallest c >= 0 with c^r >= v.
ExactInt integer_root_ceil(const ExactInt& v, unsigned long r);

/// True iff no block or at most one block has even size.
bool at_most_one_even_block(const MultipartiteSpec& spec);

// -------------------------------------------------- path and cycle powers

/// Depth of S/I_{n,m}^t.
int depth_phi(int n, int m, int t);

/// min{n - ceil(t0/2), n - floor((n-t0+1)/(m+1)) + 1}, t0 = min{t, n-m}.
int path_power_sdepth_upper(int n, int m, int t);

/// m + floor(t/2).
int path_aux_upper(int m, int t);

/// Largest t0 <= n-1 with m t0 = a n + gcd(n,m) for some a >= 1.
std::optional<int> cycle_t0(int n, int m);

/// floor((n + gcd(n,m))/2).
int cycle_power_sdepth_upper(int n, int m);

BoundReport path_power_report(int n, int m, int t);
BoundReport cycle_power_report(int n, int m);

} // namespace sqfdepth
