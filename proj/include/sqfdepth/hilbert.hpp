#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "sqfdepth/ideal.hpp"

namespace sqfdepth {

/// Raised when a Hilbert depth is requested for a module with empty region.
class ZeroModuleError : public std::domain_error {
 public:
  ZeroModuleError() : std::domain_error("zero module: the region P is empty, Hilbert depth undefined") {}
};

/// beta^d_0, ..., beta^d_d.
using BetaRow = std::vector<ExactInt>;

/// beta^d_k = sum_{j<=k} (-1)^{k-j} C(d-j, k-j) alpha_j.
BetaRow beta_row(const AlphaVector& alpha, int d);

/// Same row via beta^d_k = alpha_k - sum_{j<k} C(d-j, k-j) beta^d_j.
BetaRow beta_row_recurrence(const AlphaVector& alpha, int d);

/// Inverse transform: alpha_k = sum_{j<=k} C(d-j, k-j) beta^d_j for k <= d.
std::vector<ExactInt> alpha_from_beta(std::span<const ExactInt> row, int d);

/// Rows d = 0..n.
struct BetaTable {
  int ground_size = 0;
  std::vector<BetaRow> rows;

  static BetaTable of(const AlphaVector& alpha);
};

struct BetaEntry {
  int d = 0;
  int k = 0;
  ExactInt value;
};

/// First negative entry of row d, scanning k upward.
std::optional<BetaEntry> first_negative(const AlphaVector& alpha, int d);

/// max{d <= n : beta^d_k >= 0 for all k <= d}. Throws ZeroModuleError when
/// alpha vanishes.
int hdepth(const AlphaVector& alpha);

/// hdepth(alpha_vector(pair)).
int qdepth_of_pair(const QuotientPair& pair, int cap = default_enum_cap());

} // namespace sqfdepth
