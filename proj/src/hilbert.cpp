#include "sqfdepth/hilbert.hpp"

#include <string>

namespace sqfdepth {

namespace {

void check_row_index(const AlphaVector& alpha, int d) {
  if (d < 0 || d > alpha.ground_size || static_cast<int>(alpha.counts.size()) != alpha.ground_size + 1)
    throw std::invalid_argument("beta row index " + std::to_string(d) + " outside [0, " +
                                std::to_string(alpha.ground_size) + "]");
}

} // namespace

BetaRow beta_row(const AlphaVector& alpha, int d) {
  check_row_index(alpha, d);
  BetaRow row(d + 1);
  for (int k = 0; k <= d; ++k) {
    ExactInt sum = 0;
    for (int j = 0; j <= k; ++j) {
      ExactInt term = binom_nat(d - j, k - j) * alpha.counts[j];
      if ((k - j) % 2 == 0)
        sum += term;
      else
        sum -= term;
    }
    row[k] = sum;
  }
  return row;
}

BetaRow beta_row_recurrence(const AlphaVector& alpha, int d) {
  check_row_index(alpha, d);
  BetaRow row(d + 1);
  for (int k = 0; k <= d; ++k) {
    ExactInt v = alpha.counts[k];
    for (int j = 0; j < k; ++j) v -= binom_nat(d - j, k - j) * row[j];
    row[k] = v;
  }
  return row;
}

std::vector<ExactInt> alpha_from_beta(std::span<const ExactInt> row, int d) {
  if (d < 0 || static_cast<int>(row.size()) != d + 1)
    throw std::invalid_argument("alpha_from_beta: row length must be d+1");
  std::vector<ExactInt> alpha(d + 1);
  for (int k = 0; k <= d; ++k) {
    ExactInt sum = 0;
    for (int j = 0; j <= k; ++j) sum += binom_nat(d - j, k - j) * row[j];
    alpha[k] = sum;
  }
  return alpha;
}

BetaTable BetaTable::of(const AlphaVector& alpha) {
  BetaTable t{alpha.ground_size, {}};
  for (int d = 0; d <= alpha.ground_size; ++d) t.rows.push_back(beta_row_recurrence(alpha, d));
  return t;
}

std::optional<BetaEntry> first_negative(const AlphaVector& alpha, int d) {
  BetaRow row = beta_row_recurrence(alpha, d);
  for (int k = 0; k <= d; ++k)
    if (row[k] < 0) return BetaEntry{d, k, row[k]};
  return std::nullopt;
}

int hdepth(const AlphaVector& alpha) {
  if (alpha.is_zero()) throw ZeroModuleError();
  for (int d = alpha.ground_size; d > 0; --d)
    if (!first_negative(alpha, d)) return d;
  return 0;
}

int qdepth_of_pair(const QuotientPair& pair, int cap) { return hdepth(alpha_vector(pair, cap)); }

} // namespace sqfdepth
