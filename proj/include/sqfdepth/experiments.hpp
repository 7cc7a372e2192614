#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sqfdepth/closed_forms.hpp"
#include "sqfdepth/hilbert.hpp"
#include "sqfdepth/stanley.hpp"

namespace sqfdepth {

// Row statuses. "violation" is a failed claim; "finding" records an observed
// value with nothing asserted; "match"/"deviation" label conjecture rows.
enum class RowStatus { pass, violation, finding, match, deviation, undecided };

const char* to_string(RowStatus s);

/// Computed data for one module, shared by every row emitted for it.
struct PointData {
  std::string label;
  AlphaVector alpha;
  std::optional<int> hdepth;           // absent for a zero module
  std::optional<BetaEntry> beta_fail;  // first negative entry of row hdepth+1
  std::optional<SdepthResult> sdepth;  // present when the solver was run
};

PointData compute_point(const std::string& label, const QuotientPair& pair, bool with_sdepth,
                        const SolverOptions& solver, int enum_cap = default_enum_cap());

/// One line of an audit or scan table.
struct ReportRow {
  std::string spec;
  std::string alpha;
  std::string beta_fail;
  std::optional<int> hdepth;
  std::optional<int> sdepth_lo;
  std::optional<int> sdepth_hi;
  std::string bound_name;
  std::string bound_value;
  std::string citation;
  RowStatus status = RowStatus::pass;
};

struct AuditOptions {
  int sdepth_max_ground = 8;  // run the Stanley solver when N <= this
  SolverOptions solver;
  int enum_cap = default_enum_cap();
  unsigned jobs = 0;  // 0 = hardware concurrency
};

struct AuditReport {
  std::vector<ReportRow> rows;
  int violations = 0;
  int undecided = 0;
  int findings = 0;

  void append(const AuditReport& other);
};

/// All 1 <= m <= n <= max_n.
AuditReport audit_bipartite(int max_n, const AuditOptions& opts);
/// All nondecreasing block tuples of length r with entries in [1, max_block].
AuditReport audit_multipartite(int r, int max_block, const AuditOptions& opts);
/// An explicit list of block tuples, audited in the given order.
AuditReport audit_multipartite_specs(const std::vector<MultipartiteSpec>& specs, const AuditOptions& opts);
/// All m, t >= 1 with t + m <= max_ground.
AuditReport audit_path_aux(int max_ground, const AuditOptions& opts);
/// All n > m >= 2 with n <= max_n.
AuditReport audit_cycle_aux(int max_n, const AuditOptions& opts);

std::vector<MultipartiteSpec> nondecreasing_specs(int r, int max_block);

enum class ConjectureStatus { match, deviation };

/// One point of the multipartite conjecture scan.
struct ScanRecord {
  std::vector<int> blocks;
  int total = 0;
  int qdepth_ideal = 0;
  int conjectured = 0;
  bool guaranteed = false;  // r = 2 or at most one even block
  ConjectureStatus status = ConjectureStatus::match;
  int qdepth_quotient = 0;
  int heuristic_estimate = 0;  // N - ceil((r! prod n_i)^(1/r))
  std::optional<SdepthResult> sdepth_ideal;
  std::vector<BoundReport> bounds;
  double millis = 0;

  int heuristic_deviation() const { return qdepth_quotient - heuristic_estimate; }
};

std::vector<ScanRecord> scan_conjecture(int r, int max_block, const AuditOptions& opts);

ReportRow scan_row(const ScanRecord& rec);

enum class OutputFormat { table, csv, json };

void write_rows(std::ostream& out, const std::vector<ReportRow>& rows, OutputFormat fmt);

std::string join_counts(const std::vector<ExactInt>& v);
std::string window_string(std::optional<long> lo, std::optional<long> hi);

/// Evaluates task(i) for i in [0, count) on up to `jobs` threads; results
/// come back in index order.
template <typename T>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, const std::function<T(std::size_t)>& task);

} // namespace sqfdepth

#include "sqfdepth/parallel_map.ipp"
