#include <doctest.h>

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "sqfdepth/experiments.hpp"

using namespace sqfdepth;

namespace {

std::string render(const std::vector<ReportRow>& rows, OutputFormat fmt) {
  std::ostringstream out;
  write_rows(out, rows, fmt);
  return out.str();
}

const ReportRow* find_row(const AuditReport& rep, const std::string& spec, const std::string& name_prefix) {
  for (const auto& r : rep.rows)
    if (r.spec == spec && r.bound_name.rfind(name_prefix, 0) == 0) return &r;
  return nullptr;
}

} // namespace

TEST_CASE("helpers") {
  CHECK(join_counts({0, 0, 4, 4, 1}) == "0,0,4,4,1");
  CHECK(window_string(2, 3) == "[2,3]");
  CHECK(window_string(std::nullopt, 3) == "[-inf,3]");
  CHECK(std::string(to_string(RowStatus::violation)) == "violation");
}

TEST_CASE("nondecreasing_specs") {
  auto specs = nondecreasing_specs(3, 3);
  CHECK(specs.size() == 10);
  CHECK(specs.front().blocks() == std::vector<int>{1, 1, 1});
  CHECK(specs.back().blocks() == std::vector<int>{3, 3, 3});
  for (const auto& s : specs) CHECK(std::is_sorted(s.blocks().begin(), s.blocks().end()));
  CHECK(nondecreasing_specs(2, 4).size() == 10);
  CHECK(nondecreasing_specs(0, 4).empty());
}

TEST_CASE("parallel_map keeps index order") {
  std::function<int(std::size_t)> sq = [](std::size_t i) { return static_cast<int>(i * i); };
  auto serial = parallel_map<int>(100, 1, sq);
  auto threaded = parallel_map<int>(100, 8, sq);
  CHECK(serial == threaded);
  CHECK(threaded[99] == 99 * 99);
  CHECK(parallel_map<int>(0, 4, sq).empty());
}

TEST_CASE("compute_point") {
  auto p = compute_point("b22", QuotientPair::ideal(bipartite(2, 2)), true, SolverOptions{});
  CHECK(join_counts(p.alpha.counts) == "0,0,4,4,1");
  REQUIRE(p.hdepth);
  CHECK(*p.hdepth == 3);
  REQUIRE(p.beta_fail);
  CHECK(p.beta_fail->d == 4);
  CHECK(p.beta_fail->k == 3);
  CHECK(p.beta_fail->value == -4);
  REQUIRE(p.sdepth);
  CHECK(p.sdepth->solved());
  CHECK(p.sdepth->lower >= 2);
  CHECK(p.sdepth->lower <= 3);

  auto z = compute_point("zero", QuotientPair::ideal(SquarefreeIdeal::zero(3)), true, SolverOptions{});
  CHECK(z.alpha.is_zero());
  CHECK_FALSE(z.hdepth);
  CHECK_FALSE(z.sdepth);
}

TEST_CASE("bipartite audit has no violations and reports the (2,2) conjecture row") {
  AuditOptions opts;
  opts.sdepth_max_ground = 6;
  auto rep = audit_bipartite(5, opts);
  CHECK(rep.violations == 0);
  CHECK(rep.undecided == 0);
  for (const auto& r : rep.rows) CHECK_FALSE(r.citation.empty());
  const ReportRow* conj = find_row(rep, "bipartite(2,2)/ideal", "conjecture");
  REQUIRE(conj);
  CHECK(conj->status == RowStatus::match);
  CHECK(conj->bound_value == "3");
  REQUIRE(conj->hdepth);
  CHECK(*conj->hdepth == 3);
}

TEST_CASE("multipartite audit r=3, blocks <= 3: only the quotient sdepth lower bound fails") {
  AuditOptions opts;
  opts.sdepth_max_ground = 6;
  auto rep = audit_multipartite(3, 3, opts);
  CHECK(rep.undecided == 0);
  int flagged = 0;
  for (const auto& r : rep.rows) {
    if (r.status != RowStatus::violation) continue;
    ++flagged;
    CHECK(r.bound_name == "sdepth(S/I) window");
    REQUIRE(r.sdepth_lo);
    CHECK(r.sdepth_lo == r.sdepth_hi);
  }
  CHECK(flagged == rep.violations);
  // {1,2} is a maximal element of the region, so sdepth(S/I) <= 2 < 3.
  const ReportRow* row = find_row(rep, "multipartite(1,1,3)/quotient", "sdepth(S/I) window");
  REQUIRE(row);
  CHECK(row->status == RowStatus::violation);
  CHECK(*row->sdepth_lo == 2);
  CHECK(row->bound_value == "[3,4]");
}

TEST_CASE("path-aux and cycle-aux audits have no violations") {
  AuditOptions opts;
  CHECK(audit_path_aux(9, opts).violations == 0);
  CHECK(audit_cycle_aux(9, opts).violations == 0);
}

TEST_CASE("scan: r=2 all match, (1,1,1) match, (2,2,2) recorded") {
  AuditOptions opts;
  opts.sdepth_max_ground = 0;
  for (const auto& rec : scan_conjecture(2, 5, opts)) {
    CHECK(rec.guaranteed);
    CHECK(rec.status == ConjectureStatus::match);
  }
  auto r3 = scan_conjecture(3, 2, opts);
  REQUIRE(r3.size() == 4);
  CHECK(r3.front().blocks == std::vector<int>{1, 1, 1});
  CHECK(r3.front().qdepth_ideal == 3);
  CHECK(r3.front().status == ConjectureStatus::match);
  CHECK(scan_row(r3.front()).status == RowStatus::match);
  const ScanRecord& even = r3.back();
  CHECK(even.blocks == std::vector<int>{2, 2, 2});
  CHECK(even.conjectured == 4);
  CHECK_FALSE(even.guaranteed);
  const ReportRow row = scan_row(even);
  CHECK(row.bound_name.find("[open]") != std::string::npos);
  CHECK(row.status != RowStatus::violation);
}

TEST_CASE("output formats are deterministic and carry stable columns") {
  AuditOptions serial;
  serial.jobs = 1;
  serial.sdepth_max_ground = 5;
  AuditOptions threaded = serial;
  threaded.jobs = 4;
  auto a = audit_bipartite(4, serial);
  auto b = audit_bipartite(4, threaded);
  for (auto fmt : {OutputFormat::table, OutputFormat::csv, OutputFormat::json})
    CHECK(render(a.rows, fmt) == render(b.rows, fmt));

  const std::string csv = render(a.rows, OutputFormat::csv);
  CHECK(csv.rfind("spec,alpha,beta_fail,hdepth,sdepth_lo,sdepth_hi,bound_name,bound_value,citation,status\n", 0) ==
        0);
  auto json = nlohmann::json::parse(render(a.rows, OutputFormat::json));
  REQUIRE(json.is_array());
  CHECK(json.size() == a.rows.size());
  CHECK(json[0].contains("citation"));
  CHECK(json[0]["status"].is_string());
}
