#include "sqfdepth/experiments.hpp"

#include <chrono>
#include <iomanip>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace sqfdepth {

const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::pass: return "pass";
    case RowStatus::violation: return "violation";
    case RowStatus::finding: return "finding";
    case RowStatus::match: return "match";
    case RowStatus::deviation: return "deviation";
    case RowStatus::undecided: return "undecided";
  }
  return "?";
}

std::string join_counts(const std::vector<ExactInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s;
}

std::string window_string(std::optional<long> lo, std::optional<long> hi) {
  return "[" + (lo ? std::to_string(*lo) : std::string("-inf")) + "," +
         (hi ? std::to_string(*hi) : std::string("inf")) + "]";
}

void AuditReport::append(const AuditReport& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  violations += other.violations;
  undecided += other.undecided;
  findings += other.findings;
}

PointData compute_point(const std::string& label, const QuotientPair& pair, bool with_sdepth,
                        const SolverOptions& solver, int enum_cap) {
  PointData p{label, alpha_vector(pair, enum_cap), std::nullopt, std::nullopt, std::nullopt};
  if (p.alpha.is_zero()) return p;
  p.hdepth = hdepth(p.alpha);
  if (*p.hdepth < p.alpha.ground_size) p.beta_fail = first_negative(p.alpha, *p.hdepth + 1);
  if (with_sdepth) p.sdepth = sdepth_exact(pair, solver);
  return p;
}

namespace {

std::string beta_fail_string(const std::optional<BetaEntry>& e) {
  if (!e) return "";
  return "beta^" + std::to_string(e->d) + "_" + std::to_string(e->k) + "=" + e->value.get_str();
}

class RowSink {
 public:
  explicit RowSink(AuditReport& rep) : rep_(rep) {}

  void add(const PointData& p, const std::string& name, const std::string& value, const std::string& citation,
           RowStatus status) {
    ReportRow row;
    row.spec = p.label;
    row.alpha = join_counts(p.alpha.counts);
    row.beta_fail = beta_fail_string(p.beta_fail);
    row.hdepth = p.hdepth;
    if (p.sdepth) {
      row.sdepth_lo = p.sdepth->lower;
      row.sdepth_hi = p.sdepth->upper;
    }
    row.bound_name = name;
    row.bound_value = value;
    row.citation = citation;
    row.status = status;
    if (status == RowStatus::violation) ++rep_.violations;
    if (status == RowStatus::undecided) ++rep_.undecided;
    if (status == RowStatus::finding || status == RowStatus::deviation) ++rep_.findings;
    rep_.rows.push_back(std::move(row));
  }

  void check(const PointData& p, const std::string& name, const std::string& value, const std::string& citation,
             bool ok) {
    add(p, name, value, citation, ok ? RowStatus::pass : RowStatus::violation);
  }

 private:
  AuditReport& rep_;
};

// Compares closed-form alpha and every beta row against the enumeration.
template <typename AlphaFn, typename BetaFn>
bool closed_forms_agree(const PointData& p, AlphaFn alpha_fn, BetaFn beta_fn) {
  const int n = p.alpha.ground_size;
  for (int k = 0; k <= n; ++k)
    if (alpha_fn(k) != p.alpha.counts[k]) return false;
  for (int d = 0; d <= n; ++d) {
    BetaRow row = beta_row(p.alpha, d);
    for (int k = 0; k <= d; ++k)
      if (beta_fn(d, k) != row[k]) return false;
  }
  return true;
}

// Rows for a solved (or windowed) Stanley depth against a claimed window.
void sdepth_rows(RowSink& sink, const PointData& p, const BoundReport& window) {
  if (!p.sdepth) return;
  const SdepthResult& s = *p.sdepth;
  const std::string value = window_string(window.lower, window.upper);
  if (!s.solved()) {
    sink.add(p, window.quantity + " window", value, window.citation, RowStatus::undecided);
    return;
  }
  bool ok = window.admits(s.lower) && (!window.exact || *window.exact == s.lower);
  sink.check(p, window.quantity + " window", window.exact ? std::to_string(*window.exact) : value, window.citation,
             ok);
  sink.check(p, "sdepth <= hdepth", std::to_string(*p.hdepth), "sdepth-below-hdepth", s.lower <= *p.hdepth);
}

std::string bip_label(int n, int m, Part part) {
  return "bipartite(" + std::to_string(n) + "," + std::to_string(m) + ")/" + to_string(part);
}

AuditReport audit_bipartite_point(int n, int m, const AuditOptions& opts) {
  AuditReport rep;
  RowSink sink(rep);
  const BipartiteParams bp(n, m);
  const SquarefreeIdeal ideal = bipartite(n, m);
  const bool solve = n + m <= opts.sdepth_max_ground;
  const PointData pi = compute_point(bip_label(n, m, Part::ideal), QuotientPair::ideal(ideal), solve, opts.solver,
                                     opts.enum_cap);
  const PointData pq = compute_point(bip_label(n, m, Part::quotient), QuotientPair::quotient(ideal), solve,
                                     opts.solver, opts.enum_cap);

  for (Part part : {Part::ideal, Part::quotient}) {
    const PointData& p = part == Part::ideal ? pi : pq;
    bool ok = closed_forms_agree(
        p, [&](int k) { return bipartite_alpha(bp, k, part); },
        [&](int d, int k) { return bipartite_beta(bp, d, k, part); });
    sink.check(p, "closed alpha/beta", "all k <= d <= N", "bipartite-closed-forms", ok);
  }
  {
    bool ok = true;
    for (int k = 0; k <= n + m; ++k)
      if (k >= 2 && bipartite_alpha_convolution(bp, k) != pi.alpha.counts[k]) ok = false;
    for (int d = 3; d <= n + m; ++d)
      if (bipartite_beta3_cubic(bp, d) != beta_row(pi.alpha, d)[3]) ok = false;
    sink.check(pi, "convolution alpha and cubic beta_3", "all k, d >= 3", "bipartite-ideal-cubic", ok);
  }

  const int hd_formula = bipartite_hdepth_ideal(bp);
  sink.check(pi, "hdepth(I)", std::to_string(hd_formula), "bipartite-ideal-hdepth", *pi.hdepth == hd_formula);
  sink.add(pi, "conjecture qdepth(I)=floor((N+r)/2)", std::to_string(hd_formula), "multipartite-conjecture",
           *pi.hdepth == hd_formula ? RowStatus::match : RowStatus::violation);

  const int q = *pq.hdepth;
  const int sqrt_bound = bipartite_qdepth_quotient_upper(bp);
  sink.check(pq, "qdepth(S/I) <= sqrt bound", std::to_string(sqrt_bound), "bipartite-quotient-sqrt-upper",
             q <= sqrt_bound);
  if (m >= 2) {
    const int charz = bipartite_qdepth_quotient(bp);
    sink.check(pq, "qdepth(S/I) characterization", std::to_string(charz), "bipartite-quotient-characterization",
               q == charz);
  }
  {
    bool ok = (q < m) == (n <= 2 * m - 2);
    if (n >= 2 * m - 1) ok = ok && m <= q && q <= n - m + 1;
    sink.check(pq, "qdepth(S/I) regime", n >= 2 * m - 1 ? window_string(m, n - m + 1) : "< m",
               "bipartite-quotient-regime", ok);
  }
  if (n % 2 == 0 && m % 2 == 0) {
    const long t = n / 2;
    const long s = m / 2;
    const int d = static_cast<int>(t + s + 1);
    BetaRow row = beta_row(pi.alpha, d);
    ExactInt quartic = ExactInt(t) * s * (2 * s * s + 2 * t * t - 1) / 3;
    bool ok = row[0] == 0 && row[1] == 0 && row[2] == 4 * s * t && (d < 3 || row[3] == 0);
    if (d >= 4) ok = ok && row[4] == quartic;
    if (d >= 5) ok = ok && row[5] == quartic;
    sink.check(pi, "beta row at d=n/2+m/2+1", "0,0,4st,0,q,q", "bipartite-even-row", ok);
  }

  auto windows = bipartite_sdepth_bounds(bp);
  sdepth_rows(sink, pi, windows.ideal);
  sdepth_rows(sink, pq, windows.quotient);
  if (pi.sdepth && pi.sdepth->solved() && !windows.ideal.exact)
    sink.add(pi, "sdepth(I) both-even case", std::to_string(pi.sdepth->lower), "bipartite-ideal-sdepth-window",
             RowStatus::finding);
  return rep;
}

std::string multi_label(const MultipartiteSpec& spec, Part part) {
  return "multipartite(" + spec.to_string() + ")/" + to_string(part);
}

AuditReport audit_multipartite_point(const MultipartiteSpec& spec, const AuditOptions& opts) {
  AuditReport rep;
  RowSink sink(rep);
  const int r = spec.parts();
  const int total = spec.total();
  const SquarefreeIdeal ideal = multipartite(spec);
  const bool solve = total <= opts.sdepth_max_ground;
  const PointData pi = compute_point(multi_label(spec, Part::ideal), QuotientPair::ideal(ideal), solve,
                                     opts.solver, opts.enum_cap);
  const PointData pq = compute_point(multi_label(spec, Part::quotient), QuotientPair::quotient(ideal), solve,
                                     opts.solver, opts.enum_cap);

  for (Part part : {Part::ideal, Part::quotient}) {
    const PointData& p = part == Part::ideal ? pi : pq;
    bool ok = closed_forms_agree(
        p, [&](int k) { return multipartite_alpha(spec, k, part); },
        [&](int d, int k) { return multipartite_beta(spec, d, k, part); });
    sink.check(p, "closed alpha/beta", "all k <= d <= N", "multipartite-closed-forms", ok);
  }
  {
    ExactInt prod = 1;
    for (int b : spec.blocks()) prod *= b;
    int min_b = *std::min_element(spec.blocks().begin(), spec.blocks().end());
    bool ok = true;
    for (int k = 0; k <= total; ++k) {
      if (multipartite_alpha_compositions(spec, k) != pi.alpha.counts[k]) ok = false;
      if (k < r && pi.alpha.counts[k] != 0) ok = false;
      if (k >= total - min_b + 1 && pi.alpha.counts[k] != binom_nat(total, k)) ok = false;
    }
    if (pi.alpha.counts[r] != prod) ok = false;
    if (r + 1 <= total && 2 * pi.alpha.counts[r + 1] != prod * (total - r)) ok = false;
    sink.check(pi, "composition alpha and special ranks", "alpha_r = prod n_i", "multipartite-ideal-alpha", ok);
    bool ok_r = true;
    for (int d = r; d <= total; ++d)
      if (multipartite_beta_r_quotient(spec, d) != beta_row(pq.alpha, d)[r]) ok_r = false;
    sink.check(pq, "beta^d_r(S/I) two-term form", "all d >= r", "multipartite-quotient-beta-r", ok_r);
  }

  const BoundReport ib = multipartite_ideal_bounds(spec);
  const BoundReport qb = multipartite_quotient_bounds(spec);
  const int qi = *pi.hdepth;
  const int qq = *pq.hdepth;
  sink.check(pi, "qdepth(I) window", window_string(ib.lower, ib.upper), ib.citation,
             ib.admits(qi) && (!ib.exact || *ib.exact == qi));
  sink.check(pq, "qdepth(S/I) window", window_string(qb.lower, qb.upper), qb.citation,
             qb.admits(qq) && qq >= r - 1);
  for (Part part : {Part::ideal, Part::quotient}) {
    const PointData& p = part == Part::ideal ? pi : pq;
    auto charz = multipartite_qdepth_characterized(spec, part);
    if (charz)
      sink.check(p, "restricted characterization", std::to_string(*charz), "multipartite-characterization",
                 *charz == *p.hdepth);
  }
  const int bin_upper = quotient_upper_bound_binomial(spec);
  sink.check(pq, "binomial upper bound", std::to_string(bin_upper), "multipartite-quotient-binomial-upper",
             qq <= bin_upper);
  const int safe = quotient_safe_range(spec);
  {
    bool ok = true;
    for (int d = r; d <= safe; ++d)
      if (beta_row(pq.alpha, d)[r] < 0) ok = false;
    sink.check(pq, "beta^d_r(S/I) >= 0 for d <= d*", std::to_string(safe), "multipartite-quotient-safe-range", ok);
    sink.check(pq, "means-inequality range <= d*", std::to_string(means_safe_range(spec)),
               "multipartite-quotient-means-range", means_safe_range(spec) <= safe);
  }
  sink.add(pq, "heuristic qdepth(S/I) ~ d*", std::to_string(safe) + " (deviation " + std::to_string(qq - safe) + ")",
           "multipartite-quotient-heuristic", RowStatus::finding);

  const int conj = (total + r) / 2;
  const bool guaranteed = r <= 2 || at_most_one_even_block(spec);
  RowStatus cs = qi == conj ? RowStatus::match : (guaranteed ? RowStatus::violation : RowStatus::deviation);
  sink.add(pi, std::string("conjecture qdepth(I)=floor((N+r)/2)") + (guaranteed ? "" : " [open]"),
           std::to_string(conj), "multipartite-conjecture", cs);

  BoundReport is = ib;
  is.quantity = "sdepth(I)";
  is.exact.reset();
  if (*is.lower == *is.upper) is.exact = is.lower;
  sdepth_rows(sink, pi, is);
  BoundReport qs = qb;
  qs.quantity = "sdepth(S/I)";
  qs.exact.reset();
  if (*qs.lower == *qs.upper) qs.exact = qs.lower;
  sdepth_rows(sink, pq, qs);
  return rep;
}

AuditReport merge(std::vector<AuditReport> parts) {
  AuditReport out;
  for (const auto& p : parts) out.append(p);
  return out;
}

} // namespace

AuditReport audit_bipartite(int max_n, const AuditOptions& opts) {
  std::vector<std::pair<int, int>> grid;
  for (int n = 1; n <= max_n; ++n)
    for (int m = 1; m <= n; ++m) grid.emplace_back(n, m);
  return merge(parallel_map<AuditReport>(grid.size(), opts.jobs, [&](std::size_t i) {
    return audit_bipartite_point(grid[i].first, grid[i].second, opts);
  }));
}

std::vector<MultipartiteSpec> nondecreasing_specs(int r, int max_block) {
  std::vector<MultipartiteSpec> out;
  std::vector<int> cur(r, 1);
  if (r < 1 || max_block < 1) return out;
  while (true) {
    out.emplace_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[i] == max_block) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < r; ++j) cur[j] = cur[i];
  }
  return out;
}

AuditReport audit_multipartite(int r, int max_block, const AuditOptions& opts) {
  return audit_multipartite_specs(nondecreasing_specs(r, max_block), opts);
}

AuditReport audit_multipartite_specs(const std::vector<MultipartiteSpec>& specs, const AuditOptions& opts) {
  return merge(parallel_map<AuditReport>(specs.size(), opts.jobs,
                                         [&](std::size_t i) { return audit_multipartite_point(specs[i], opts); }));
}

AuditReport audit_path_aux(int max_ground, const AuditOptions& opts) {
  std::vector<std::pair<int, int>> grid;
  for (int m = 1; m < max_ground; ++m)
    for (int t = 1; t + m <= max_ground; ++t) grid.emplace_back(m, t);
  return merge(parallel_map<AuditReport>(grid.size(), opts.jobs, [&](std::size_t i) {
    AuditReport rep;
    RowSink sink(rep);
    const auto [m, t] = grid[i];
    const SquarefreeIdeal u = path_aux(m, t);
    const PointData p = compute_point("path-aux(" + std::to_string(m) + "," + std::to_string(t) + ")/ideal",
                                      QuotientPair::ideal(u), false, opts.solver, opts.enum_cap);
    sink.check(p, "intersection form = residue form", "-", "path-aux-construction",
               u == path_aux_residue_form(m, t));
    const int upper = path_aux_upper(m, t);
    sink.check(p, "qdepth(U_{m,t}) upper", std::to_string(upper), "path-aux-upper", *p.hdepth <= upper);
    return rep;
  }));
}

AuditReport audit_cycle_aux(int max_n, const AuditOptions& opts) {
  std::vector<std::pair<int, int>> grid;
  for (int n = 3; n <= max_n; ++n)
    for (int m = 2; m < n; ++m) grid.emplace_back(n, m);
  return merge(parallel_map<AuditReport>(grid.size(), opts.jobs, [&](std::size_t i) {
    AuditReport rep;
    RowSink sink(rep);
    const auto [n, m] = grid[i];
    const int d = std::gcd(n, m);
    const PointData p = compute_point("cycle-aux(" + std::to_string(n) + "," + std::to_string(d) + ")/ideal",
                                      QuotientPair::ideal(cycle_aux(n, d)), false, opts.solver, opts.enum_cap);
    const int upper = cycle_power_sdepth_upper(n, m);
    sink.check(p, "qdepth(U'_{n,d}) upper, m=" + std::to_string(m), std::to_string(upper), "cycle-aux-upper",
               *p.hdepth <= upper);
    auto t0 = cycle_t0(n, m);
    sink.add(p, "t0(n,m), m=" + std::to_string(m), t0 ? std::to_string(*t0) : "none", "cycle-power-t0",
             RowStatus::finding);
    return rep;
  }));
}

std::vector<ScanRecord> scan_conjecture(int r, int max_block, const AuditOptions& opts) {
  auto specs = nondecreasing_specs(r, max_block);
  return parallel_map<ScanRecord>(specs.size(), opts.jobs, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    const MultipartiteSpec& spec = specs[i];
    ScanRecord rec;
    rec.blocks = spec.blocks();
    rec.total = spec.total();
    const SquarefreeIdeal ideal = multipartite(spec);
    rec.qdepth_ideal = qdepth_of_pair(QuotientPair::ideal(ideal), opts.enum_cap);
    rec.conjectured = (spec.total() + spec.parts()) / 2;
    rec.guaranteed = spec.parts() <= 2 || at_most_one_even_block(spec);
    rec.status = rec.qdepth_ideal == rec.conjectured ? ConjectureStatus::match : ConjectureStatus::deviation;
    rec.qdepth_quotient = qdepth_of_pair(QuotientPair::quotient(ideal), opts.enum_cap);
    rec.heuristic_estimate = quotient_safe_range(spec);
    if (spec.total() <= opts.sdepth_max_ground) rec.sdepth_ideal = sdepth_exact(QuotientPair::ideal(ideal), opts.solver);
    rec.bounds = {multipartite_ideal_bounds(spec), multipartite_quotient_bounds(spec)};
    rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
  });
}

ReportRow scan_row(const ScanRecord& rec) {
  ReportRow row;
  row.spec = "multipartite(" + MultipartiteSpec(rec.blocks).to_string() + ")/ideal";
  row.hdepth = rec.qdepth_ideal;
  if (rec.sdepth_ideal) {
    row.sdepth_lo = rec.sdepth_ideal->lower;
    row.sdepth_hi = rec.sdepth_ideal->upper;
  }
  row.bound_name = std::string("conjecture qdepth(I)=floor((N+r)/2)") + (rec.guaranteed ? "" : " [open]");
  row.bound_value = std::to_string(rec.conjectured);
  row.citation = "multipartite-conjecture";
  if (rec.status == ConjectureStatus::match)
    row.status = RowStatus::match;
  else
    row.status = rec.guaranteed ? RowStatus::violation : RowStatus::deviation;
  row.beta_fail = "qdepth(S/I)=" + std::to_string(rec.qdepth_quotient) + " heuristic=" +
                  std::to_string(rec.heuristic_estimate) + " deviation=" + std::to_string(rec.heuristic_deviation());
  return row;
}

namespace {

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

} // namespace

void write_rows(std::ostream& out, const std::vector<ReportRow>& rows, OutputFormat fmt) {
  static const char* cols[] = {"spec",     "alpha",       "beta_fail", "hdepth",   "sdepth_lo",
                               "sdepth_hi", "bound_name", "bound_value", "citation", "status"};
  auto fields = [](const ReportRow& r) {
    return std::vector<std::string>{r.spec,         r.alpha,        r.beta_fail,      opt_str(r.hdepth),
                                    opt_str(r.sdepth_lo), opt_str(r.sdepth_hi), r.bound_name, r.bound_value,
                                    r.citation,     to_string(r.status)};
  };
  if (fmt == OutputFormat::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json o;
      o["spec"] = r.spec;
      o["alpha"] = r.alpha;
      o["beta_fail"] = r.beta_fail;
      o["hdepth"] = r.hdepth ? nlohmann::ordered_json(*r.hdepth) : nlohmann::ordered_json(nullptr);
      o["sdepth_lo"] = r.sdepth_lo ? nlohmann::ordered_json(*r.sdepth_lo) : nlohmann::ordered_json(nullptr);
      o["sdepth_hi"] = r.sdepth_hi ? nlohmann::ordered_json(*r.sdepth_hi) : nlohmann::ordered_json(nullptr);
      o["bound_name"] = r.bound_name;
      o["bound_value"] = r.bound_value;
      o["citation"] = r.citation;
      o["status"] = to_string(r.status);
      arr.push_back(std::move(o));
    }
    out << arr.dump(2) << '\n';
    return;
  }
  if (fmt == OutputFormat::csv) {
    for (std::size_t i = 0; i < std::size(cols); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
    for (const auto& r : rows) {
      auto f = fields(r);
      for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << csv_escape(f[i]);
      out << '\n';
    }
    return;
  }
  // Human table: aligned columns, alpha omitted for width.
  std::vector<std::size_t> show = {0, 3, 4, 5, 6, 7, 9};
  std::vector<std::size_t> width(std::size(cols), 0);
  for (std::size_t c : show) width[c] = std::string(cols[c]).size();
  std::vector<std::vector<std::string>> all;
  for (const auto& r : rows) {
    all.push_back(fields(r));
    for (std::size_t c : show) width[c] = std::max(width[c], all.back()[c].size());
  }
  auto line = [&](const std::vector<std::string>& f) {
    for (std::size_t i = 0; i < show.size(); ++i) {
      out << std::left << std::setw(static_cast<int>(width[show[i]])) << f[show[i]];
      out << (i + 1 < show.size() ? "  " : "\n");
    }
  };
  line(std::vector<std::string>(std::begin(cols), std::end(cols)));
  for (const auto& f : all) line(f);
}

} // namespace sqfdepth
