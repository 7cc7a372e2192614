// Command-line front end: rank counts, beta tables, Hilbert and Stanley
// depth for named families or ideal files, bound evaluation, grid audits and
// the multipartite conjecture scan.
//
// Exit codes: 0 success, 1 usage or input error, 2 undecided, 3 violated claim.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqfdepth/closed_forms.hpp"
#include "sqfdepth/experiments.hpp"
#include "sqfdepth/hilbert.hpp"
#include "sqfdepth/ideal_io.hpp"
#include "sqfdepth/stanley.hpp"

using namespace sqfdepth;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitViolation = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_ints(const std::vector<std::string>& tokens) {
  std::vector<int> out;
  for (const auto& tok : tokens) {
    std::stringstream ss(tok);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty()) continue;
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(part, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != part.size()) throw UsageError("not an integer: '" + part + "'");
      out.push_back(v);
    }
  }
  return out;
}

// What the user asked to work on: a family by name, or an ideal file.
struct Input {
  std::vector<std::string> family;  // name followed by parameters
  std::string file;
  bool quotient = false;
  int enum_cap = default_enum_cap();

  std::string name() const { return family.empty() ? "" : family.front(); }

  std::vector<int> params() const {
    return parse_ints(std::vector<std::string>(family.begin() + (family.empty() ? 0 : 1), family.end()));
  }

  Part part() const { return quotient ? Part::quotient : Part::ideal; }
};

void need(const std::vector<int>& p, std::size_t count, const std::string& usage) {
  if (p.size() != count) throw UsageError("family expects parameters: " + usage);
}

SquarefreeIdeal build_ideal(const Input& in) {
  if (!in.file.empty() && !in.family.empty()) throw UsageError("give either --family or --file, not both");
  if (!in.file.empty()) return read_ideal_file(in.file);
  if (in.family.empty()) throw UsageError("an input is required: --family NAME PARAMS... or --file PATH");
  const std::string& name = in.name();
  const auto p = in.params();
  try {
    if (name == "bipartite") {
      need(p, 2, "bipartite N M");
      return bipartite(p[0], p[1]);
    }
    if (name == "multipartite") {
      if (p.empty()) throw UsageError("family expects parameters: multipartite N1,N2,...");
      return multipartite(MultipartiteSpec(p));
    }
    if (name == "path-aux") {
      need(p, 2, "path-aux M T");
      return path_aux(p[0], p[1]);
    }
    if (name == "cycle-aux") {
      need(p, 2, "cycle-aux N D");
      return cycle_aux(p[0], p[1]);
    }
    if (name == "maximal") {
      need(p, 1, "maximal N");
      return maximal_ideal(p[0]);
    }
    if (name == "zero") {
      need(p, 1, "zero N");
      return SquarefreeIdeal::zero(p[0]);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (name == "path-power" || name == "cycle-power")
    throw UsageError("family '" + name + "' only supports the bounds command");
  throw UsageError("unknown family '" + name +
                   "' (bipartite, multipartite, path-aux, cycle-aux, maximal, zero, path-power, cycle-power)");
}

QuotientPair build_pair(const Input& in) {
  SquarefreeIdeal ideal = build_ideal(in);
  return in.quotient ? QuotientPair::quotient(ideal) : QuotientPair::ideal(ideal);
}

std::string describe(const Input& in) {
  if (!in.file.empty()) return in.file + "/" + to_string(in.part());
  std::string s = in.name() + "(";
  auto p = in.params();
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")/" + to_string(in.part());
}

// Closed-form alpha_k for families that have one.
std::optional<ExactInt> closed_alpha(const Input& in, int k) {
  if (!in.file.empty()) return std::nullopt;
  const auto p = in.params();
  if (in.name() == "bipartite")
    return bipartite_alpha(BipartiteParams(std::max(p[0], p[1]), std::min(p[0], p[1])), k, in.part());
  if (in.name() == "multipartite") return multipartite_alpha(MultipartiteSpec(p), k, in.part());
  if (in.name() == "maximal") return multipartite_alpha(MultipartiteSpec(p), k, in.part());
  return std::nullopt;
}

// Family lower bound on sdepth, used when the solver cannot decide. The
// multipartite quotient bound is left out: the audit finds counterexamples.
std::optional<long> family_sdepth_lower(const Input& in) {
  if (!in.file.empty()) return std::nullopt;
  const auto p = in.params();
  if (in.name() == "bipartite" && in.quotient)
    return bipartite_sdepth_bounds(BipartiteParams(std::max(p[0], p[1]), std::min(p[0], p[1]))).quotient.lower;
  if (in.quotient) return std::nullopt;
  if (in.name() == "multipartite" || in.name() == "maximal" || in.name() == "bipartite")
    return multipartite_ideal_bounds(MultipartiteSpec(p)).lower;
  return std::nullopt;
}

json bound_json(const BoundReport& b) {
  json j;
  j["quantity"] = b.quantity;
  j["lower"] = b.lower ? json(*b.lower) : json(nullptr);
  j["upper"] = b.upper ? json(*b.upper) : json(nullptr);
  j["exact"] = b.exact ? json(*b.exact) : json(nullptr);
  j["citation"] = b.citation;
  j["notes"] = b.notes;
  return j;
}

void print_bound(std::ostream& out, const BoundReport& b) {
  out << b.quantity << ": ";
  if (b.exact)
    out << "= " << *b.exact;
  else
    out << window_string(b.lower, b.upper);
  out << "  [" << b.citation << "]\n";
  for (const auto& n : b.notes) out << "    " << n << '\n';
}

BoundReport single(const std::string& quantity, std::optional<long> lo, std::optional<long> hi,
                   std::optional<long> exact, const std::string& citation) {
  BoundReport b;
  b.quantity = quantity;
  b.lower = lo;
  b.upper = hi;
  b.exact = exact;
  b.citation = citation;
  return b;
}

std::vector<BoundReport> family_bounds(const Input& in) {
  if (!in.file.empty()) throw UsageError("bounds needs a named family");
  const std::string& name = in.name();
  const auto p = in.params();
  std::vector<BoundReport> out;
  try {
    if (name == "bipartite") {
      need(p, 2, "bipartite N M");
      BipartiteParams bp(std::max(p[0], p[1]), std::min(p[0], p[1]));
      auto w = bipartite_sdepth_bounds(bp);
      out.push_back(w.ideal);
      out.push_back(w.quotient);
      out.push_back(single("qdepth(I)", {}, {}, bipartite_hdepth_ideal(bp), "bipartite-ideal-hdepth"));
      out.push_back(single("qdepth(S/I)", {}, bipartite_qdepth_quotient_upper(bp), {}, "bipartite-quotient-sqrt-upper"));
      if (bp.m >= 2)
        out.push_back(single("qdepth(S/I)", {}, {}, bipartite_qdepth_quotient(bp), "bipartite-quotient-characterization"));
    } else if (name == "multipartite" || name == "maximal") {
      MultipartiteSpec spec(p);
      out.push_back(multipartite_ideal_bounds(spec));
      out.push_back(multipartite_quotient_bounds(spec));
      out.push_back(single("qdepth(S/I)", {}, quotient_upper_bound_binomial(spec), {},
                           "multipartite-quotient-binomial-upper"));
      BoundReport safe = single("d* (beta^d_r(S/I) >= 0 for d <= d*)", {}, {}, quotient_safe_range(spec),
                                "multipartite-quotient-safe-range");
      safe.notes.push_back("heuristic estimate qdepth(S/I) ~ " + std::to_string(quotient_safe_range(spec)));
      safe.notes.push_back("means-inequality range: d <= " + std::to_string(means_safe_range(spec)));
      out.push_back(safe);
    } else if (name == "path-aux") {
      need(p, 2, "path-aux M T");
      out.push_back(single("qdepth(U_{m,t})", {}, path_aux_upper(p[0], p[1]), {}, "path-aux-upper"));
    } else if (name == "cycle-aux") {
      need(p, 2, "cycle-aux N D");
      if (p[1] < 1 || p[0] % p[1] != 0) throw UsageError("cycle-aux: D must divide N");
      out.push_back(single("qdepth(U'_{n,d})", {}, (p[0] + p[1]) / 2, {}, "cycle-aux-upper"));
    } else if (name == "path-power") {
      need(p, 3, "path-power N M T");
      out.push_back(path_power_report(p[0], p[1], p[2]));
    } else if (name == "cycle-power") {
      need(p, 2, "cycle-power N M");
      out.push_back(cycle_power_report(p[0], p[1]));
    } else {
      throw UsageError("no bounds for family '" + name + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return out;
}

OutputFormat format_of(bool as_json, bool as_csv) {
  if (as_json) return OutputFormat::json;
  if (as_csv) return OutputFormat::csv;
  return OutputFormat::table;
}

void add_input_options(CLI::App* cmd, Input& in) {
  cmd->add_option("--family", in.family, "family name followed by its parameters, e.g. bipartite 2 2")
      ->expected(1, -1);
  cmd->add_option("--file", in.file, "ideal file ('n <ground_size>' header, one generator per line)");
  auto* ideal_flag = cmd->add_flag("--ideal", "work with I (default)");
  cmd->add_flag("--quotient", in.quotient, "work with S/I")->excludes(ideal_flag);
  cmd->add_option("--enum-cap", in.enum_cap, "largest enumerated ground size (env ENUM_CAP)");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert depth and Stanley depth of squarefree monomial ideals"};
  app.require_subcommand(1);

  Input in;
  bool as_json = false;
  bool as_csv = false;

  auto* alpha_cmd = app.add_subcommand("alpha", "rank counts alpha_k of P_{J/I}");
  add_input_options(alpha_cmd, in);
  alpha_cmd->add_flag("--json", as_json);

  int beta_d = -1;
  auto* beta_cmd = app.add_subcommand("beta", "beta^d_k table");
  add_input_options(beta_cmd, in);
  beta_cmd->add_option("--d", beta_d, "print only this row");
  beta_cmd->add_flag("--json", as_json);

  bool show_beta = false;
  auto* hdepth_cmd = app.add_subcommand("hdepth", "Hilbert depth");
  add_input_options(hdepth_cmd, in);
  hdepth_cmd->add_flag("--show-beta", show_beta, "print the first negative entry of row hdepth+1");
  hdepth_cmd->add_flag("--json", as_json);

  SolverOptions solver;
  std::string witness_path;
  auto* sdepth_cmd = app.add_subcommand("sdepth", "Stanley depth by interval-partition search");
  add_input_options(sdepth_cmd, in);
  sdepth_cmd->add_option("--budget", solver.node_budget, "node budget per level (env SDEPTH_NODE_BUDGET)");
  sdepth_cmd->add_option("--solver-cap", solver.ground_cap, "largest ground size handed to the solver");
  sdepth_cmd->add_option("--witness", witness_path, "write the witness partition to this file");
  sdepth_cmd->add_flag("--json", as_json);

  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bounds for a family");
  add_input_options(bounds_cmd, in);
  bounds_cmd->add_flag("--json", as_json);

  auto* family_cmd = app.add_subcommand("family", "print a family's generators in ideal file format");
  add_input_options(family_cmd, in);

  std::string grid = "bipartite";
  int max_n = 8;
  int parts = 3;
  int max_block = 3;
  int max_ground = 12;
  AuditOptions audit_opts;
  auto* audit_cmd = app.add_subcommand("audit", "check every applicable claim over a parameter grid");
  audit_cmd->add_option("--family", grid, "bipartite | multipartite | path-aux | cycle-aux")
      ->check(CLI::IsMember({"bipartite", "multipartite", "path-aux", "cycle-aux"}));
  audit_cmd->add_option("--max-n", max_n, "bipartite: all m <= n <= max; cycle-aux: n <= max");
  audit_cmd->add_option("--r", parts, "multipartite: number of blocks");
  audit_cmd->add_option("--max-block", max_block, "multipartite: largest block size");
  audit_cmd->add_option("--max-ground", max_ground, "path-aux: t + m <= max");
  audit_cmd->add_option("--sdepth-max", audit_opts.sdepth_max_ground, "run the Stanley solver when N <= this");
  audit_cmd->add_option("--budget", audit_opts.solver.node_budget, "solver node budget");
  audit_cmd->add_option("--jobs", audit_opts.jobs, "worker threads (0 = all cores)");
  audit_cmd->add_flag("--json", as_json);
  audit_cmd->add_flag("--csv", as_csv);

  bool timing = false;
  bool guaranteed_only = false;
  AuditOptions scan_opts;
  scan_opts.sdepth_max_ground = 0;
  auto* scan_cmd = app.add_subcommand("scan", "multipartite conjecture scan qdepth(I) = floor((N+r)/2)");
  scan_cmd->add_option("--r", parts, "number of blocks");
  scan_cmd->add_option("--max-block", max_block, "largest block size");
  scan_cmd->add_option("--sdepth-max", scan_opts.sdepth_max_ground, "also solve sdepth(I) when N <= this");
  scan_cmd->add_option("--jobs", scan_opts.jobs, "worker threads (0 = all cores)");
  scan_cmd->add_flag("--guaranteed-only", guaranteed_only, "only specs with at most one even block");
  scan_cmd->add_flag("--timing", timing, "append per-point timing (not byte-stable)");
  scan_cmd->add_flag("--json", as_json);
  scan_cmd->add_flag("--csv", as_csv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*alpha_cmd) {
      const QuotientPair pair = build_pair(in);
      const AlphaVector a = alpha_vector(pair, in.enum_cap);
      json rows = json::array();
      bool all_agree = true;
      for (int k = 0; k <= a.ground_size; ++k) {
        auto c = closed_alpha(in, k);
        json row;
        row["k"] = k;
        row["alpha"] = a.counts[k].get_str();
        if (c) {
          row["closed_form"] = c->get_str();
          row["agree"] = *c == a.counts[k];
          all_agree = all_agree && *c == a.counts[k];
        }
        rows.push_back(row);
      }
      if (as_json) {
        json out;
        out["spec"] = describe(in);
        out["alpha"] = rows;
        out["zero_module"] = a.is_zero();
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << "# " << describe(in) << '\n';
        if (a.is_zero()) std::cout << "# warning: zero module (the region P is empty)\n";
        std::cout << "k\talpha_k";
        if (closed_alpha(in, 0)) std::cout << "\tclosed\tagree";
        std::cout << '\n';
        for (const auto& row : rows) {
          std::cout << row["k"].get<int>() << '\t' << row["alpha"].get<std::string>();
          if (row.contains("closed_form"))
            std::cout << '\t' << row["closed_form"].get<std::string>() << '\t' << (row["agree"].get<bool>() ? "yes" : "NO");
          std::cout << '\n';
        }
      }
      return all_agree ? 0 : kExitViolation;
    }

    if (*beta_cmd) {
      const AlphaVector a = alpha_vector(build_pair(in), in.enum_cap);
      if (beta_d > a.ground_size) throw UsageError("--d exceeds the ground size");
      json out = json::object();
      if (!as_json) std::cout << "# " << describe(in) << '\n';
      for (int d = 0; d <= a.ground_size; ++d) {
        if (beta_d >= 0 && d != beta_d) continue;
        BetaRow row = beta_row(a, d);
        std::vector<std::string> vals;
        for (const auto& v : row) vals.push_back(v.get_str());
        if (as_json) {
          out[std::to_string(d)] = vals;
        } else {
          std::cout << "d=" << d << ':';
          for (const auto& v : vals) std::cout << ' ' << v;
          std::cout << '\n';
        }
      }
      if (as_json) std::cout << out.dump(2) << '\n';
      return 0;
    }

    if (*hdepth_cmd) {
      const AlphaVector a = alpha_vector(build_pair(in), in.enum_cap);
      const int h = hdepth(a);
      std::optional<BetaEntry> fail;
      if (h < a.ground_size) fail = first_negative(a, h + 1);
      if (as_json) {
        json out;
        out["spec"] = describe(in);
        out["hdepth"] = h;
        if (fail) out["beta_fail"] = {{"d", fail->d}, {"k", fail->k}, {"value", fail->value.get_str()}};
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << "hdepth: " << h << '\n';
        if (show_beta) {
          if (fail)
            std::cout << "first failing entry: beta^" << fail->d << "_" << fail->k << " = " << fail->value << '\n';
          else
            std::cout << "hdepth equals the ground size; no failing row\n";
        }
      }
      return 0;
    }

    if (*sdepth_cmd) {
      const QuotientPair pair = build_pair(in);
      SdepthResult r = sdepth_exact(pair, solver);
      if (r.witness && !verify_partition(pair, *r.witness, r.lower)) {
        std::cerr << "internal error: witness rejected by verification\n";
        return kExitViolation;
      }
      const int witness_d = r.lower;
      if (!r.solved()) {
        if (auto lo = family_sdepth_lower(in); lo && *lo > r.lower) r.lower = static_cast<int>(std::min<long>(*lo, r.upper));
      }
      if (!witness_path.empty() && r.witness) {
        std::ofstream w(witness_path);
        w << format_witness(*r.witness);
      }
      if (as_json) {
        json out;
        out["spec"] = describe(in);
        out["sdepth_lo"] = r.lower;
        out["sdepth_hi"] = r.upper;
        out["solved"] = r.solved();
        out["nodes"] = r.nodes;
        if (r.witness) {
          out["witness_d"] = witness_d;
          out["witness"] = format_witness(*r.witness);
        }
        std::cout << out.dump(2) << '\n';
      } else if (r.solved()) {
        std::cout << "sdepth: " << r.lower << '\n';
        if (r.witness && witness_path.empty()) std::cout << format_witness(*r.witness);
      } else {
        std::cout << "sdepth: undecided window [" << r.lower << ", " << r.upper << "]\n";
      }
      return r.solved() ? 0 : kExitUndecided;
    }

    if (*bounds_cmd) {
      auto bounds = family_bounds(in);
      if (as_json) {
        json arr = json::array();
        for (const auto& b : bounds) arr.push_back(bound_json(b));
        std::cout << arr.dump(2) << '\n';
      } else {
        for (const auto& b : bounds) print_bound(std::cout, b);
      }
      return 0;
    }

    if (*family_cmd) {
      std::cout << format_ideal(build_ideal(in));
      return 0;
    }

    if (*audit_cmd) {
      AuditReport rep;
      if (grid == "bipartite") rep = audit_bipartite(max_n, audit_opts);
      if (grid == "multipartite") rep = audit_multipartite(parts, max_block, audit_opts);
      if (grid == "path-aux") rep = audit_path_aux(max_ground, audit_opts);
      if (grid == "cycle-aux") rep = audit_cycle_aux(max_n, audit_opts);
      write_rows(std::cout, rep.rows, format_of(as_json, as_csv));
      std::cerr << "audit: " << rep.rows.size() << " rows, " << rep.violations << " violations, " << rep.findings
                << " findings, " << rep.undecided << " undecided\n";
      return rep.violations == 0 ? 0 : kExitViolation;
    }

    if (*scan_cmd) {
      auto records = scan_conjecture(parts, max_block, scan_opts);
      std::vector<ReportRow> rows;
      int matches = 0;
      int violations = 0;
      for (const auto& rec : records) {
        if (guaranteed_only && !rec.guaranteed) continue;
        ReportRow row = scan_row(rec);
        if (timing) row.beta_fail += " ms=" + std::to_string(rec.millis);
        if (row.status == RowStatus::match) ++matches;
        if (row.status == RowStatus::violation) ++violations;
        rows.push_back(std::move(row));
      }
      write_rows(std::cout, rows, format_of(as_json, as_csv));
      std::cerr << "scan: " << rows.size() << " specs, " << matches << " match, " << violations
                << " guaranteed-case violations\n";
      return violations == 0 ? 0 : kExitViolation;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
