#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <memory>
#include <numeric>
#include <optional>

#include "kakutani/analysis.hpp"
#include "kakutani/approx.hpp"
#include "kakutani/engine.hpp"
#include "kakutani/export.hpp"
#include "kakutani/sequences.hpp"
#include "kakutani/verify.hpp"

namespace kakutani::cli {

namespace {

struct Config {
  std::string rule;
  std::size_t steps = 0;
  std::size_t points = 0;
  std::size_t blocks = 0;
  std::optional<std::uint64_t> seed;
  std::vector<std::size_t> checkpoints;
  std::string out;
  std::string format = "csv";
  std::string convention;
  bool exact = false;
  bool full = false;
  bool lexicographic = false;
  bool vdc = false;
  bool approx = false;
  bool series = false;
  std::string tolerance = "1e-30";
  std::string start;
  std::size_t max_intervals = Limits{}.max_intervals;
  int digits = io::kDefaultDigits;
  std::vector<std::string> suites;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Limits limits_of(const Config& c) { return Limits{c.max_intervals}; }

PointConvention convention_of(const Config& c, PointConvention fallback) {
  return c.convention.empty() ? fallback : parse_convention(c.convention);
}

void emit(std::ostream& os, const io::json& j) { os << j.dump(2) << '\n'; }

int cmd_generate(const Config& c, std::ostream& os) {
  if (c.approx) {
    const approx::Real tol(c.tolerance);
    approx::ApproxEngine engine(approx::ApproxRule::parse(c.rule, tol), tol, limits_of(c));
    for (std::size_t n = 0; n < c.steps; ++n) engine.step();
    const auto t = engine.breakpoints();
    if (c.format == "json") {
      io::json arr = io::json::array();
      for (const auto& x : t) arr.push_back(x.str(c.digits));
      emit(os, {{"intervals", t.size() - 1}, {"breakpoints", arr}});
    } else {
      os << "i,t_dec\n";
      for (std::size_t i = 0; i < t.size(); ++i) os << i << ',' << t[i].str(c.digits) << '\n';
    }
    return kOk;
  }
  const SplitRule rule = SplitRule::parse(c.rule);
  Partition p;
  if (c.full) {
    p = full_subdivide(rule, c.steps, limits_of(c));
  } else {
    Partition start;
    if (!c.start.empty()) {
      std::vector<Ratio> t;
      std::size_t pos = 0;
      while (true) {
        const auto comma = c.start.find(',', pos);
        t.push_back(Ratio::parse(std::string_view(c.start).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      start = Partition::from_breakpoints(std::move(t));
    }
    RefinementEngine engine(rule, start, limits_of(c));
    for (std::size_t n = 0; n < c.steps; ++n) engine.step();
    p = engine.partition();
  }
  if (c.format == "json") {
    io::json j = io::partition_json(p, c.digits);
    j["rule"] = rule.to_string();
    j["steps"] = c.steps;
    j["full"] = c.full;
    emit(os, j);
  } else {
    io::write_partition_csv(os, p, c.digits);
  }
  return kOk;
}

int cmd_stats(const Config& c, std::ostream& os) {
  if (c.approx) {
    const approx::Real tol(c.tolerance);
    approx::ApproxEngine engine(approx::ApproxRule::parse(c.rule, tol), tol, limits_of(c));
    os << "n,k_n,a_n_dec,A_n_dec\n";
    for (std::size_t n = 0; n < c.steps; ++n) {
      engine.step();
      const auto s = engine.stats();
      os << s.n << ',' << s.k_n << ',' << s.a_n.str(c.digits) << ',' << s.A_n.str(c.digits) << '\n';
    }
    return kOk;
  }
  const auto rows = spectrum_stats(SplitRule::parse(c.rule), c.steps);
  if (c.format == "json")
    emit(os, io::stats_json(rows, c.digits));
  else
    io::write_stats_csv(os, rows, c.digits);
  return kOk;
}

int cmd_discrepancy(const Config& c, std::ostream& os) {
  std::vector<std::size_t> checkpoints = c.checkpoints;
  if (checkpoints.empty()) {
    if (c.steps == 0) throw UsageError("discrepancy needs --steps or --checkpoints");
    checkpoints.resize(c.steps);
    std::iota(checkpoints.begin(), checkpoints.end(), std::size_t{1});
  }
  const auto rows = convergence_report(SplitRule::parse(c.rule), checkpoints,
                                       convention_of(c, PointConvention::RightEndpoints), limits_of(c));
  if (c.format == "json")
    emit(os, io::convergence_json(rows, c.digits));
  else
    io::write_convergence_csv(os, rows, c.digits);
  return kOk;
}

int cmd_reorder(const Config& c, std::ostream& os) {
  const int modes = int(c.lexicographic) + int(c.vdc);
  if (modes > 1) throw UsageError("--lexicographic and --vdc are mutually exclusive");
  PointSequence seq;
  if (c.vdc) {
    if (c.seed) throw UsageError("--seed is not valid with --vdc");
    if (c.points == 0) throw UsageError("--vdc needs --points N (N >= 1)");
    seq = van_der_corput(c.points);
  } else {
    if (c.rule.empty()) throw UsageError("--rule is required");
    if (c.blocks == 0) throw UsageError("--blocks must be at least 1");
    const SplitRule rule = SplitRule::parse(c.rule);
    if (c.lexicographic) {
      if (c.seed) throw UsageError("--seed is not valid with --lexicographic");
      seq = lexicographic_reordering(rule, c.blocks, convention_of(c, PointConvention::LeftEndpoints), limits_of(c));
    } else {
      if (!c.seed) throw UsageError("reorder needs --seed (no hidden entropy)");
      seq = sequential_random_reordering(rule, c.blocks, Seed{*c.seed},
                                         convention_of(c, PointConvention::RightEndpoints), limits_of(c));
    }
  }
  if (!c.checkpoints.empty()) {
    const auto rows = prefix_discrepancy_series(seq, c.checkpoints);
    if (c.format == "json")
      emit(os, io::prefix_json(rows, c.digits));
    else
      io::write_prefix_csv(os, rows, c.digits);
    return kOk;
  }
  if (c.format == "json")
    emit(os, io::sequence_json(seq, c.digits));
  else
    io::write_sequence_text(os, seq, c.exact, c.digits);
  return kOk;
}

int cmd_verify(const Config& c, std::ostream& os) {
  std::vector<std::string> names = c.suites.empty() ? verify::suite_names() : c.suites;
  for (const auto& n : names)
    if (!verify::has_suite(n)) throw UsageError("unknown suite '" + n + "'");
  bool all = true;
  for (const auto& n : names) {
    os << "suite " << n << '\n' << std::flush;
    const auto r = verify::run_suite(n, &os);
    all = all && r.passed;
    os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.seconds << " s): " << r.title << '\n';
  }
  return all ? kOk : kVerificationFailed;
}

int cmd_counterexample(const Config& c, std::ostream& os) {
  if (c.series) {
    const auto rows = remark22_experiment(c.steps ? c.steps : 400);
    if (c.format == "json")
      emit(os, io::remark22_json(rows, c.digits));
    else
      io::write_remark22_csv(os, rows, c.digits);
    return kOk;
  }
  Config v = c;
  v.suites = {"remark22"};
  return cmd_verify(v, os);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Iterated rho-refinement of [0,1]: partitions, discrepancy and point sequences", "kakutani"};
  app.require_subcommand(1);
  Config c;

  auto add_common = [&c](CLI::App* sub) {
    sub->add_option("--out", c.out, "Write output to PATH instead of stdout");
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--digits", c.digits, "Significant digits of decimal columns")->check(CLI::Range(1, 60));
  };
  auto add_rule = [&c](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--rule", c.rule, "Split rule, e.g. 1/3,2/3 or 0.5,0.25,0.25");
    if (required) o->required();
    sub->add_option("--max-intervals", c.max_intervals, "Interval cap per partition");
  };

  auto* generate = app.add_subcommand("generate", "Breakpoints of rho^n omega (or [rho]^n with --full)");
  add_rule(generate, true);
  add_common(generate);
  generate->add_option("--steps", c.steps, "Number of refinements")->required();
  generate->add_flag("--full", c.full, "Subdivide every interval each round (rho-adic partition)");
  generate->add_option("--start", c.start, "Starting breakpoints, e.g. 0,2/5,1");
  generate->add_flag("--approx", c.approx, "Fixed-precision decimal mode for irrational parts");
  generate->add_option("--tolerance", c.tolerance, "Length tie tolerance in --approx mode");

  auto* stats = app.add_subcommand("stats", "Per-step k(n), a_n, A_n");
  add_rule(stats, true);
  add_common(stats);
  stats->add_option("--steps", c.steps, "Number of refinements")->required();
  stats->add_flag("--approx", c.approx, "Fixed-precision decimal mode for irrational parts");
  stats->add_option("--tolerance", c.tolerance, "Length tie tolerance in --approx mode");

  auto* disc = app.add_subcommand("discrepancy", "Extreme and star discrepancy of W_n at checkpoints");
  add_rule(disc, true);
  add_common(disc);
  disc->add_option("--steps", c.steps, "Report n = 1..steps");
  disc->add_option("--checkpoints", c.checkpoints, "Comma-separated step indices")->delimiter(',');
  disc->add_option("--convention", c.convention, "Point convention")->check(CLI::IsMember({"right", "all", "left"}));

  auto* reorder = app.add_subcommand("reorder", "Sequential reorderings of the partition points");
  add_rule(reorder, false);
  add_common(reorder);
  reorder->add_option("--blocks", c.blocks, "Number of blocks (partitions)");
  reorder->add_option("--seed", c.seed, "64-bit seed (required for random reordering)");
  reorder->add_flag("--lexicographic", c.lexicographic, "Sort each block instead of shuffling");
  reorder->add_flag("--vdc", c.vdc, "van der Corput sequence instead");
  reorder->add_option("--points", c.points, "Length of the van der Corput sequence");
  reorder->add_flag("--exact", c.exact, "Print points as exact fractions");
  reorder->add_option("--checkpoints", c.checkpoints, "Print prefix discrepancy at these N instead")->delimiter(',');
  reorder->add_option("--convention", c.convention, "Point convention")->check(CLI::IsMember({"right", "all", "left"}));

  auto* vdc = app.add_subcommand("vdc", "Alias of reorder --vdc");
  add_common(vdc);
  vdc->add_option("--points", c.points, "Number of points")->required();
  vdc->add_flag("--exact", c.exact, "Print points as exact fractions");
  vdc->add_option("--checkpoints", c.checkpoints, "Print prefix discrepancy at these N instead")->delimiter(',');

  auto* ver = app.add_subcommand("verify", "Run the self-check suites; exit 4 on failure");
  ver->add_option("--out", c.out, "Write the report to PATH");
  ver->add_option("--suite", c.suites, "Suite name (repeatable); default all");

  auto* counter = app.add_subcommand("counterexample", "Alias of verify --suite remark22");
  add_common(counter);
  counter->add_flag("--series", c.series, "Emit the n,nu_left series instead of the report");
  counter->add_option("--steps", c.steps, "Series length (default 400)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::ofstream file;
  std::ostream* os = &out;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) {
      err << "error: cannot open " << c.out << '\n';
      return kUsage;
    }
    os = &file;
  }

  try {
    if (generate->parsed()) return cmd_generate(c, *os);
    if (stats->parsed()) return cmd_stats(c, *os);
    if (disc->parsed()) return cmd_discrepancy(c, *os);
    if (reorder->parsed()) return cmd_reorder(c, *os);
    if (vdc->parsed()) {
      c.vdc = true;
      return cmd_reorder(c, *os);
    }
    if (ver->parsed()) return cmd_verify(c, *os);
    if (counter->parsed()) return cmd_counterexample(c, *os);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::ResourceLimit: return kResource;
      default: return kUsage;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace kakutani::cli
