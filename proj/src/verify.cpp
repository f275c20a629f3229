#include "kakutani/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "kakutani/analysis.hpp"
#include "kakutani/engine.hpp"
#include "kakutani/oracle.hpp"
#include "kakutani/sequences.hpp"

namespace kakutani::verify {

namespace {

class Recorder {
 public:
  Recorder(SuiteResult& result, std::ostream* log) : result_(result), log_(log) {}

  template <typename... Args>
  void note(const Args&... args) {
    std::ostringstream os;
    (os << ... << args);
    result_.details.push_back(os.str());
    if (log_) *log_ << "  " << result_.details.back() << '\n' << std::flush;
  }

 private:
  SuiteResult& result_;
  std::ostream* log_;
};

std::string dec(const Ratio& r) { return to_decimal(r, 6); }

Ratio frac(long p, long q) { return Ratio(p, q); }

// --- 1 ---------------------------------------------------------------------
bool dyadic(Recorder& rec) {
  const auto rule = SplitRule::make({frac(1, 2), frac(1, 2)});
  RefinementEngine engine(rule);
  bool ok = true;
  for (std::size_t n = 1; n <= 12; ++n) {
    engine.step();
    const Partition p = engine.partition();
    const long cells = 1L << n;
    bool grid = p.interval_count() == static_cast<std::size_t>(cells);
    for (long i = 0; grid && i <= cells; ++i) grid = p.breakpoints()[static_cast<std::size_t>(i)] == frac(i, cells);
    const Ratio d = discrepancy(points_of(p).points).extreme;
    const bool exact = d == frac(1, cells);
    ok = ok && grid && exact;
    if (!grid || !exact || n == 12)
      rec.note("n=", n, " grid=", grid ? "yes" : "NO", " D=", d, " expected 1/", cells);
  }
  return ok;
}

// --- 2 ---------------------------------------------------------------------
bool kakutani_prefix(Recorder& rec) {
  bool ok = true;
  for (const Ratio& alpha : {frac(1, 3), frac(1, 4), frac(2, 5)}) {
    const Ratio beta = Ratio(1) - alpha;
    const auto kappa1 = Partition::from_breakpoints({Ratio(0), alpha, Ratio(1)});
    const auto kappa2 = Partition::from_breakpoints({Ratio(0), alpha, alpha + alpha * beta, Ratio(1)});
    const RunResult r = kakutani(alpha, 2);
    RefinementEngine one(SplitRule::kakutani(alpha));
    one.step();
    const bool k1 = one.partition() == kappa1 && iterate(SplitRule::kakutani(alpha), 1) == kappa1;
    const bool k2 = r.partition == kappa2 && iterate(SplitRule::kakutani(alpha), 2) == kappa2;
    ok = ok && k1 && k2;
    rec.note("alpha=", alpha, " kappa1=", k1 ? "match" : "MISMATCH", " kappa2=", k2 ? "match" : "MISMATCH",
             " (alpha+alpha*beta=", alpha + alpha * beta, ")");
  }
  return ok;
}

// --- 3 ---------------------------------------------------------------------
std::vector<SplitRule> random_rules(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<SplitRule> rules;
  while (rules.size() < count) {
    const std::size_t k = 2 + static_cast<std::size_t>(uniform_below(gen, 3));
    std::vector<long> w(k);
    long total = 0;
    for (auto& x : w) total += x = 1 + static_cast<long>(uniform_below(gen, 20));
    std::vector<Ratio> ratios;
    for (long x : w) ratios.push_back(frac(x, total));
    rules.push_back(SplitRule::make(std::move(ratios)));
  }
  return rules;
}

bool lemmas(Recorder& rec) {
  auto rules = rule_matrix();
  for (auto& r : random_rules(20, 0x5EED2024)) rules.push_back(std::move(r));
  constexpr std::size_t kSteps = 2000;
  bool ok = true;
  for (const auto& rule : rules) {
    const Ratio& a1 = rule.min_ratio();
    LengthSpectrum spectrum(rule);
    std::size_t violations = 0;
    for (std::size_t n = 1; n <= kSteps; ++n) {
      spectrum.step();
      const StepStats s = spectrum.stats();
      const Ratio bound = Ratio(1) / (Ratio(static_cast<long>(n)) * a1);
      if (!(a1 * s.A_n <= s.a_n) || !(s.A_n <= bound) || !(s.a_n <= Ratio(1, static_cast<long>(n)))) ++violations;
    }
    ok = ok && violations == 0;
    rec.note("rule ", rule.to_string(), ": ", kSteps, " steps, k(n) has ", spectrum.interval_count().get_str().size(),
             " digits, classes=", spectrum.class_count(), ", violations=", violations);
  }
  return ok;
}

// --- 4 ---------------------------------------------------------------------
bool convergence(Recorder& rec) {
  constexpr std::size_t kMaxPoints = 100'000;
  const Ratio eps(1, 20);
  bool ok = true;
  for (const auto& rule : rule_matrix()) {
    const auto started = std::chrono::steady_clock::now();
    RefinementEngine engine(rule);
    std::vector<std::pair<std::size_t, Ratio>> rows;  // (k(n), D)
    std::size_t decade = 10;
    auto record = [&] {
      rows.emplace_back(engine.interval_count(), discrepancy(engine.points().points).extreme);
    };
    engine.step();
    record();
    while (engine.next_count() <= kMaxPoints) {
      engine.step();
      if (engine.interval_count() >= decade && engine.next_count() <= kMaxPoints) {
        record();
        while (decade <= engine.interval_count()) decade *= 10;
      }
    }
    record();
    bool below = false;
    std::ostringstream series;
    for (const auto& [k, d] : rows) {
      below = below || d < eps;
      series << " k=" << k << ":" << dec(d);
    }
    const bool shrink = rows.back().second * Ratio(5) <= rows.front().second;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    const bool fast = secs < 60;  // per-rule budget
    ok = ok && below && shrink && fast;
    rec.note("rule ", rule.to_string(), (below && shrink && fast) ? " ok" : " FAIL", " (", secs, " s) |", series.str());
  }
  return ok;
}

// --- 5 ---------------------------------------------------------------------
bool density(Recorder& rec) {
  std::mt19937_64 gen(0xD5);
  bool ok = true;
  for (const auto& rule : rule_matrix()) {
    std::vector<std::vector<std::size_t>> words;
    Ratio shortest(1);
    for (int i = 0; i < 50; ++i) {
      std::vector<std::size_t> w(1 + uniform_below(gen, 4));
      for (auto& x : w) x = 1 + static_cast<std::size_t>(uniform_below(gen, rule.size()));
      shortest = std::min(shortest, interval_address(rule, w).length());
      words.push_back(std::move(w));
    }
    // Once every interval is shorter than the shortest J, each J is a union of intervals.
    RefinementEngine engine(rule);
    std::size_t unsubdivided_early = 0;
    while (engine.stats().A_n >= shortest) engine.step();
    const Partition p = engine.partition();
    std::size_t passed = 0;
    Ratio worst_low(1000), worst_high(0);
    for (const auto& w : words) {
      const DensityCheck c = density_bound(rule, p, interval_address(rule, w));
      if (c.passed()) ++passed;
      if (c.status != DensityStatus::NotYetSubdivided) {
        worst_low = std::min(worst_low, c.nu / c.interval.length());
        worst_high = std::max(worst_high, c.nu / c.interval.length());
      } else {
        ++unsubdivided_early;
      }
    }
    ok = ok && passed == words.size();
    rec.note("rule ", rule.to_string(), ": n=", engine.steps_taken(), " k=", engine.interval_count(), " passed ",
             passed, "/", words.size(), " nu/lambda in [", dec(worst_low), ", ", dec(worst_high), "] vs [",
             dec(rule.min_ratio()), ", ", dec(Ratio(1) / rule.min_ratio()), "]", unsubdivided_early ? " (unsubdivided!)" : "");
  }
  return ok;
}

// --- 6 ---------------------------------------------------------------------
bool remark22(Recorder& rec) {
  constexpr std::size_t kSteps = 400;
  const double tol = 0.02;
  const auto rows = remark22_experiment(kSteps);
  double even_lo = 1, even_hi = 0, odd_lo = 1, odd_hi = 0;
  for (const auto& r : rows) {
    if (r.n <= kSteps - kSteps / 4) continue;
    const double v = r.nu_left.to_double();
    if (r.n % 2 == 0) {
      even_lo = std::min(even_lo, v);
      even_hi = std::max(even_hi, v);
    } else {
      odd_lo = std::min(odd_lo, v);
      odd_hi = std::max(odd_hi, v);
    }
  }
  auto within = [tol](double lo, double hi, double target) { return lo >= target - tol && hi <= target + tol; };
  const double half = 0.5, third = 1.0 / 3.0;
  const bool pair = (within(even_lo, even_hi, half) && within(odd_lo, odd_hi, third)) ||
                    (within(even_lo, even_hi, third) && within(odd_lo, odd_hi, half));
  const double gap = std::max(even_hi, odd_hi) - std::min(even_lo, odd_lo);
  rec.note("even tail in [", even_lo, ", ", even_hi, "], odd tail in [", odd_lo, ", ", odd_hi, "]");
  rec.note("limits {1/2, 1/3} within ", tol, ": ", pair ? "yes" : "NO", "; oscillation gap ", gap,
           gap > 0.1 ? " > 0.1" : " <= 0.1 (FAIL)");
  rec.note("as densities on [0,2/5]: even ", (even_lo + even_hi) / 2 / 0.4, ", odd ", (odd_lo + odd_hi) / 2 / 0.4);
  return pair && gap > 0.1;
}

// --- 7 ---------------------------------------------------------------------
bool oracle_equivalence(Recorder& rec) {
  std::mt19937_64 gen(0x0AC1E);
  std::size_t mismatches = 0, total_points = 0;
  for (int set = 0; set < 500; ++set) {
    const std::size_t n = 1 + static_cast<std::size_t>(uniform_below(gen, 200));
    std::vector<Ratio> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const long q = 1 + static_cast<long>(uniform_below(gen, 64));
      const long p = static_cast<long>(uniform_below(gen, static_cast<std::uint64_t>(q) + 1));
      pts.push_back(frac(p, q));
    }
    total_points += n;
    const DiscrepancyReport fast = discrepancy(pts);
    const oracle::BruteDiscrepancy slow = oracle::brute_force_discrepancy(pts);
    if (fast.extreme != slow.extreme || fast.star != slow.star) {
      if (mismatches < 5)
        rec.note("set ", set, " n=", n, ": fast ", fast.extreme, "/", fast.star, " brute ", slow.extreme, "/", slow.star);
      ++mismatches;
    }
  }
  rec.note("500 sets, ", total_points, " points, mismatches=", mismatches);
  return mismatches == 0;
}

// --- 8 ---------------------------------------------------------------------
bool reordering(Recorder& rec) {
  constexpr std::size_t kMinLength = 100'000;
  constexpr int kSeeds = 20;
  const Ratio threshold(1, 50);
  bool ok = true;
  for (const auto& rule : rule_matrix()) {
    // Reference blocks from the plain step-by-step refinement.
    std::vector<std::vector<Ratio>> reference;
    std::size_t length = 0;
    Partition p;
    while (length < kMinLength) {
      p = rho_refine(rule, p);
      reference.push_back(points_of(p).points);
      length += reference.back().size();
    }
    const std::size_t blocks = reference.size();
    int good = 0;
    bool multisets = true;
    std::ostringstream ds;
    Ratio mid_worst(0);  // seed-dependent: prefix ending halfway into the last block
    const std::size_t mid = (blocks > 1 ? length - reference.back().size() : 0) + reference.back().size() / 2;
    for (int s = 0; s < kSeeds; ++s) {
      const PointSequence seq = sequential_random_reordering(rule, blocks, Seed{static_cast<std::uint64_t>(s) + 1});
      for (std::size_t b = 1; b <= blocks; ++b) {
        auto blk = seq.block(b);
        std::vector<Ratio> sorted(blk.begin(), blk.end());
        std::sort(sorted.begin(), sorted.end());
        multisets = multisets && sorted == reference[b - 1];
      }
      const Ratio d = discrepancy(seq.points).extreme;
      if (d < threshold) ++good;
      mid_worst = std::max(mid_worst, discrepancy(std::span<const Ratio>(seq.points.data(), mid)).extreme);
      ds << ' ' << dec(d);
    }
    const bool rule_ok = good >= 19 && multisets;
    ok = ok && rule_ok;
    rec.note("rule ", rule.to_string(), ": blocks=", blocks, " K=", length, " seeds below 0.02: ", good, "/", kSeeds,
             " multisets=", multisets ? "equal" : "DIFFER", rule_ok ? "" : " FAIL", " | D:", ds.str(),
             " | worst mid-block D at N=", mid, ": ", dec(mid_worst));
  }
  return ok;
}

// --- 9 ---------------------------------------------------------------------
bool lexicographic(Recorder& rec) {
  constexpr std::size_t kMaxPoints = std::size_t{1} << 15;
  const Ratio floor(7, 50);  // 0.14
  const auto rule = SplitRule::make({frac(1, 2), frac(1, 2)});
  bool ok = true;
  for (auto convention : {PointConvention::LeftEndpoints, PointConvention::RightEndpoints}) {
    std::size_t blocks = 1;
    while ((std::size_t{1} << (blocks + 2)) - 2 <= kMaxPoints) ++blocks;  // K(n) = 2^(n+1) - 2
    const PointSequence seq = lexicographic_reordering(rule, blocks, convention);
    std::vector<std::size_t> mids;
    for (std::size_t b = 1; b <= seq.block_count(); ++b) {
      const std::size_t start = b == 1 ? 0 : seq.block_offsets[b - 2];
      mids.push_back(start + (seq.block_offsets[b - 1] - start) / 2);
    }
    Ratio least(1);
    for (const auto& row : prefix_discrepancy_series(seq, mids)) least = std::min(least, row.report.extreme);
    const bool pass = least >= floor;
    ok = ok && pass;
    rec.note(to_string(convention), " endpoints: ", mids.size(), " mid-block checkpoints up to N=", mids.back(),
             ", min D=", dec(least), pass ? " >= 0.14" : " < 0.14 (FAIL)");
  }
  return ok;
}

// --- 10 --------------------------------------------------------------------
bool vdc(Recorder& rec) {
  const PointSequence seq = van_der_corput((std::size_t{1} << 16) - 1);
  bool grid = true;
  for (unsigned m = 1; m <= 10; ++m) {
    const std::size_t count = (std::size_t{1} << m) - 1;
    std::vector<Ratio> prefix(seq.points.begin(), seq.points.begin() + static_cast<long>(count));
    std::sort(prefix.begin(), prefix.end());
    for (std::size_t i = 0; i < count; ++i) grid = grid && prefix[i] == frac(static_cast<long>(i + 1), 1L << m);
  }
  rec.note("first 2^m-1 points form the grid i/2^m for m<=10: ", grid ? "yes" : "NO");
  bool low = true;
  std::vector<std::size_t> checkpoints;
  for (unsigned m = 1; m <= 16; ++m) checkpoints.push_back((std::size_t{1} << m) - 1);
  for (const auto& row : prefix_discrepancy_series(seq, checkpoints)) {
    const long m = static_cast<long>(std::bit_width(row.n));
    const Ratio scaled = Ratio(static_cast<long>(row.n)) * row.report.star / Ratio(m);
    low = low && scaled <= Ratio(1);
    if (m == 1 || m == 8 || m == 16)
      rec.note("N=", row.n, " D*=", row.report.star, " N*D*/log2(N+1)=", dec(scaled));
  }
  return grid && low;
}

// --- 11 --------------------------------------------------------------------
bool permutation(Recorder& rec) {
  constexpr int kSeeds = 6000;
  const auto rule = SplitRule::make({frac(1, 6), frac(1, 3), frac(1, 2)});
  const std::vector<Ratio> w = points_of(iterate(rule, 1)).points;
  std::map<std::vector<std::size_t>, int> freq;
  for (int s = 0; s < kSeeds; ++s) {
    const PointSequence seq = sequential_random_reordering(rule, 1, Seed{static_cast<std::uint64_t>(s)});
    std::vector<std::size_t> order;
    for (const auto& x : seq.points) order.push_back(static_cast<std::size_t>(std::find(w.begin(), w.end(), x) - w.begin()));
    ++freq[order];
  }
  bool ok = freq.size() == 6;
  double chi2 = 0;
  const double expected = kSeeds / 6.0;
  std::ostringstream os;
  for (const auto& [order, count] : freq) {
    const double f = static_cast<double>(count) / kSeeds;
    ok = ok && std::abs(f - 1.0 / 6.0) <= 0.02;
    chi2 += (count - expected) * (count - expected) / expected;
    os << ' ' << order[0] << order[1] << order[2] << ':' << count;
  }
  const double critical = 15.086;  // chi-square, 5 degrees of freedom, 99%
  ok = ok && chi2 < critical;
  rec.note("orderings", os.str(), " chi2=", chi2, " (critical ", critical, ")");
  return ok;
}

struct Suite {
  const char* name;
  const char* title;
  double budget;
  bool (*fn)(Recorder&);
};

const std::array<Suite, 11>& suites() {
  static const std::array<Suite, 11> all{{
      {"dyadic", "dyadic partitions are the 2^n grid with D = 2^-n, n <= 12", 1, dyadic},
      {"kakutani", "kappa_1 and kappa_2 match the closed forms at alpha = 1/3", 1, kakutani_prefix},
      {"lemmas", "a_1 A_n <= a_n and A_n <= 1/(n a_1) for n <= 2000", 30, lemmas},
      {"convergence", "D(W_n) < 0.05 with k(n) <= 1e5, final <= first/5", 300, convergence},
      {"density", "a_1 lambda(J) <= nu_n(J) <= lambda(J)/a_1 on 50 rho-adic J per rule", 0, density},
      {"remark22", "pi = {0,2/5,1}: tails near {1/2, 1/3}, gap > 0.1", 10, remark22},
      {"oracle", "fast discrepancy equals O(n^2) brute force on 500 sets", 60, oracle_equivalence},
      {"reordering", "random reorderings: >= 19/20 seeds with D < 0.02 at K(n) >= 1e5", 300, reordering},
      {"lexicographic", "lexicographic dyadic order keeps mid-block D >= 0.14", 0, lexicographic},
      {"vdc", "van der Corput grid prefixes and N D*_N / log2(N+1) <= 1", 0, vdc},
      {"permutation", "6000 seeds give each of 6 orderings with frequency 1/6 +- 0.02", 0, permutation},
  }};
  return all;
}

}  // namespace

std::vector<SplitRule> rule_matrix() {
  return {
      SplitRule::make({frac(1, 2), frac(1, 2)}),
      SplitRule::make({frac(1, 3), frac(2, 3)}),
      SplitRule::make({frac(2, 5), frac(3, 5)}),
      SplitRule::make({frac(1, 2), frac(1, 4), frac(1, 4)}),
      SplitRule::make({frac(1, 6), frac(1, 3), frac(1, 2)}),
  };
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

bool has_suite(std::string_view name) {
  return std::any_of(suites().begin(), suites().end(), [&](const Suite& s) { return name == s.name; });
}

SuiteResult run_suite(std::string_view name, std::ostream* log) {
  const auto it = std::find_if(suites().begin(), suites().end(), [&](const Suite& s) { return name == s.name; });
  if (it == suites().end()) throw Error(ErrorCode::InvalidArgument, "unknown suite '" + std::string(name) + "'");
  SuiteResult result;
  result.name = it->name;
  result.title = it->title;
  result.budget_seconds = it->budget;
  Recorder rec(result, log);
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = it->fn(rec);
  } catch (const std::exception& e) {
    rec.note("exception: ", e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  result.passed = ok && result.within_budget();
  if (!result.within_budget()) rec.note("runtime ", result.seconds, " s exceeds budget ", result.budget_seconds, " s");
  return result;
}

}  // namespace kakutani::verify
