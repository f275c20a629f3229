#include "kakutani/analysis.hpp"

#include <algorithm>
#include <string>

namespace kakutani {

namespace {

struct Candidate {
  Ratio g;  // F(t) - t, F counting points strictly below t
  WitnessEnd at;
};

// Position order of candidates: value first, then exact before right limit.
bool before(const WitnessEnd& a, const WitnessEnd& b) {
  if (a.value != b.value) return a.value < b.value;
  return !a.right_limit && b.right_limit;
}

}  // namespace

DiscrepancyReport discrepancy(std::span<const Ratio> points) {
  if (points.empty()) throw Error(ErrorCode::EmptySet, "discrepancy of an empty point set");
  const Ratio zero(0), one(1);

  std::vector<const Ratio*> sorted;
  sorted.reserve(points.size());
  for (const auto& p : points) {
    if (p < zero || p > one) throw Error(ErrorCode::InvalidArgument, "point " + p.to_string() + " outside [0,1]");
    sorted.push_back(&p);
  }
  if (!std::is_sorted(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return *a < *b; }))
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return *a < *b; });

  const Integer n_total(static_cast<unsigned long>(points.size()));
  // g(0) = 0 is both a sup and an inf candidate.
  Candidate sup{zero, {zero, false}};
  Candidate inf = sup;

  std::size_t below = 0;  // points strictly below the current value
  for (std::size_t i = 0; i < sorted.size();) {
    const Ratio& v = *sorted[i];
    std::size_t j = i;
    while (j < sorted.size() && *sorted[j] == v) ++j;
    const std::size_t through = j;  // points <= v

    if (v.sign() > 0) {
      // Attained minimum on the run (previous value, v]: g(v) = below/N - v.
      Ratio g = Ratio(Integer(static_cast<unsigned long>(below)), n_total) - v;
      if (g < inf.g) inf = {std::move(g), {v, false}};
    }
    if (v < one) {
      // Supremum just to the right of v: g(v+) = through/N - v.
      Ratio g = Ratio(Integer(static_cast<unsigned long>(through)), n_total) - v;
      if (g > sup.g) sup = {std::move(g), {v, true}};
    }
    below = through;
    i = j;
  }
  {
    std::size_t under_one = 0;
    for (const auto* p : sorted)
      if (*p < one) ++under_one;
    Ratio g = Ratio(Integer(static_cast<unsigned long>(under_one)), n_total) - one;
    if (g < inf.g) inf = {std::move(g), {one, false}};
  }

  DiscrepancyReport report;
  report.n_points = points.size();
  report.extreme = sup.g - inf.g;
  report.star = std::max(sup.g, -inf.g);
  if (before(inf.at, sup.at)) {
    report.witness_lo = inf.at;  // [a,b) holds more points than its length
    report.witness_hi = sup.at;
  } else {
    report.witness_lo = sup.at;  // [a,b) holds fewer points than its length
    report.witness_hi = inf.at;
  }
  return report;
}

MeasureValue empirical_measure(const PointSet& w, const Interval& j) {
  if (w.empty()) throw Error(ErrorCode::EmptySet, "empirical measure of an empty point set");
  std::size_t count = 0;
  if (std::is_sorted(w.points.begin(), w.points.end())) {
    auto lo = std::lower_bound(w.points.begin(), w.points.end(), j.lo);
    auto hi = std::lower_bound(lo, w.points.end(), j.hi);
    count = static_cast<std::size_t>(hi - lo);
  } else {
    for (const auto& p : w.points)
      if (j.lo <= p && p < j.hi) ++count;
  }
  return {j, Ratio(Integer(static_cast<unsigned long>(count)), Integer(static_cast<unsigned long>(w.size()))),
          j.length()};
}

std::vector<ConvergenceRow> convergence_report(const SplitRule& rule, std::span<const std::size_t> checkpoints,
                                               PointConvention convention, const Limits& limits) {
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
    throw Error(ErrorCode::InvalidArgument, "checkpoints must be increasing");
  RefinementEngine engine(rule, Partition(), limits);
  std::vector<ConvergenceRow> rows;
  rows.reserve(checkpoints.size());
  for (std::size_t n : checkpoints) {
    while (engine.steps_taken() < n) engine.step();
    PointSet w = engine.points(convention);
    rows.push_back({n, engine.interval_count(), discrepancy(w.points)});
  }
  return rows;
}

DensityCheck density_bound(const SplitRule& rule, const Partition& p, const Interval& j) {
  DensityCheck out{j, DensityStatus::NotYetSubdivided, Ratio(), rule.min_ratio() * j.length(),
                   j.length() / rule.min_ratio()};
  if (!p.subdivides(j)) return out;
  out.nu = Ratio(Integer(static_cast<unsigned long>(p.intervals_within(j))),
                 Integer(static_cast<unsigned long>(p.interval_count())));
  out.status = (out.lower <= out.nu && out.nu <= out.upper) ? DensityStatus::Passed : DensityStatus::Failed;
  return out;
}

std::vector<DensityCheck> density_bounds_check(const SplitRule& rule, std::size_t n,
                                               std::span<const std::vector<std::size_t>> addresses,
                                               const Limits& limits) {
  RefinementEngine engine(rule, Partition(), limits);
  while (engine.steps_taken() < n) engine.step();
  const Partition p = engine.partition();
  std::vector<DensityCheck> out;
  out.reserve(addresses.size());
  for (const auto& word : addresses) out.push_back(density_bound(rule, p, interval_address(rule, word)));
  return out;
}

std::vector<Remark22Row> remark22_experiment(std::size_t n_max) {
  if (n_max < 2) throw Error(ErrorCode::InvalidArgument, "remark22 experiment needs n_max >= 2");
  const Partition start = Partition::from_breakpoints({Ratio(0), Ratio(2, 5), Ratio(1)});
  LengthSpectrum spectrum(SplitRule::make({Ratio(1, 2), Ratio(1, 2)}), start);
  std::vector<Remark22Row> rows;
  rows.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    spectrum.step();
    // Right endpoints of the intervals inside [0, 2/5] lie in (0, 2/5]; 2/5 itself is excluded.
    rows.push_back({n, Ratio(spectrum.descendants(0) - 1, spectrum.interval_count())});
  }
  return rows;
}

}  // namespace kakutani
