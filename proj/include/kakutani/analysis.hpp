#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kakutani/engine.hpp"
#include "kakutani/partition.hpp"

namespace kakutani {

/// Endpoint of a discrepancy witness. `right_limit` marks a one-sided
/// limit x -> value+ (the supremum is approached but not attained).
struct WitnessEnd {
  Ratio value;
  bool right_limit = false;
};

struct DiscrepancyReport {
  std::size_t n_points = 0;
  Ratio extreme;  ///< sup over half-open [a,b) of |#{t in [a,b)}/n - (b-a)|
  Ratio star;     ///< same supremum over anchored [0,b)
  WitnessEnd witness_lo;
  WitnessEnd witness_hi;

  bool degenerate_witness() const { return witness_lo.right_limit || witness_hi.right_limit; }
};

/// Exact extreme and star discrepancy of a finite multiset of points in
/// [0,1], in O(n log n). Points need not be sorted.
/// Throws EmptySet on empty input and InvalidArgument for points outside [0,1].
DiscrepancyReport discrepancy(std::span<const Ratio> points);

inline DiscrepancyReport extreme_discrepancy(const PointSet& w) { return discrepancy(w.points); }
inline Ratio star_discrepancy(const PointSet& w) { return discrepancy(w.points).star; }

struct MeasureValue {
  Interval interval;
  Ratio nu;      ///< fraction of points in [lo, hi)
  Ratio lambda;  ///< hi - lo
};

/// nu(J) with the half-open [lo, hi) counting convention.
MeasureValue empirical_measure(const PointSet& w, const Interval& j);

struct ConvergenceRow {
  std::size_t n = 0;
  std::size_t k_n = 0;
  DiscrepancyReport report;
};

/// Runs the engine once and reports D(W_n) at each (non-decreasing) checkpoint.
std::vector<ConvergenceRow> convergence_report(const SplitRule& rule, std::span<const std::size_t> checkpoints,
                                               PointConvention convention = PointConvention::RightEndpoints,
                                               const Limits& limits = {});

enum class DensityStatus { Passed, Failed, NotYetSubdivided };

struct DensityCheck {
  Interval interval;
  DensityStatus status = DensityStatus::NotYetSubdivided;
  Ratio nu;     ///< (intervals of rho^n omega inside J) / k(n)
  Ratio lower;  ///< a_1 * lambda(J)
  Ratio upper;  ///< lambda(J) / a_1

  bool passed() const { return status == DensityStatus::Passed; }
};

/// Checks a_1 lambda(J) <= nu_n(J) <= lambda(J) / a_1 for rho-adic intervals
/// J given by their index words. J must be a union of intervals of rho^n omega;
/// otherwise the entry is NotYetSubdivided.
std::vector<DensityCheck> density_bounds_check(const SplitRule& rule, std::size_t n,
                                               std::span<const std::vector<std::size_t>> addresses,
                                               const Limits& limits = {});

/// Same check against an already computed rho^n omega.
DensityCheck density_bound(const SplitRule& rule, const Partition& p, const Interval& j);

struct Remark22Row {
  std::size_t n = 0;
  Ratio nu_left;  ///< nu_n([0, 2/5)) under right endpoints
};

/// Halving applied to pi = {0, 2/5, 1}; nu_n([0, 2/5)) for n = 1..n_max.
/// Uses LengthSpectrum so n_max in the hundreds is cheap.
std::vector<Remark22Row> remark22_experiment(std::size_t n_max);

}  // namespace kakutani
