#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "kakutani/partition.hpp"

namespace kakutani {

/// Per-step summary of rho^n omega (or rho^n pi).
struct StepStats {
  std::size_t n = 0;
  Integer k_n;  ///< interval count; arbitrary precision so spectrum runs can go far
  Ratio a_n;    ///< shortest interval
  Ratio A_n;    ///< longest interval
  const Ratio& diam() const { return A_n; }
};

/// Iterated rho-refinement over a materialized partition.
///
/// Intervals live in a position-ordered singly linked node pool; a
/// descending map from exact length to member slots (the length classes)
/// yields the maximal class in O(log classes). A step touches only the
/// members of that class, so its cost is O(split count * log classes).
class RefinementEngine {
 public:
  explicit RefinementEngine(SplitRule rule, const Partition& start = Partition(), Limits limits = {});

  /// Applies one rho-refinement. Throws ResourceLimit (leaving the engine
  /// unchanged) if the result would exceed the interval cap.
  void step();

  std::size_t steps_taken() const { return steps_; }
  std::size_t interval_count() const { return count_; }
  std::size_t class_count() const { return classes_.size(); }
  const SplitRule& rule() const { return rule_; }

  StepStats stats() const;

  /// Interval count after the next step, without performing it.
  std::size_t next_count() const;

  /// Walks the node list; O(k(n)).
  Partition partition() const;
  PointSet points(PointConvention convention = PointConvention::RightEndpoints) const;

 private:
  static constexpr std::uint32_t kEnd = UINT32_MAX;
  struct Node {
    Ratio left;
    std::uint32_t next;
  };
  using ClassMap = std::map<Ratio, std::vector<std::uint32_t>, std::greater<>>;

  SplitRule rule_;
  Limits limits_;
  std::vector<Node> nodes_;
  ClassMap classes_;
  std::size_t count_ = 0;
  std::size_t steps_ = 0;
};

/// Iterated rho-refinement tracking only how many intervals share each
/// length (optionally split per starting interval), with unbounded counts.
/// Reaches step counts whose partitions could never be materialized, e.g.
/// 2^2000 dyadic intervals.
class LengthSpectrum {
 public:
  /// Each interval of `start` is its own origin; counts are kept per origin.
  explicit LengthSpectrum(SplitRule rule, const Partition& start = Partition());

  void step();

  std::size_t steps_taken() const { return steps_; }
  const Integer& interval_count() const { return total_; }
  std::size_t class_count() const { return classes_.size(); }
  StepStats stats() const;

  /// Number of current intervals descended from interval `origin` of the start partition.
  const Integer& descendants(std::size_t origin) const { return per_origin_.at(origin); }
  std::size_t origin_count() const { return per_origin_.size(); }

 private:
  using ClassMap = std::map<Ratio, std::vector<Integer>, std::greater<>>;

  SplitRule rule_;
  ClassMap classes_;
  std::vector<Integer> per_origin_;
  Integer total_;
  std::size_t steps_ = 0;
};

struct RunResult {
  Partition partition;
  std::vector<StepStats> stats;  ///< one entry per step, n = 1..steps
};

/// rho^steps omega via the engine, with stats for every step.
RunResult run(const SplitRule& rule, std::size_t steps, const Limits& limits = {});

/// Stats for n = 1..steps without materializing any partition.
std::vector<StepStats> spectrum_stats(const SplitRule& rule, std::size_t steps);

struct CountResult {
  Partition partition;
  StepStats stats;
};

/// Smallest n with k(n) >= min_points.
CountResult advance_to_count(const SplitRule& rule, std::size_t min_points, const Limits& limits = {});

/// Kakutani's alpha-refinement sequence: run(make_rule(alpha, 1 - alpha), steps).
RunResult kakutani(const Ratio& alpha, std::size_t steps, const Limits& limits = {});

}  // namespace kakutani
