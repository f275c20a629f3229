#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "kakutani/error.hpp"
#include "kakutani/ratio.hpp"

namespace kakutani {

/// The fixed partition rho of [0,1], stored as its part lengths alpha_1..alpha_k.
class SplitRule {
 public:
  /// Validates k >= 2, every part in (0,1), and an exact sum of 1.
  static SplitRule make(std::vector<Ratio> ratios);

  /// Parses the literal syntax "1/3,2/3" or "0.5,0.25,0.25".
  static SplitRule parse(std::string_view literal);

  /// Two-part rule (alpha, 1 - alpha).
  static SplitRule kakutani(const Ratio& alpha);

  std::size_t size() const { return ratios_.size(); }
  const std::vector<Ratio>& ratios() const { return ratios_; }
  const Ratio& ratio(std::size_t i) const { return ratios_[i]; }

  /// Cumulative breakpoints r_0 = 0 < r_1 < ... < r_k = 1.
  const std::vector<Ratio>& cuts() const { return cuts_; }

  /// Shortest part; equals a_1, the shortest interval after the first refinement.
  const Ratio& min_ratio() const { return min_; }
  const Ratio& max_ratio() const { return max_; }

  std::string to_string() const;

  friend bool operator==(const SplitRule& a, const SplitRule& b) { return a.ratios_ == b.ratios_; }

 private:
  SplitRule() = default;
  std::vector<Ratio> ratios_;
  std::vector<Ratio> cuts_;
  Ratio min_, max_;
};

inline SplitRule make_rule(std::vector<Ratio> ratios) { return SplitRule::make(std::move(ratios)); }

struct Interval {
  Ratio lo;
  Ratio hi;

  /// Throws InvalidArgument unless lo < hi.
  static Interval make(Ratio lo, Ratio hi);

  Ratio length() const { return hi - lo; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A finite partition of [0,1] stored as its breakpoints t_0 = 0 < ... < t_k = 1.
class Partition {
 public:
  /// The trivial partition {[0,1]}.
  Partition();

  /// Validates the breakpoint list; throws InvalidArgument if it is not a partition of [0,1].
  static Partition from_breakpoints(std::vector<Ratio> breakpoints);

  const std::vector<Ratio>& breakpoints() const { return t_; }
  std::size_t interval_count() const { return t_.size() - 1; }
  Interval interval(std::size_t i) const { return {t_[i], t_[i + 1]}; }
  Ratio length(std::size_t i) const { return t_[i + 1] - t_[i]; }

  Ratio max_length() const;
  Ratio min_length() const;

  /// True when both endpoints of `j` are breakpoints, i.e. `j` is a union of intervals.
  bool subdivides(const Interval& j) const;

  /// Number of intervals of this partition lying inside `j`.
  std::size_t intervals_within(const Interval& j) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  struct Unchecked {};
  Partition(Unchecked, std::vector<Ratio> t) : t_(std::move(t)) {}
  friend Partition rho_refine(const SplitRule&, const Partition&);
  friend Partition full_subdivide(const SplitRule&, std::size_t, const Limits&);
  friend class RefinementEngine;

  std::vector<Ratio> t_;
};

enum class PointConvention {
  RightEndpoints,  ///< t_1..t_k: excludes 0, includes 1
  AllBreakpoints,  ///< t_0..t_k
  LeftEndpoints,   ///< t_0..t_{k-1}: includes 0, excludes 1
};

PointConvention parse_convention(std::string_view name);
std::string_view to_string(PointConvention c);

/// Multiset of points extracted from a partition, kept in increasing order.
struct PointSet {
  std::vector<Ratio> points;
  PointConvention convention = PointConvention::RightEndpoints;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

/// One rho-refinement step: every interval of maximal length is split
/// homothetically to the rule; all other intervals are kept.
Partition rho_refine(const SplitRule& rule, const Partition& p);

/// rho^n applied to `start`. Throws ResourceLimit before a step would exceed the cap.
Partition refine_from(const SplitRule& rule, const Partition& start, std::size_t n,
                      const Limits& limits = {});

/// rho^n omega.
Partition iterate(const SplitRule& rule, std::size_t n, const Limits& limits = {});

/// The n-th rho-adic partition [rho]^n (all k^n intervals subdivided every round).
Partition full_subdivide(const SplitRule& rule, std::size_t n, const Limits& limits = {});

/// The rho-adic interval addressed by the 1-based index word (i_1, ..., i_n).
Interval interval_address(const SplitRule& rule, std::span<const std::size_t> indices);

PointSet points_of(const Partition& p, PointConvention convention = PointConvention::RightEndpoints);

}  // namespace kakutani
