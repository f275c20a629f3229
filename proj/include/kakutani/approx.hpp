#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "kakutani/error.hpp"

/// Fixed-precision mode for rules with irrational parts.
///
/// Lengths are 50-digit decimal floats and two lengths count as equal
/// (hence split in the same step) when they differ by at most the
/// tolerance. Orbits match the exact rational orbit only as long as no two
/// genuinely distinct lengths fall within the tolerance of each other.
namespace kakutani::approx {

using Real = boost::multiprecision::cpp_dec_float_50;

inline const Real& default_tolerance() {
  static const Real tol("1e-30");
  return tol;
}

class ApproxRule {
 public:
  /// Same checks as SplitRule::make, with |sum - 1| <= tolerance.
  static ApproxRule make(std::vector<Real> ratios, const Real& tolerance = default_tolerance());
  static ApproxRule parse(std::string_view literal, const Real& tolerance = default_tolerance());

  std::size_t size() const { return ratios_.size(); }
  const std::vector<Real>& ratios() const { return ratios_; }
  const std::vector<Real>& cuts() const { return cuts_; }
  const Real& min_ratio() const { return min_; }

 private:
  std::vector<Real> ratios_;
  std::vector<Real> cuts_;
  Real min_;
};

struct ApproxStats {
  std::size_t n = 0;
  std::size_t k_n = 0;
  Real a_n;
  Real A_n;
};

/// RefinementEngine counterpart with tolerant length classes.
class ApproxEngine {
 public:
  explicit ApproxEngine(ApproxRule rule, const Real& tolerance = default_tolerance(), Limits limits = {});

  void step();
  std::size_t steps_taken() const { return steps_; }
  std::size_t interval_count() const { return count_; }
  ApproxStats stats() const;
  std::vector<Real> breakpoints() const;

 private:
  struct Node {
    Real left;
    Real length;
    std::uint32_t next;
  };
  struct Descending {
    Real tol;
    bool operator()(const Real& a, const Real& b) const { return a > b + tol; }
  };
  static constexpr std::uint32_t kEnd = UINT32_MAX;

  ApproxRule rule_;
  Limits limits_;
  std::vector<Node> nodes_;
  std::map<Real, std::vector<std::uint32_t>, Descending> classes_;
  std::size_t count_ = 1;
  std::size_t steps_ = 0;
};

}  // namespace kakutani::approx
