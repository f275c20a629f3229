#pragma once

#include <cstdint>
#include <span>

#include "kakutani/ratio.hpp"

// Slow reference computations used to cross-check the library. They share
// no code with the implementations they check.
namespace kakutani::oracle {

struct BruteDiscrepancy {
  Ratio extreme;
  Ratio star;
};

/// O(n^2) supremum over every candidate interval [a,b) whose endpoints are
/// 0, 1, or a point taken exactly or as a right limit.
BruteDiscrepancy brute_force_discrepancy(std::span<const Ratio> points);

/// Radical inverse computed by writing k in binary and mirroring the digit string.
Ratio bit_reversal(std::uint64_t k);

}  // namespace kakutani::oracle
