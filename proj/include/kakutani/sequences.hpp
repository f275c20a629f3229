#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "kakutani/analysis.hpp"
#include "kakutani/partition.hpp"

namespace kakutani {

struct Seed {
  std::uint64_t value = 0;
};

/// Ordered points in [0,1]. When built from a sequence of partitions,
/// block_offsets[n-1] = K(n) = k(1) + ... + k(n) marks the end of block n.
struct PointSequence {
  std::vector<Ratio> points;
  std::vector<std::size_t> block_offsets;

  std::size_t size() const { return points.size(); }
  std::size_t block_count() const { return block_offsets.size(); }

  /// Points of block n (1-based).
  std::span<const Ratio> block(std::size_t n) const;
};

/// Seed of the generator that shuffles block `block`: the SplitMix64
/// finalizer applied to seed + 0x9E3779B97F4A7C15 * block. Each block owns
/// an independent std::mt19937_64 stream, so adding blocks never changes
/// earlier ones. Both pieces are fully specified, hence portable.
std::uint64_t block_stream_seed(Seed seed, std::uint64_t block);

/// Unbiased integer in [0, bound) by Lemire's multiply-shift with rejection.
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound);

/// Fisher-Yates shuffle driven by uniform_below.
template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& gen) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_below(gen, i));
    std::swap(items[i - 1], items[j]);
  }
}

/// Concatenation over n = 1..blocks of a uniformly random permutation of W_n.
PointSequence sequential_random_reordering(const SplitRule& rule, std::size_t blocks, Seed seed,
                                           PointConvention convention = PointConvention::RightEndpoints,
                                           const Limits& limits = {});

/// Each block W_n listed in increasing order; not uniformly distributed.
PointSequence lexicographic_reordering(const SplitRule& rule, std::size_t blocks,
                                       PointConvention convention = PointConvention::LeftEndpoints,
                                       const Limits& limits = {});

/// Binary radical inverse of k = 1..count.
PointSequence van_der_corput(std::size_t count);

/// Radical inverse of a single index; 0 maps to 0.
Ratio radical_inverse(std::uint64_t k);

struct PrefixRow {
  std::size_t n = 0;
  DiscrepancyReport report;
};

/// Discrepancy of each prefix x_1..x_N. Throws CheckpointOutOfRange for N = 0 or N > size.
std::vector<PrefixRow> prefix_discrepancy_series(const PointSequence& seq, std::span<const std::size_t> checkpoints);

}  // namespace kakutani
