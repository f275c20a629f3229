#include "kakutani/sequences.hpp"

#include <string>

#include "kakutani/engine.hpp"

namespace kakutani {

std::span<const Ratio> PointSequence::block(std::size_t n) const {
  if (n < 1 || n > block_offsets.size())
    throw Error(ErrorCode::IndexOutOfRange, "block " + std::to_string(n) + " does not exist");
  const std::size_t begin = n == 1 ? 0 : block_offsets[n - 2];
  return std::span<const Ratio>(points).subspan(begin, block_offsets[n - 1] - begin);
}

std::uint64_t block_stream_seed(Seed seed, std::uint64_t block) {
  std::uint64_t z = seed.value + 0x9E3779B97F4A7C15ull * block;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
  unsigned __int128 m = static_cast<unsigned __int128>(gen()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(gen()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

namespace {

template <typename Arrange>
PointSequence block_sequence(const SplitRule& rule, std::size_t blocks, PointConvention convention,
                             const Limits& limits, Arrange arrange) {
  if (blocks < 1) throw Error(ErrorCode::InvalidArgument, "need at least one block");
  RefinementEngine engine(rule, Partition(), limits);
  PointSequence seq;
  seq.block_offsets.reserve(blocks);
  for (std::size_t n = 1; n <= blocks; ++n) {
    engine.step();
    PointSet w = engine.points(convention);
    if (seq.points.size() + w.size() > limits.max_intervals)
      throw Error(ErrorCode::ResourceLimit, "sequence length exceeds the cap at block " + std::to_string(n));
    arrange(w.points, n);
    seq.points.insert(seq.points.end(), std::make_move_iterator(w.points.begin()),
                      std::make_move_iterator(w.points.end()));
    seq.block_offsets.push_back(seq.points.size());
  }
  return seq;
}

}  // namespace

PointSequence sequential_random_reordering(const SplitRule& rule, std::size_t blocks, Seed seed,
                                           PointConvention convention, const Limits& limits) {
  return block_sequence(rule, blocks, convention, limits, [seed](std::vector<Ratio>& w, std::size_t n) {
    std::mt19937_64 gen(block_stream_seed(seed, n));
    shuffle(w, gen);
  });
}

PointSequence lexicographic_reordering(const SplitRule& rule, std::size_t blocks, PointConvention convention,
                                       const Limits& limits) {
  // Engine output is already in increasing order.
  return block_sequence(rule, blocks, convention, limits, [](std::vector<Ratio>&, std::size_t) {});
}

Ratio radical_inverse(std::uint64_t k) {
  Integer num = 0;
  unsigned long bits = 0;
  for (; k != 0; k >>= 1, ++bits) num = num * 2 + static_cast<unsigned long>(k & 1u);
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  return Ratio(num, den);
}

PointSequence van_der_corput(std::size_t count) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "van der Corput needs at least one point");
  PointSequence seq;
  seq.points.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) seq.points.push_back(radical_inverse(k));
  return seq;
}

std::vector<PrefixRow> prefix_discrepancy_series(const PointSequence& seq, std::span<const std::size_t> checkpoints) {
  std::vector<PrefixRow> rows;
  rows.reserve(checkpoints.size());
  for (std::size_t n : checkpoints) {
    if (n < 1 || n > seq.size())
      throw Error(ErrorCode::CheckpointOutOfRange,
                  "checkpoint " + std::to_string(n) + " outside 1.." + std::to_string(seq.size()));
    rows.push_back({n, discrepancy(std::span<const Ratio>(seq.points).first(n))});
  }
  return rows;
}

}  // namespace kakutani
