#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "kakutani/oracle.hpp"
#include "kakutani/sequences.hpp"
#include "test_support.hpp"

using namespace kakutani;
using test::bp;
using test::R;

namespace {

std::vector<Ratio> sorted(std::span<const Ratio> s) {
  std::vector<Ratio> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("random reordering permutes each block") {
  for (const auto& rule : test::some_rules()) {
    CAPTURE(rule.to_string());
    const auto seq = sequential_random_reordering(rule, 12, Seed{9});
    REQUIRE(seq.block_count() == 12);
    Partition p;
    std::size_t total = 0;
    for (std::size_t n = 1; n <= 12; ++n) {
      p = rho_refine(rule, p);
      total += p.interval_count();
      CHECK(seq.block_offsets[n - 1] == total);
      CHECK(sorted(seq.block(n)) == points_of(p).points);
    }
    CHECK(seq.size() == total);
  }
}

TEST_CASE("random reordering is deterministic per seed and block") {
  const auto rule = make_rule({R(1, 3), R(2, 3)});
  const auto a = sequential_random_reordering(rule, 15, Seed{7});
  const auto b = sequential_random_reordering(rule, 15, Seed{7});
  const auto c = sequential_random_reordering(rule, 15, Seed{8});
  CHECK(a.points == b.points);
  CHECK(a.points != c.points);

  // More blocks never disturb the earlier ones.
  const auto longer = sequential_random_reordering(rule, 18, Seed{7});
  CHECK(std::equal(a.points.begin(), a.points.end(), longer.points.begin()));

  CHECK(test::code_of([&] { sequential_random_reordering(rule, 0, Seed{7}); }) == ErrorCode::InvalidArgument);
  CHECK(test::code_of([&] { sequential_random_reordering(make_rule({R(1, 2), R(1, 2)}), 12, Seed{7}, PointConvention::RightEndpoints, Limits{1000}); }) ==
        ErrorCode::ResourceLimit);
}

TEST_CASE("stream seeds and bounded draws are frozen") {
  // SplitMix64 finalizer of 0 + golden gamma: the first output of a SplitMix64 generator seeded with 0.
  CHECK(block_stream_seed(Seed{0}, 1) == 0xE220A8397B1DCDAFULL);
  CHECK(block_stream_seed(Seed{7}, 3) != block_stream_seed(Seed{7}, 4));

  std::mt19937_64 gen(42);
  std::vector<int> hits(6, 0);
  for (int i = 0; i < 60000; ++i) ++hits[uniform_below(gen, 6)];
  for (int h : hits) CHECK(std::abs(h - 10000) < 500);
  CHECK(uniform_below(gen, 1) == 0);
}

TEST_CASE("shuffle yields a permutation") {
  std::mt19937_64 gen(1);
  std::vector<int> v(100);
  std::iota(v.begin(), v.end(), 0);
  auto w = v;
  kakutani::shuffle(w, gen);
  CHECK(w != v);
  std::sort(w.begin(), w.end());
  CHECK(w == v);
}

TEST_CASE("lexicographic reordering lists blocks in increasing order") {
  const auto dyadic = lexicographic_reordering(make_rule({R(1, 2), R(1, 2)}), 3);
  CHECK(std::vector<Ratio>(dyadic.block(1).begin(), dyadic.block(1).end()) == bp({"0", "1/2"}));
  CHECK(std::vector<Ratio>(dyadic.block(2).begin(), dyadic.block(2).end()) == bp({"0", "1/4", "1/2", "3/4"}));

  const auto third = lexicographic_reordering(make_rule({R(1, 3), R(2, 3)}), 10, PointConvention::RightEndpoints);
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto blk = third.block(n);
    CHECK(std::is_sorted(blk.begin(), blk.end()));
    CHECK(blk.back() == R(1));
  }
  CHECK(test::code_of([&] { (void)third.block(11); }) == ErrorCode::IndexOutOfRange);
  CHECK(test::code_of([&] { (void)third.block(0); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("van der Corput matches bit reversal") {
  const auto v = van_der_corput(7);
  CHECK(v.points == bp({"1/2", "1/4", "3/4", "1/8", "5/8", "3/8", "7/8"}));
  CHECK(v.block_count() == 0);
  for (std::uint64_t k = 0; k < 5000; ++k) CHECK(radical_inverse(k) == oracle::bit_reversal(k));
  CHECK(radical_inverse(~std::uint64_t{0}) == oracle::bit_reversal(~std::uint64_t{0}));
}

TEST_CASE("prefix discrepancy of van der Corput") {
  const auto v = van_der_corput(1023);
  std::vector<std::size_t> checkpoints;
  for (std::size_t m = 1; m <= 10; ++m) checkpoints.push_back((std::size_t{1} << m) - 1);
  for (const auto& row : prefix_discrepancy_series(v, checkpoints)) {
    const std::span<const Ratio> prefix(v.points.data(), row.n);
    const auto slow = oracle::brute_force_discrepancy(prefix);
    CHECK(row.report.extreme == slow.extreme);
    CHECK(row.report.star == slow.star);
    // N = 2^m - 1 leaves exactly the gap [0, 2^-m).
    CHECK(row.report.star * Ratio(static_cast<long>(row.n + 1)) == R(1));
    CHECK(row.report.extreme * Ratio(static_cast<long>(row.n + 1)) == R(2));
  }

  const std::vector<std::size_t> zero{0}, past{1024};
  CHECK(test::code_of([&] { prefix_discrepancy_series(v, zero); }) == ErrorCode::CheckpointOutOfRange);
  CHECK(test::code_of([&] { prefix_discrepancy_series(v, past); }) == ErrorCode::CheckpointOutOfRange);
}

TEST_CASE("constant sequence is not uniformly distributed") {
  PointSequence half;
  half.points.assign(200, R(1, 2));
  const std::vector<std::size_t> checkpoints{1, 10, 200};
  for (const auto& row : prefix_discrepancy_series(half, checkpoints)) CHECK(row.report.star == R(1, 2));
}

TEST_CASE("property: random reordering prefix discrepancy equals brute force") {
  const auto seq = sequential_random_reordering(make_rule({R(2, 5), R(3, 5)}), 12, Seed{3});
  std::vector<std::size_t> checkpoints;
  for (std::size_t n = 1; n <= std::min<std::size_t>(seq.size(), 150); n += 7) checkpoints.push_back(n);
  for (const auto& row : prefix_discrepancy_series(seq, checkpoints)) {
    const auto slow = oracle::brute_force_discrepancy(std::span<const Ratio>(seq.points.data(), row.n));
    CHECK(row.report.extreme == slow.extreme);
  }
}
