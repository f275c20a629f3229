#include <doctest.h>

#include <numeric>
#include <random>

#include "kakutani/analysis.hpp"
#include "kakutani/oracle.hpp"
#include "test_support.hpp"

using namespace kakutani;
using test::bp;
using test::R;

namespace {

// Discrepancy of the witness interval, evaluated directly from its definition.
Ratio witness_gap(const std::vector<Ratio>& pts, const DiscrepancyReport& r) {
  long count = 0;
  for (const auto& p : pts) {
    const bool after_lo = r.witness_lo.right_limit ? p > r.witness_lo.value : p >= r.witness_lo.value;
    const bool before_hi = r.witness_hi.right_limit ? p <= r.witness_hi.value : p < r.witness_hi.value;
    if (after_lo && before_hi) ++count;
  }
  return abs(Ratio(count) / Ratio(static_cast<long>(pts.size())) - (r.witness_hi.value - r.witness_lo.value));
}

}  // namespace

TEST_CASE("extreme discrepancy examples") {
  const auto grid = bp({"0", "1/4", "1/2", "3/4"});
  CHECK(discrepancy(grid).extreme == R(1, 4));

  // Oracle-derived values, frozen.
  const auto single = bp({"1/2"});
  CHECK(oracle::brute_force_discrepancy(single).extreme == R(1));
  CHECK(discrepancy(single).extreme == R(1));
  CHECK(discrepancy(single).degenerate_witness());

  const auto right = bp({"1/4", "1/2", "3/4", "1"});
  CHECK(oracle::brute_force_discrepancy(right).extreme == R(1, 4));
  CHECK(discrepancy(right).extreme == R(1, 4));

  CHECK(test::code_of([] { discrepancy({}); }) == ErrorCode::EmptySet);
  const auto outside = bp({"1/2", "3/2"});
  CHECK(test::code_of([&] { discrepancy(outside); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("star discrepancy examples") {
  const auto single = bp({"1/2"});
  CHECK(oracle::brute_force_discrepancy(single).star == R(1, 2));
  CHECK(star_discrepancy(PointSet{single}) == R(1, 2));
  for (long n = 1; n <= 50; ++n) {
    std::vector<Ratio> pts;
    for (long i = 1; i <= n; ++i) pts.push_back(R(i, n));
    CHECK(oracle::brute_force_discrepancy(pts).star == R(1, n));
    CHECK(discrepancy(pts).star == R(1, n));
  }
}

TEST_CASE("property: fast discrepancy equals brute force") {
  std::mt19937_64 gen(71);
  for (int set = 0; set < 150; ++set) {
    const auto pts = test::random_points(gen, 1 + gen() % 60, 1 + static_cast<long>(gen() % 40));
    const auto fast = discrepancy(pts);
    const auto slow = oracle::brute_force_discrepancy(pts);
    CAPTURE(set);
    CHECK(fast.extreme == slow.extreme);
    CHECK(fast.star == slow.star);
    CHECK(fast.n_points == pts.size());
    CHECK(witness_gap(pts, fast) == fast.extreme);
    CHECK(fast.witness_lo.value <= fast.witness_hi.value);
  }
}

TEST_CASE("property: discrepancy ranges") {
  std::mt19937_64 gen(73);
  for (int set = 0; set < 1000; ++set) {
    const std::size_t n = 1 + gen() % 100;
    const auto pts = test::random_points(gen, n, 1000);
    const auto r = discrepancy(pts);
    CHECK(r.star <= r.extreme);
    CHECK(r.extreme <= R(2) * r.star);
    CHECK(r.star <= R(1));
    CHECK(r.extreme <= R(1));
    CHECK(r.extreme * R(2 * static_cast<long>(n)) >= R(1));  // D >= 1/(2n)
  }
}

TEST_CASE("empirical measure uses half-open intervals") {
  const auto dyadic3 = iterate(make_rule({R(1, 2), R(1, 2)}), 3);
  const auto half = Interval::make(R(0), R(1, 2));
  CHECK(empirical_measure(points_of(dyadic3, PointConvention::LeftEndpoints), half).nu == R(1, 2));
  CHECK(empirical_measure(points_of(dyadic3), half).nu == R(3, 8));  // 1/2 itself is excluded

  const PointSet kappa2{bp({"1/3", "5/9", "1"})};
  const auto m = empirical_measure(kappa2, Interval::make(R(0), R(1, 3)));
  CHECK(m.nu == R(0));
  CHECK(m.lambda == R(1, 3));

  std::mt19937_64 gen(79);
  for (int i = 0; i < 100; ++i) {
    PointSet w{test::random_points(gen, 1 + gen() % 30, 6)};
    long ones = 0;
    for (const auto& p : w.points) ones += p == R(1);
    // nu([0,1)) + multiplicity(1)/k = 1
    CHECK(empirical_measure(w, Interval::make(R(0), R(1))).nu + Ratio(ones) / Ratio(static_cast<long>(w.size())) == R(1));
    // sorted and unsorted inputs agree
    PointSet sorted = w;
    std::sort(sorted.points.begin(), sorted.points.end());
    const auto j = Interval::make(R(1, 6), R(2, 3));
    CHECK(empirical_measure(w, j).nu == empirical_measure(sorted, j).nu);
  }
}

TEST_CASE("convergence report") {
  std::vector<std::size_t> checkpoints(10);
  std::iota(checkpoints.begin(), checkpoints.end(), std::size_t{1});
  const auto rows = convergence_report(make_rule({R(1, 2), R(1, 2)}), checkpoints);
  for (const auto& row : rows) {
    CHECK(row.k_n == (std::size_t{1} << row.n));
    CHECK(row.report.extreme == pow2(-static_cast<long>(row.n)));
  }

  const std::vector<std::size_t> later{1, 10, 20};
  const auto third = convergence_report(make_rule({R(1, 3), R(2, 3)}), later);
  CHECK(third.back().report.extreme < third.front().report.extreme);

  for (const auto& row : convergence_report(make_rule({R(1, 2), R(1, 4), R(1, 4)}), later)) {
    CHECK(row.report.extreme >= R(0));
    CHECK(row.report.extreme <= R(1));
  }

  const std::vector<std::size_t> backwards{3, 2};
  CHECK(test::code_of([&] { convergence_report(make_rule({R(1, 2), R(1, 2)}), backwards); }) ==
        ErrorCode::InvalidArgument);
  const std::vector<std::size_t> huge{40};
  CHECK(test::code_of([&] { convergence_report(make_rule({R(1, 2), R(1, 2)}), huge, PointConvention::RightEndpoints, Limits{1 << 20}); }) ==
        ErrorCode::ResourceLimit);
}

TEST_CASE("density bounds check") {
  const std::vector<std::vector<std::size_t>> first{{1}};
  const auto dyadic = density_bounds_check(make_rule({R(1, 2), R(1, 2)}), 6, first);
  REQUIRE(dyadic.size() == 1);
  CHECK(dyadic[0].passed());
  CHECK(dyadic[0].nu == R(1, 2));
  CHECK(dyadic[0].lower == R(1, 4));
  CHECK(dyadic[0].upper == R(1));

  const auto third = density_bounds_check(make_rule({R(1, 3), R(2, 3)}), 10, first);
  CHECK(third[0].passed());
  // Direct count: intervals of rho^10 omega inside [0, 1/3].
  const Partition p = iterate(make_rule({R(1, 3), R(2, 3)}), 10);
  std::size_t inside = 0;
  for (std::size_t i = 0; i < p.interval_count(); ++i) inside += p.breakpoints()[i + 1] <= R(1, 3);
  CHECK(third[0].nu == Ratio(static_cast<long>(inside)) / Ratio(static_cast<long>(p.interval_count())));

  const std::vector<std::vector<std::size_t>> deep{{2, 2, 2}};
  CHECK(density_bounds_check(make_rule({R(1, 3), R(2, 3)}), 1, deep)[0].status == DensityStatus::NotYetSubdivided);
}

TEST_CASE("left-interval oscillation with start {0, 2/5, 1}") {
  const auto rows = remark22_experiment(40);
  CHECK(rows.front().n == 1);
  CHECK(rows.front().nu_left == R(0));

  // Cross-check against materialized partitions and the half-open measure.
  const auto halving = make_rule({R(1, 2), R(1, 2)});
  Partition p = Partition::from_breakpoints(bp({"0", "2/5", "1"}));
  for (std::size_t n = 1; n <= 24; ++n) {
    p = rho_refine(halving, p);
    CHECK(rows[n - 1].nu_left == empirical_measure(points_of(p), Interval::make(R(0), R(2, 5))).nu);
  }
  // Closed forms: (2^a - 1)/2^(a+1) after even steps, (2^a - 1)/(3 * 2^a) after odd steps.
  for (const auto& r : rows) {
    const long a = static_cast<long>(r.n / 2);
    const Ratio expect = r.n % 2 == 0 ? (pow2(a) - R(1)) / pow2(a + 1) : (pow2(a) - R(1)) / (R(3) * pow2(a));
    CHECK(r.nu_left == expect);
  }
  CHECK(test::code_of([] { remark22_experiment(1); }) == ErrorCode::InvalidArgument);
}
