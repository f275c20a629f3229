#include <doctest.h>

#include <random>

#include "kakutani/approx.hpp"
#include "kakutani/engine.hpp"
#include "test_support.hpp"

using namespace kakutani;
using test::bp;
using test::R;

TEST_CASE("run examples") {
  const RunResult dyadic = run(make_rule({R(1, 2), R(1, 2)}), 10);
  CHECK(dyadic.partition.interval_count() == 1024);
  CHECK(dyadic.stats.back().k_n == 1024);
  CHECK(dyadic.stats.back().a_n == R(1, 1024));
  CHECK(dyadic.stats.back().A_n == R(1, 1024));

  const RunResult third = run(make_rule({R(1, 3), R(2, 3)}), 3);
  CHECK(third.stats.back().k_n == 4);
  CHECK(third.partition.breakpoints() == bp({"0", "1/3", "5/9", "19/27", "1"}));

  const RunResult mixed = run(make_rule({R(1, 2), R(1, 4), R(1, 4)}), 2);
  CHECK(mixed.stats.back().k_n == 5);
  CHECK(mixed.stats.back().A_n == R(1, 4));
  CHECK(mixed.stats.back().a_n == R(1, 8));
  CHECK(mixed.stats.back().diam() == R(1, 4));
  CHECK(mixed.stats.size() == 2);
  CHECK(mixed.stats.front().n == 1);
}

TEST_CASE("engine matches naive iteration step by step") {
  std::vector<SplitRule> rules = test::some_rules();
  std::mt19937_64 gen(41);
  for (int i = 0; i < 25; ++i) rules.push_back(test::random_rule(gen, 4));
  for (const auto& rule : rules) {
    CAPTURE(rule.to_string());
    RefinementEngine engine(rule);
    Partition naive;
    for (std::size_t n = 1; n <= 12; ++n) {
      engine.step();
      naive = rho_refine(rule, naive);
      REQUIRE(engine.partition() == naive);
      CHECK(engine.stats().a_n == naive.min_length());
      CHECK(engine.stats().A_n == naive.max_length());
      CHECK(engine.interval_count() == naive.interval_count());
    }
  }
}

TEST_CASE("engine from an arbitrary start matches refine_from") {
  const auto start = Partition::from_breakpoints(bp({"0", "1/7", "2/5", "1"}));
  for (const auto& rule : test::some_rules()) {
    RefinementEngine engine(rule, start);
    for (int n = 0; n < 15; ++n) engine.step();
    CHECK(engine.partition() == refine_from(rule, start, 15));
  }
}

TEST_CASE("run invariants: monotone stats and exact total length") {
  std::mt19937_64 gen(43);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rule = test::random_rule(gen, 4);
    const RunResult r = run(rule, advance_to_count(rule, 20000).stats.n);
    for (std::size_t i = 1; i < r.stats.size(); ++i) {
      CHECK(r.stats[i].k_n > r.stats[i - 1].k_n);
      CHECK(r.stats[i].A_n < r.stats[i - 1].A_n);
    }
    for (const auto& s : r.stats) {
      CHECK(s.a_n <= s.A_n);
      CHECK(rule.min_ratio() * s.A_n <= s.a_n);                                  // a_1 A_n <= a_n
      CHECK(s.A_n * Ratio(static_cast<long>(s.n)) * rule.min_ratio() <= R(1));  // A_n <= 1/(n a_1)
    }
    Ratio total;
    for (std::size_t i = 0; i < r.partition.interval_count(); ++i) total += r.partition.length(i);
    CHECK(total == R(1));
  }
}

TEST_CASE("length spectrum reproduces engine stats") {
  std::vector<SplitRule> rules = test::some_rules();
  std::mt19937_64 gen(47);
  for (int i = 0; i < 10; ++i) rules.push_back(test::random_rule(gen, 4));
  for (const auto& rule : rules) {
    const std::size_t steps = advance_to_count(rule, 30000).stats.n;
    const RunResult r = run(rule, steps);
    const auto s = spectrum_stats(rule, steps);
    REQUIRE(s.size() == r.stats.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i].n == r.stats[i].n);
      CHECK(s[i].k_n == r.stats[i].k_n);
      CHECK(s[i].a_n == r.stats[i].a_n);
      CHECK(s[i].A_n == r.stats[i].A_n);
    }
  }
}

TEST_CASE("length spectrum reaches astronomically large partitions") {
  const auto stats = spectrum_stats(make_rule({R(1, 2), R(1, 2)}), 2000);
  CHECK(stats.back().A_n == pow2(-2000));
  Integer expected = 1;
  mpz_mul_2exp(expected.get_mpz_t(), expected.get_mpz_t(), 2000);
  CHECK(stats.back().k_n == expected);
}

TEST_CASE("length spectrum per-origin counts") {
  LengthSpectrum s(make_rule({R(1, 2), R(1, 2)}), Partition::from_breakpoints(bp({"0", "2/5", "1"})));
  CHECK(s.origin_count() == 2);
  s.step();  // splits [2/5, 1]
  CHECK(s.descendants(0) == 1);
  CHECK(s.descendants(1) == 2);
  s.step();  // splits [0, 2/5]
  CHECK(s.descendants(0) == 2);
  CHECK(s.interval_count() == 4);
}

TEST_CASE("advance_to_count") {
  const auto dyadic = advance_to_count(make_rule({R(1, 2), R(1, 2)}), 1000);
  CHECK(dyadic.stats.n == 10);
  CHECK(dyadic.stats.k_n == 1024);

  const auto rule = make_rule({R(1, 3), R(2, 3)});
  const auto r = advance_to_count(rule, 100);
  const auto series = run(rule, r.stats.n).stats;
  CHECK(series.back().k_n >= 100);
  CHECK(series[series.size() - 2].k_n < 100);
  CHECK(r.partition.interval_count() == series.back().k_n.get_ui());

  for (const auto& any : test::some_rules()) CHECK(advance_to_count(any, 2).stats.n == 1);
  CHECK(test::code_of([&] { advance_to_count(rule, 1); }) == ErrorCode::InvalidArgument);
  CHECK(test::code_of([&] { advance_to_count(rule, 1000, Limits{500}); }) == ErrorCode::ResourceLimit);
}

TEST_CASE("kakutani wrapper") {
  CHECK(kakutani::kakutani(R(1, 2), 5).partition == iterate(make_rule({R(1, 2), R(1, 2)}), 5));
  CHECK(kakutani::kakutani(R(1, 3), 2).partition.breakpoints() == bp({"0", "1/3", "5/9", "1"}));
  CHECK(kakutani::kakutani(R(2, 5), 4).partition == run(make_rule({R(2, 5), R(3, 5)}), 4).partition);
  CHECK(test::code_of([] { kakutani::kakutani(R(0), 3); }) == ErrorCode::NonPositivePart);
}

TEST_CASE("resource limit leaves the engine usable") {
  RefinementEngine engine(make_rule({R(1, 2), R(1, 2)}), Partition(), Limits{8});
  engine.step();
  engine.step();
  engine.step();
  CHECK(engine.interval_count() == 8);
  CHECK(test::code_of([&] { engine.step(); }) == ErrorCode::ResourceLimit);
  CHECK(engine.interval_count() == 8);
  CHECK(engine.partition().interval_count() == 8);
}

TEST_CASE("approximate mode agrees with exact mode on decimal rules") {
  using approx::ApproxEngine;
  using approx::ApproxRule;
  for (const char* lit : {"0.5,0.5", "0.4,0.6", "0.5,0.25,0.25", "0.2,0.3,0.5"}) {
    CAPTURE(lit);
    ApproxEngine fuzzy(ApproxRule::parse(lit));
    RefinementEngine exact(SplitRule::parse(lit));
    for (int n = 0; n < 16; ++n) {
      fuzzy.step();
      exact.step();
      REQUIRE(fuzzy.interval_count() == exact.interval_count());
    }
    const auto t = fuzzy.breakpoints();
    const Partition materialized = exact.partition();
    const auto& e = materialized.breakpoints();
    REQUIRE(t.size() == e.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      const approx::Real exact_value = approx::Real(e[i].numerator().get_str()) / approx::Real(e[i].denominator().get_str());
      CHECK(abs(t[i] - exact_value) < approx::Real("1e-40"));
    }
  }
}

TEST_CASE("approximate mode handles an irrational golden-ratio rule") {
  using approx::Real;
  // alpha = (sqrt 5 - 1)/2 so alpha^2 + alpha = 1: lengths alpha^m coincide across branches.
  const Real alpha = (boost::multiprecision::sqrt(Real(5)) - 1) / 2;
  const Real beta = 1 - alpha;
  approx::ApproxEngine engine(approx::ApproxRule::make({alpha, beta}));
  std::size_t previous = 1;
  for (int n = 1; n <= 25; ++n) {
    engine.step();
    const auto s = engine.stats();
    CHECK(s.k_n > previous);
    CHECK(beta * s.A_n <= s.a_n + Real("1e-30"));  // a_1 A_n <= a_n, a_1 = beta
    previous = s.k_n;
  }
  // With beta = alpha^2 every step splits one length class and the count follows Fibonacci.
  CHECK(engine.interval_count() == 196418);
  CHECK(test::code_of([] { approx::ApproxRule::parse("0.3,0.3"); }) == ErrorCode::SumNotOne);
  CHECK(test::code_of([] { approx::ApproxRule::parse("0.5,abc"); }) == ErrorCode::Parse);
}
