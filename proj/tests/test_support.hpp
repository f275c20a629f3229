#pragma once

#include <functional>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "kakutani/error.hpp"
#include "kakutani/partition.hpp"
#include "kakutani/ratio.hpp"

namespace test {

inline kakutani::Ratio R(long p, long q = 1) { return kakutani::Ratio(p, q); }

inline std::vector<kakutani::Ratio> bp(std::initializer_list<const char*> items) {
  std::vector<kakutani::Ratio> out;
  for (const char* s : items) out.push_back(kakutani::Ratio::parse(s));
  return out;
}

/// Error code raised by `fn`, or throws if nothing was raised.
template <typename Fn>
kakutani::ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const kakutani::Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a kakutani::Error");
}

/// Random rational rule with 2..max_parts parts and small denominators.
inline kakutani::SplitRule random_rule(std::mt19937_64& gen, std::size_t max_parts) {
  const std::size_t k = 2 + gen() % (max_parts - 1);
  std::vector<long> w(k);
  long total = 0;
  for (auto& x : w) total += x = 1 + static_cast<long>(gen() % 12);
  std::vector<kakutani::Ratio> ratios;
  for (long x : w) ratios.emplace_back(x, total);
  return kakutani::SplitRule::make(std::move(ratios));
}

inline std::vector<kakutani::SplitRule> some_rules() {
  using kakutani::SplitRule;
  return {SplitRule::make({R(1, 2), R(1, 2)}), SplitRule::make({R(1, 3), R(2, 3)}),
          SplitRule::make({R(2, 5), R(3, 5)}), SplitRule::make({R(1, 2), R(1, 4), R(1, 4)}),
          SplitRule::make({R(1, 6), R(1, 3), R(1, 2)})};
}

/// Random multiset of rationals in [0,1] with denominators up to max_den.
inline std::vector<kakutani::Ratio> random_points(std::mt19937_64& gen, std::size_t n, long max_den) {
  std::vector<kakutani::Ratio> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const long q = 1 + static_cast<long>(gen() % static_cast<unsigned long>(max_den));
    const long p = static_cast<long>(gen() % static_cast<unsigned long>(q + 1));
    pts.emplace_back(p, q);
  }
  return pts;
}

}  // namespace test
