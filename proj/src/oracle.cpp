#include "kakutani/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "kakutani/error.hpp"

namespace kakutani::oracle {

namespace {

struct End {
  Ratio value;
  bool plus = false;  // value+ : includes `value` when used as b, excludes it as a

  friend bool operator<(const End& x, const End& y) {
    if (x.value != y.value) return x.value < y.value;
    return !x.plus && y.plus;
  }
  friend bool operator==(const End& x, const End& y) { return x.value == y.value && x.plus == y.plus; }
};

}  // namespace

BruteDiscrepancy brute_force_discrepancy(std::span<const Ratio> points) {
  if (points.empty()) throw Error(ErrorCode::EmptySet, "empty point set");
  const Ratio one(1);
  std::vector<End> ends{{Ratio(0), false}, {one, false}};
  for (const auto& p : points) {
    ends.push_back({p, false});
    if (p < one) ends.push_back({p, true});
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());

  // below[j]: points lying strictly left of end j (left of or at, for value+).
  std::vector<long> below(ends.size());
  for (std::size_t j = 0; j < ends.size(); ++j) {
    long c = 0;
    for (const auto& p : points)
      if (ends[j].plus ? p <= ends[j].value : p < ends[j].value) ++c;
    below[j] = c;
  }

  const Ratio n(static_cast<long>(points.size()));
  BruteDiscrepancy out;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      Ratio gap = abs(Ratio(below[j] - below[i]) / n - (ends[j].value - ends[i].value));
      if (gap > out.extreme) out.extreme = gap;
      if (i == 0 && gap > out.star) out.star = gap;
    }
  }
  return out;
}

Ratio bit_reversal(std::uint64_t k) {
  std::string bits;
  for (; k; k /= 2) bits.insert(bits.begin(), static_cast<char>('0' + k % 2));
  std::reverse(bits.begin(), bits.end());
  // 0.b_0 b_1 b_2 ... in base 2
  Ratio x, w(1, 2);
  for (char b : bits) {
    if (b == '1') x += w;
    w /= Ratio(2);
  }
  return x;
}

}  // namespace kakutani::oracle
