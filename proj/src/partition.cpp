#include "kakutani/partition.hpp"

#include <algorithm>
#include <string>

namespace kakutani {

SplitRule SplitRule::make(std::vector<Ratio> ratios) {
  if (ratios.size() < 2)
    throw Error(ErrorCode::Trivial, "a splitting rule needs at least two parts");
  Ratio sum;
  for (const auto& a : ratios) {
    if (a.sign() <= 0 || a >= Ratio(1))
      throw Error(ErrorCode::NonPositivePart, "part " + a.to_string() + " is not in (0,1)");
    sum += a;
  }
  if (sum != Ratio(1)) throw Error(ErrorCode::SumNotOne, "parts sum to " + sum.to_string());

  SplitRule rule;
  rule.cuts_.reserve(ratios.size() + 1);
  rule.cuts_.emplace_back(0);
  Ratio acc;
  for (const auto& a : ratios) {
    acc += a;
    rule.cuts_.push_back(acc);
  }
  rule.min_ = *std::min_element(ratios.begin(), ratios.end());
  rule.max_ = *std::max_element(ratios.begin(), ratios.end());
  rule.ratios_ = std::move(ratios);
  return rule;
}

SplitRule SplitRule::parse(std::string_view literal) {
  std::vector<Ratio> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = literal.find(',', pos);
    std::string_view item = literal.substr(pos, comma == std::string_view::npos ? literal.npos : comma - pos);
    try {
      parts.push_back(Ratio::parse(item));
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, "rule item " + std::to_string(parts.size() + 1) + " at offset " +
                                        std::to_string(pos) + ": '" + std::string(item) + "'");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return make(std::move(parts));
}

SplitRule SplitRule::kakutani(const Ratio& alpha) {
  if (alpha.sign() <= 0 || alpha >= Ratio(1))
    throw Error(ErrorCode::NonPositivePart, "alpha " + alpha.to_string() + " is not in (0,1)");
  return make({alpha, Ratio(1) - alpha});
}

std::string SplitRule::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < ratios_.size(); ++i) {
    if (i) s += ',';
    s += ratios_[i].to_string();
  }
  return s;
}

Interval Interval::make(Ratio lo, Ratio hi) {
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "empty interval [" + lo.to_string() + ", " + hi.to_string() + "]");
  return {std::move(lo), std::move(hi)};
}

Partition::Partition() : t_{Ratio(0), Ratio(1)} {}

Partition Partition::from_breakpoints(std::vector<Ratio> t) {
  if (t.size() < 2 || t.front() != Ratio(0) || t.back() != Ratio(1))
    throw Error(ErrorCode::InvalidArgument, "breakpoints must start at 0 and end at 1");
  for (std::size_t i = 1; i < t.size(); ++i)
    if (!(t[i - 1] < t[i])) throw Error(ErrorCode::InvalidArgument, "breakpoints must be strictly increasing");
  return Partition(Unchecked{}, std::move(t));
}

Ratio Partition::max_length() const {
  Ratio best = length(0);
  for (std::size_t i = 1; i < interval_count(); ++i) best = std::max(best, length(i));
  return best;
}

Ratio Partition::min_length() const {
  Ratio best = length(0);
  for (std::size_t i = 1; i < interval_count(); ++i) best = std::min(best, length(i));
  return best;
}

bool Partition::subdivides(const Interval& j) const {
  return std::binary_search(t_.begin(), t_.end(), j.lo) && std::binary_search(t_.begin(), t_.end(), j.hi);
}

std::size_t Partition::intervals_within(const Interval& j) const {
  auto lo = std::lower_bound(t_.begin(), t_.end(), j.lo);
  auto hi = std::upper_bound(t_.begin(), t_.end(), j.hi);
  auto n = std::distance(lo, hi);
  return n >= 2 ? static_cast<std::size_t>(n - 1) : 0;
}

PointConvention parse_convention(std::string_view name) {
  if (name == "right") return PointConvention::RightEndpoints;
  if (name == "all") return PointConvention::AllBreakpoints;
  if (name == "left") return PointConvention::LeftEndpoints;
  throw Error(ErrorCode::Parse, "unknown point convention '" + std::string(name) + "'");
}

std::string_view to_string(PointConvention c) {
  switch (c) {
    case PointConvention::RightEndpoints: return "right";
    case PointConvention::AllBreakpoints: return "all";
    case PointConvention::LeftEndpoints: return "left";
  }
  return "right";
}

namespace {

// Appends the interior cuts of [y0, y0 + len] (everything except y0 itself).
void append_children(const SplitRule& rule, const Ratio& y0, const Ratio& len, std::vector<Ratio>& out) {
  const auto& cuts = rule.cuts();
  for (std::size_t i = 1; i + 1 < cuts.size(); ++i) out.push_back(y0 + len * cuts[i]);
}

std::size_t refined_count(const SplitRule& rule, const Partition& p) {
  const Ratio top = p.max_length();
  std::size_t maximal = 0;
  for (std::size_t i = 0; i < p.interval_count(); ++i)
    if (p.length(i) == top) ++maximal;
  return p.interval_count() + (rule.size() - 1) * maximal;
}

}  // namespace

Partition rho_refine(const SplitRule& rule, const Partition& p) {
  const Ratio top = p.max_length();
  const auto& t = p.breakpoints();
  std::vector<Ratio> out;
  out.reserve(refined_count(rule, p) + 1);
  out.push_back(t.front());
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    Ratio len = t[i + 1] - t[i];
    if (len == top) append_children(rule, t[i], len, out);
    out.push_back(t[i + 1]);
  }
  return Partition(Partition::Unchecked{}, std::move(out));
}

Partition refine_from(const SplitRule& rule, const Partition& start, std::size_t n, const Limits& limits) {
  Partition p = start;
  for (std::size_t step = 0; step < n; ++step) {
    if (refined_count(rule, p) > limits.max_intervals)
      throw Error(ErrorCode::ResourceLimit, "step " + std::to_string(step + 1) + " exceeds " +
                                                std::to_string(limits.max_intervals) + " intervals");
    p = rho_refine(rule, p);
  }
  return p;
}

Partition iterate(const SplitRule& rule, std::size_t n, const Limits& limits) {
  return refine_from(rule, Partition(), n, limits);
}

Partition full_subdivide(const SplitRule& rule, std::size_t n, const Limits& limits) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "full_subdivide needs n >= 1");
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (count > limits.max_intervals / rule.size())
      throw Error(ErrorCode::ResourceLimit, std::to_string(rule.size()) + "^" + std::to_string(n) +
                                                " intervals exceed the cap");
    count *= rule.size();
  }
  std::vector<Ratio> t{Ratio(0), Ratio(1)};
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<Ratio> next;
    next.reserve((t.size() - 1) * rule.size() + 1);
    next.push_back(t.front());
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      append_children(rule, t[i], t[i + 1] - t[i], next);
      next.push_back(t[i + 1]);
    }
    t = std::move(next);
  }
  return Partition(Partition::Unchecked{}, std::move(t));
}

Interval interval_address(const SplitRule& rule, std::span<const std::size_t> indices) {
  if (indices.empty()) throw Error(ErrorCode::IndexOutOfRange, "empty interval address");
  Ratio y0(0), y1(1);
  const auto& cuts = rule.cuts();
  for (std::size_t pos = 0; pos < indices.size(); ++pos) {
    const std::size_t i = indices[pos];
    if (i < 1 || i > rule.size())
      throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(i) + " at position " +
                                                  std::to_string(pos + 1) + " not in 1.." +
                                                  std::to_string(rule.size()));
    const Ratio len = y1 - y0;
    Ratio lo = y0 + len * cuts[i - 1];
    y1 = y0 + len * cuts[i];
    y0 = std::move(lo);
  }
  return {y0, y1};
}

PointSet points_of(const Partition& p, PointConvention convention) {
  const auto& t = p.breakpoints();
  PointSet out;
  out.convention = convention;
  switch (convention) {
    case PointConvention::RightEndpoints: out.points.assign(t.begin() + 1, t.end()); break;
    case PointConvention::AllBreakpoints: out.points = t; break;
    case PointConvention::LeftEndpoints: out.points.assign(t.begin(), t.end() - 1); break;
  }
  return out;
}

}  // namespace kakutani
