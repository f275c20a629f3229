#include "kakutani/approx.hpp"

#include <algorithm>
#include <string>

namespace kakutani::approx {

ApproxRule ApproxRule::make(std::vector<Real> ratios, const Real& tolerance) {
  if (ratios.size() < 2) throw Error(ErrorCode::Trivial, "a splitting rule needs at least two parts");
  Real sum = 0;
  for (const auto& a : ratios) {
    if (a <= 0 || a >= 1) throw Error(ErrorCode::NonPositivePart, "part " + a.str() + " is not in (0,1)");
    sum += a;
  }
  if (abs(sum - 1) > tolerance) throw Error(ErrorCode::SumNotOne, "parts sum to " + sum.str());
  ApproxRule rule;
  rule.cuts_.push_back(0);
  Real acc = 0;
  for (const auto& a : ratios) {
    acc += a;
    rule.cuts_.push_back(acc);
  }
  rule.cuts_.back() = 1;
  rule.min_ = *std::min_element(ratios.begin(), ratios.end());
  rule.ratios_ = std::move(ratios);
  return rule;
}

ApproxRule ApproxRule::parse(std::string_view literal, const Real& tolerance) {
  std::vector<Real> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = literal.find(',', pos);
    std::string item(literal.substr(pos, comma == std::string_view::npos ? literal.npos : comma - pos));
    try {
      parts.emplace_back(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "rule item " + std::to_string(parts.size() + 1) + " at offset " +
                                        std::to_string(pos) + ": '" + item + "'");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return make(std::move(parts), tolerance);
}

ApproxEngine::ApproxEngine(ApproxRule rule, const Real& tolerance, Limits limits)
    : rule_(std::move(rule)), limits_(limits), classes_(Descending{tolerance}) {
  nodes_.push_back({Real(0), Real(1), kEnd});
  classes_[Real(1)].push_back(0);
}

void ApproxEngine::step() {
  auto top = classes_.extract(classes_.begin());
  const std::vector<std::uint32_t>& members = top.mapped();
  const std::size_t k = rule_.size();
  const std::size_t grown = count_ + (k - 1) * members.size();
  if (grown > limits_.max_intervals) {
    classes_.insert(std::move(top));
    throw Error(ErrorCode::ResourceLimit, "step " + std::to_string(steps_ + 1) + " exceeds the interval cap");
  }
  for (std::uint32_t slot : members) {
    const Real y0 = nodes_[slot].left;
    const Real len = nodes_[slot].length;
    const std::uint32_t tail = nodes_[slot].next;
    nodes_[slot].length = len * rule_.ratios()[0];
    classes_[nodes_[slot].length].push_back(slot);
    std::uint32_t prev = slot;
    for (std::size_t i = 1; i < k; ++i) {
      const auto id = static_cast<std::uint32_t>(nodes_.size());
      nodes_.push_back({y0 + len * rule_.cuts()[i], len * rule_.ratios()[i], tail});
      nodes_[prev].next = id;
      classes_[nodes_[id].length].push_back(id);
      prev = id;
    }
  }
  count_ = grown;
  ++steps_;
}

ApproxStats ApproxEngine::stats() const {
  return {steps_, count_, classes_.rbegin()->first, classes_.begin()->first};
}

std::vector<Real> ApproxEngine::breakpoints() const {
  std::vector<Real> t;
  t.reserve(count_ + 1);
  for (std::uint32_t id = 0; id != kEnd; id = nodes_[id].next) t.push_back(nodes_[id].left);
  t.emplace_back(1);
  return t;
}

}  // namespace kakutani::approx
