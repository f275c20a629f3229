#include "kakutani/engine.hpp"

#include <string>

namespace kakutani {

RefinementEngine::RefinementEngine(SplitRule rule, const Partition& start, Limits limits)
    : rule_(std::move(rule)), limits_(limits) {
  const auto& t = start.breakpoints();
  count_ = start.interval_count();
  if (count_ > limits_.max_intervals || limits_.max_intervals >= kEnd)
    throw Error(ErrorCode::ResourceLimit, "start partition exceeds the interval cap");
  nodes_.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i) {
    nodes_.push_back({t[i], i + 1 < count_ ? static_cast<std::uint32_t>(i + 1) : kEnd});
    classes_[t[i + 1] - t[i]].push_back(static_cast<std::uint32_t>(i));
  }
}

std::size_t RefinementEngine::next_count() const {
  return count_ + (rule_.size() - 1) * classes_.begin()->second.size();
}

void RefinementEngine::step() {
  const std::size_t grown = next_count();
  if (grown > limits_.max_intervals)
    throw Error(ErrorCode::ResourceLimit, "step " + std::to_string(steps_ + 1) + " needs " +
                                              std::to_string(grown) + " intervals, cap is " +
                                              std::to_string(limits_.max_intervals));

  auto top = classes_.extract(classes_.begin());
  const Ratio& len = top.key();
  const std::vector<std::uint32_t>& members = top.mapped();
  const std::size_t k = rule_.size();
  const auto& cuts = rule_.cuts();

  // Child i of every member lands in the same class, so each class is looked up once.
  std::vector<std::vector<std::uint32_t>*> child_class(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto& bucket = classes_[len * rule_.ratio(i)];
    bucket.reserve(bucket.size() + members.size());
    child_class[i] = &bucket;
  }
  std::vector<Ratio> offsets(k);
  for (std::size_t i = 1; i < k; ++i) offsets[i] = len * cuts[i];

  nodes_.reserve(nodes_.size() + members.size() * (k - 1));
  for (std::uint32_t slot : members) {
    child_class[0]->push_back(slot);
    std::uint32_t prev = slot;
    const std::uint32_t tail = nodes_[slot].next;
    for (std::size_t i = 1; i < k; ++i) {
      const auto id = static_cast<std::uint32_t>(nodes_.size());
      nodes_.push_back({nodes_[slot].left + offsets[i], tail});
      nodes_[prev].next = id;
      child_class[i]->push_back(id);
      prev = id;
    }
  }
  count_ = grown;
  ++steps_;
}

StepStats RefinementEngine::stats() const {
  return {steps_, Integer(static_cast<unsigned long>(count_)), classes_.rbegin()->first, classes_.begin()->first};
}

Partition RefinementEngine::partition() const {
  std::vector<Ratio> t;
  t.reserve(count_ + 1);
  for (std::uint32_t id = 0; id != kEnd; id = nodes_[id].next) t.push_back(nodes_[id].left);
  t.emplace_back(1);
  return Partition(Partition::Unchecked{}, std::move(t));
}

PointSet RefinementEngine::points(PointConvention convention) const {
  return points_of(partition(), convention);
}

LengthSpectrum::LengthSpectrum(SplitRule rule, const Partition& start)
    : rule_(std::move(rule)), per_origin_(start.interval_count(), Integer(1)) {
  const std::size_t origins = start.interval_count();
  for (std::size_t i = 0; i < origins; ++i) {
    auto& counts = classes_[start.length(i)];
    counts.resize(origins);
    counts[i] += 1;
  }
  total_ = static_cast<unsigned long>(origins);
}

void LengthSpectrum::step() {
  auto top = classes_.extract(classes_.begin());
  const Ratio& len = top.key();
  const std::vector<Integer>& counts = top.mapped();
  for (std::size_t i = 0; i < rule_.size(); ++i) {
    auto& bucket = classes_[len * rule_.ratio(i)];
    if (bucket.empty()) bucket.resize(counts.size());
    for (std::size_t o = 0; o < counts.size(); ++o) bucket[o] += counts[o];
  }
  const unsigned long extra = rule_.size() - 1;
  for (std::size_t o = 0; o < counts.size(); ++o) {
    per_origin_[o] += counts[o] * extra;
    total_ += counts[o] * extra;
  }
  ++steps_;
}

StepStats LengthSpectrum::stats() const {
  return {steps_, total_, classes_.rbegin()->first, classes_.begin()->first};
}

RunResult run(const SplitRule& rule, std::size_t steps, const Limits& limits) {
  RefinementEngine engine(rule, Partition(), limits);
  std::vector<StepStats> stats;
  stats.reserve(steps);
  for (std::size_t n = 0; n < steps; ++n) {
    engine.step();
    stats.push_back(engine.stats());
  }
  return {engine.partition(), std::move(stats)};
}

std::vector<StepStats> spectrum_stats(const SplitRule& rule, std::size_t steps) {
  LengthSpectrum spectrum(rule);
  std::vector<StepStats> stats;
  stats.reserve(steps);
  for (std::size_t n = 0; n < steps; ++n) {
    spectrum.step();
    stats.push_back(spectrum.stats());
  }
  return stats;
}

CountResult advance_to_count(const SplitRule& rule, std::size_t min_points, const Limits& limits) {
  if (min_points < 2) throw Error(ErrorCode::InvalidArgument, "min_points must be at least 2");
  RefinementEngine engine(rule, Partition(), limits);
  while (engine.interval_count() < min_points) engine.step();
  return {engine.partition(), engine.stats()};
}

RunResult kakutani(const Ratio& alpha, std::size_t steps, const Limits& limits) {
  return run(SplitRule::kakutani(alpha), steps, limits);
}

}  // namespace kakutani
