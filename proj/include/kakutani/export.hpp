#pragma once

#include <json.hpp>

#include <ostream>
#include <span>

#include "kakutani/analysis.hpp"
#include "kakutani/engine.hpp"
#include "kakutani/sequences.hpp"

// CSV writers emit exact values as "p/q" and decimals rounded half-even to
// `digits` significant digits. JSON mirrors carry decimals as numbers and
// the exact strings under an "exact" key.
namespace kakutani::io {

using nlohmann::json;

constexpr int kDefaultDigits = 12;

/// `i,t,t_dec`
void write_partition_csv(std::ostream& os, const Partition& p, int digits = kDefaultDigits);
json partition_json(const Partition& p, int digits = kDefaultDigits);

/// `n,k_n,a_n,A_n,a_n_dec,A_n_dec`
void write_stats_csv(std::ostream& os, std::span<const StepStats> rows, int digits = kDefaultDigits);
json stats_json(std::span<const StepStats> rows, int digits = kDefaultDigits);

/// `n,k_n,D_extreme,D_star`
void write_convergence_csv(std::ostream& os, std::span<const ConvergenceRow> rows, int digits = kDefaultDigits);
json convergence_json(std::span<const ConvergenceRow> rows, int digits = kDefaultDigits);

/// `n,nu_left`
void write_remark22_csv(std::ostream& os, std::span<const Remark22Row> rows, int digits = kDefaultDigits);
json remark22_json(std::span<const Remark22Row> rows, int digits = kDefaultDigits);

/// One point per line.
void write_sequence_text(std::ostream& os, const PointSequence& seq, bool exact, int digits = kDefaultDigits);
json sequence_json(const PointSequence& seq, int digits = kDefaultDigits);

/// `N,D_extreme,D_star`
void write_prefix_csv(std::ostream& os, std::span<const PrefixRow> rows, int digits = kDefaultDigits);
json prefix_json(std::span<const PrefixRow> rows, int digits = kDefaultDigits);

/// Decimal rendering as a JSON number.
json decimal(const Ratio& r, int digits = kDefaultDigits);

}  // namespace kakutani::io
