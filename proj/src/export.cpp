#include "kakutani/export.hpp"

#include <cstdlib>

namespace kakutani::io {

json decimal(const Ratio& r, int digits) {
  const std::string s = to_decimal(r, digits);
  return std::strtod(s.c_str(), nullptr);
}

void write_partition_csv(std::ostream& os, const Partition& p, int digits) {
  os << "i,t,t_dec\n";
  const auto& t = p.breakpoints();
  for (std::size_t i = 0; i < t.size(); ++i) os << i << ',' << t[i] << ',' << to_decimal(t[i], digits) << '\n';
}

json partition_json(const Partition& p, int digits) {
  json dec = json::array(), exact = json::array();
  for (const auto& t : p.breakpoints()) {
    dec.push_back(decimal(t, digits));
    exact.push_back(t.to_string());
  }
  return {{"intervals", p.interval_count()}, {"breakpoints", dec}, {"exact", {{"breakpoints", exact}}}};
}

void write_stats_csv(std::ostream& os, std::span<const StepStats> rows, int digits) {
  os << "n,k_n,a_n,A_n,a_n_dec,A_n_dec\n";
  for (const auto& s : rows)
    os << s.n << ',' << s.k_n.get_str() << ',' << s.a_n << ',' << s.A_n << ',' << to_decimal(s.a_n, digits) << ','
       << to_decimal(s.A_n, digits) << '\n';
}

json stats_json(std::span<const StepStats> rows, int digits) {
  json out = json::array();
  for (const auto& s : rows)
    out.push_back({{"n", s.n},
                   {"k_n", s.k_n.get_str()},
                   {"a_n", decimal(s.a_n, digits)},
                   {"A_n", decimal(s.A_n, digits)},
                   {"exact", {{"a_n", s.a_n.to_string()}, {"A_n", s.A_n.to_string()}}}});
  return out;
}

void write_convergence_csv(std::ostream& os, std::span<const ConvergenceRow> rows, int digits) {
  os << "n,k_n,D_extreme,D_star\n";
  for (const auto& r : rows)
    os << r.n << ',' << r.k_n << ',' << to_decimal(r.report.extreme, digits) << ','
       << to_decimal(r.report.star, digits) << '\n';
}

json convergence_json(std::span<const ConvergenceRow> rows, int digits) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"n", r.n},
                   {"k_n", r.k_n},
                   {"D_extreme", decimal(r.report.extreme, digits)},
                   {"D_star", decimal(r.report.star, digits)},
                   {"exact", {{"D_extreme", r.report.extreme.to_string()}, {"D_star", r.report.star.to_string()}}}});
  return out;
}

void write_remark22_csv(std::ostream& os, std::span<const Remark22Row> rows, int digits) {
  os << "n,nu_left\n";
  for (const auto& r : rows) os << r.n << ',' << to_decimal(r.nu_left, digits) << '\n';
}

json remark22_json(std::span<const Remark22Row> rows, int digits) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"n", r.n}, {"nu_left", decimal(r.nu_left, digits)}, {"exact", {{"nu_left", r.nu_left.to_string()}}}});
  return out;
}

void write_sequence_text(std::ostream& os, const PointSequence& seq, bool exact, int digits) {
  for (const auto& x : seq.points) os << (exact ? x.to_string() : to_decimal(x, digits)) << '\n';
}

json sequence_json(const PointSequence& seq, int digits) {
  json dec = json::array(), exact = json::array();
  for (const auto& x : seq.points) {
    dec.push_back(decimal(x, digits));
    exact.push_back(x.to_string());
  }
  json out = {{"points", dec}, {"exact", {{"points", exact}}}};
  if (!seq.block_offsets.empty()) out["block_offsets"] = seq.block_offsets;
  return out;
}

void write_prefix_csv(std::ostream& os, std::span<const PrefixRow> rows, int digits) {
  os << "N,D_extreme,D_star\n";
  for (const auto& r : rows)
    os << r.n << ',' << to_decimal(r.report.extreme, digits) << ',' << to_decimal(r.report.star, digits) << '\n';
}

json prefix_json(std::span<const PrefixRow> rows, int digits) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"N", r.n},
                   {"D_extreme", decimal(r.report.extreme, digits)},
                   {"D_star", decimal(r.report.star, digits)},
                   {"exact", {{"D_extreme", r.report.extreme.to_string()}, {"D_star", r.report.star.to_string()}}}});
  return out;
}

}  // namespace kakutani::io
