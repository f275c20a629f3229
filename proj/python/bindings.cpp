#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "kakutani/analysis.hpp"
#include "kakutani/engine.hpp"
#include "kakutani/sequences.hpp"
#include "kakutani/verify.hpp"

namespace py = pybind11;
using namespace kakutani;

// Rationals cross the boundary as "p/q" strings; the Python layer turns
// them into fractions.Fraction.
namespace {

std::vector<Ratio> ratios(const std::vector<std::string>& items) {
  std::vector<Ratio> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(Ratio::parse(s));
  return out;
}

std::vector<std::string> strings(const std::vector<Ratio>& items) {
  std::vector<std::string> out;
  out.reserve(items.size());
  for (const auto& r : items) out.push_back(r.to_string());
  return out;
}

SplitRule rule_of(const std::vector<std::string>& parts) { return SplitRule::make(ratios(parts)); }

Limits limits_of(std::size_t cap) { return Limits{cap}; }

py::tuple sequence_tuple(const PointSequence& s) { return py::make_tuple(strings(s.points), s.block_offsets); }

}  // namespace

PYBIND11_MODULE(_kakutani, m) {
  m.doc() = "Exact rho-refinements of [0,1], discrepancy and reorderings";

  static py::exception<Error> error_type(m, "KakutaniError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error_type.ptr(), e.what());
    }
  });

  const std::size_t default_cap = Limits{}.max_intervals;

  m.def(
      "refine",
      [](const std::vector<std::string>& rule, std::size_t steps, std::optional<std::vector<std::string>> start,
         bool full, std::size_t cap) {
        const SplitRule r = rule_of(rule);
        if (full) return strings(full_subdivide(r, steps, limits_of(cap)).breakpoints());
        const Partition from = start ? Partition::from_breakpoints(ratios(*start)) : Partition();
        py::gil_scoped_release release;
        return strings(refine_from(r, from, steps, limits_of(cap)).breakpoints());
      },
      py::arg("rule"), py::arg("steps"), py::arg("start") = py::none(), py::arg("full") = false,
      py::arg("max_intervals") = default_cap);

  m.def(
      "stats",
      [](const std::vector<std::string>& rule, std::size_t steps) {
        std::vector<py::tuple> rows;
        for (const auto& s : spectrum_stats(rule_of(rule), steps))
          rows.push_back(py::make_tuple(s.n, s.k_n.get_str(), s.a_n.to_string(), s.A_n.to_string()));
        return rows;
      },
      py::arg("rule"), py::arg("steps"));

  m.def(
      "interval_address",
      [](const std::vector<std::string>& rule, const std::vector<std::size_t>& word) {
        const Interval j = interval_address(rule_of(rule), word);
        return py::make_tuple(j.lo.to_string(), j.hi.to_string());
      },
      py::arg("rule"), py::arg("word"));

  m.def(
      "discrepancy",
      [](const std::vector<std::string>& points) {
        const auto r = discrepancy(ratios(points));
        return py::make_tuple(r.extreme.to_string(), r.star.to_string());
      },
      py::arg("points"));

  m.def(
      "convergence",
      [](const std::vector<std::string>& rule, const std::vector<std::size_t>& checkpoints, const std::string& conv,
         std::size_t cap) {
        std::vector<py::tuple> rows;
        for (const auto& row : convergence_report(rule_of(rule), checkpoints, parse_convention(conv), limits_of(cap)))
          rows.push_back(py::make_tuple(row.n, row.k_n, row.report.extreme.to_string(), row.report.star.to_string()));
        return rows;
      },
      py::arg("rule"), py::arg("checkpoints"), py::arg("convention") = "right", py::arg("max_intervals") = default_cap);

  m.def(
      "random_reordering",
      [](const std::vector<std::string>& rule, std::size_t blocks, std::uint64_t seed, const std::string& conv,
         std::size_t cap) {
        return sequence_tuple(
            sequential_random_reordering(rule_of(rule), blocks, Seed{seed}, parse_convention(conv), limits_of(cap)));
      },
      py::arg("rule"), py::arg("blocks"), py::arg("seed"), py::arg("convention") = "right",
      py::arg("max_intervals") = default_cap);

  m.def(
      "lexicographic_reordering",
      [](const std::vector<std::string>& rule, std::size_t blocks, const std::string& conv, std::size_t cap) {
        return sequence_tuple(lexicographic_reordering(rule_of(rule), blocks, parse_convention(conv), limits_of(cap)));
      },
      py::arg("rule"), py::arg("blocks"), py::arg("convention") = "left", py::arg("max_intervals") = default_cap);

  m.def(
      "van_der_corput", [](std::size_t count) { return strings(van_der_corput(count).points); }, py::arg("count"));

  m.def(
      "remark22",
      [](std::size_t n_max) {
        std::vector<py::tuple> rows;
        for (const auto& r : remark22_experiment(n_max)) rows.push_back(py::make_tuple(r.n, r.nu_left.to_string()));
        return rows;
      },
      py::arg("n_max") = 400);

  m.def("suite_names", &verify::suite_names);
  m.def(
      "verify",
      [](const std::string& name) {
        if (!verify::has_suite(name)) throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
        verify::SuiteResult r;
        {
          py::gil_scoped_release release;
          r = verify::run_suite(name);
        }
        py::dict d;
        d["name"] = r.name;
        d["passed"] = r.passed && r.within_budget();
        d["seconds"] = r.seconds;
        d["details"] = r.details;
        return d;
      },
      py::arg("name"));
}
