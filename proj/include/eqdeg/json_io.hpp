#pragma once

// JSON forms of the reports. DegreeReport follows the published schema:
// {"degree", "seed", "coefficient_bound", "field", "prime", "trials":
// [{"result", "count"}], "agreement_ratio"}.

#include <json.hpp>

#include <string>
#include <vector>

#include "eqdeg/bezout.hpp"
#include "eqdeg/bezout_harness.hpp"
#include "eqdeg/degree.hpp"
#include "eqdeg/hilbert.hpp"

namespace eqdeg {

template <class Field>
nlohmann::ordered_json field_json_prime(const Field& field) {
  auto p = field.prime();
  return p ? nlohmann::ordered_json(*p) : nlohmann::ordered_json(nullptr);
}

template <class Field>
nlohmann::ordered_json to_json(const DegreeReport<Field>& report) {
  nlohmann::ordered_json trials = nlohmann::ordered_json::array();
  for (const auto& t : report.trials) {
    nlohmann::ordered_json trial;
    trial["result"] = t.succeeded() ? "count" : "not_zero_dimensional";
    trial["count"] = t.succeeded() ? nlohmann::ordered_json(*t.count) : nlohmann::ordered_json(nullptr);
    trials.push_back(trial);
  }
  nlohmann::ordered_json j;
  j["degree"] = report.degree;
  j["seed"] = report.seed;
  j["coefficient_bound"] = report.coefficient_bound;
  j["field"] = std::string(report.field.name());
  j["prime"] = field_json_prime(report.field);
  j["trials"] = trials;
  j["agreement_ratio"] = report.agreement_ratio.get_str();
  return j;
}

inline nlohmann::ordered_json to_json(const SequenceCheckReport& report) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& s : report.steps) {
    nlohmann::ordered_json step;
    step["index"] = s.index;
    step["dimension"] = s.dimension ? nlohmann::ordered_json(*s.dimension) : nlohmann::ordered_json(nullptr);
    step["zero_divisor"] = s.zero_divisor;
    step["unit_ideal"] = s.unit_ideal;
    steps.push_back(step);
  }
  nlohmann::ordered_json j;
  j["kind"] = report.kind == SequenceKind::Secant ? "secant" : "regular";
  j["ok"] = report.ok;
  j["failing_index"] = report.failing_index ? nlohmann::ordered_json(*report.failing_index) : nlohmann::ordered_json(nullptr);
  j["steps"] = steps;
  return j;
}

template <class Field>
nlohmann::ordered_json to_json(const BezoutCheckReport<Field>& report) {
  nlohmann::ordered_json j;
  j["lhs"] = report.lhs;
  j["rhs"] = report.rhs;
  j["holds"] = report.holds;
  j["regularity"] = to_json(report.regularity);
  return j;
}

inline nlohmann::ordered_json to_json(const MasserWustholzReport& report) {
  nlohmann::ordered_json components = nlohmann::ordered_json::array();
  for (const auto& c : report.components) {
    components.push_back({{"height", c.height}, {"degree", c.degree}, {"bound", c.bound}, {"holds", c.holds}});
  }
  nlohmann::ordered_json j;
  j["components"] = components;
  j["total_degree"] = report.total_degree;
  j["total_bound"] = report.total_bound;
  j["holds"] = report.holds;
  return j;
}

inline nlohmann::ordered_json to_json(const OracleResult& result) {
  nlohmann::ordered_json j;
  j["dimension"] = result.affine_dimension;
  j["degree"] = result.degree;
  j["numerator"] = result.hilbert.numerator;
  j["reduced_numerator"] = result.hilbert.reduced_numerator;
  return j;
}

template <class Field>
std::vector<std::string> to_strings(const std::vector<Polynomial<Field>>& polys, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.to_string(names));
  return out;
}

/// One harness line: {ideal, sequence, lhs, rhs, holds, regularity}.
inline nlohmann::ordered_json to_json(const HarnessRecord& record) {
  const auto& names = record.instance.ideal.var_names();
  nlohmann::ordered_json j;
  j["ideal"] = {{"vars", names},
                {"generators", to_strings(record.instance.ideal.generators(), names)},
                {"dim", record.instance.dimension}};
  j["sequence"] = to_strings(record.instance.sequence, names);
  j["lhs"] = record.report.lhs;
  j["rhs"] = record.report.rhs;
  j["holds"] = record.report.holds;
  j["regularity"] = to_json(record.report.regularity);
  return j;
}

}  // namespace eqdeg
