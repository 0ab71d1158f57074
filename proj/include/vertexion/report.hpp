#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace vertexion {

/// Mismatching pair from a failed check (values in "p/q" form, or an error message on lhs).
struct Witness {
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/*
 * Outcome of one check on one configuration.
 *
 * `trials` counts the exact comparisons performed; a passing report has all
 * of them equal. A failing report always carries a witness, and
 * `params_used` is then the failing point (otherwise the first point).
 */
struct CheckReport {
  std::string check_id;
  std::optional<int> N;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<std::string> x;  ///< down-spin positions joined with '-'
  nlohmann::ordered_json params_used = nlohmann::ordered_json::object();
  bool passed = false;
  std::optional<Witness> witness;
  int trials = 0;
  std::string note;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// Canonical order: check_id, then N, n, m, x.
bool report_order(const CheckReport& a, const CheckReport& b);

nlohmann::ordered_json to_json(const CheckReport& report);
/// Strict inverse of to_json; throws ParseError on unknown or missing fields.
CheckReport report_from_json(const nlohmann::ordered_json& j);

std::string reports_to_json_text(const std::vector<CheckReport>& reports);
std::vector<CheckReport> reports_from_json_text(const std::string& text);

/// One row per check_id: check_id,configs,trials,pass_count
std::string reports_to_csv(const std::vector<CheckReport>& reports);

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace vertexion
