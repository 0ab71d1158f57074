#include "vertexion/report.hpp"

#include <algorithm>
#include <set>
#include <map>
#include <sstream>
#include <tuple>

#include "vertexion/errors.hpp"

namespace vertexion {

namespace {

using ojson = nlohmann::ordered_json;

template <typename T>
ojson optional_json(const std::optional<T>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

template <typename T>
std::optional<T> optional_from(const ojson& j, const char* key) {
  const ojson& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

}  // namespace

bool report_order(const CheckReport& a, const CheckReport& b) {
  return std::tie(a.check_id, a.N, a.n, a.m, a.x) < std::tie(b.check_id, b.N, b.n, b.m, b.x);
}

ojson to_json(const CheckReport& report) {
  ojson j;
  j["check_id"] = report.check_id;
  j["N"] = optional_json(report.N);
  j["n"] = optional_json(report.n);
  j["m"] = optional_json(report.m);
  j["x"] = optional_json(report.x);
  j["params_used"] = report.params_used;
  j["passed"] = report.passed;
  j["witness"] = report.witness ? ojson{{"lhs", report.witness->lhs}, {"rhs", report.witness->rhs}} : ojson(nullptr);
  j["trials"] = report.trials;
  j["note"] = report.note;
  return j;
}

CheckReport report_from_json(const ojson& j) {
  static const std::set<std::string> kKeys{"check_id", "N", "n", "m", "x", "params_used", "passed", "witness", "trials", "note"};
  if (!j.is_object()) throw ParseError("report must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!kKeys.contains(key)) throw ParseError("unknown report field \"" + key + "\"");
  }
  try {
    CheckReport r;
    r.check_id = j.at("check_id").get<std::string>();
    r.N = optional_from<int>(j, "N");
    r.n = optional_from<int>(j, "n");
    r.m = optional_from<int>(j, "m");
    r.x = optional_from<std::string>(j, "x");
    r.params_used = j.at("params_used");
    r.passed = j.at("passed").get<bool>();
    const ojson& w = j.at("witness");
    if (!w.is_null()) r.witness = Witness{w.at("lhs").get<std::string>(), w.at("rhs").get<std::string>()};
    r.trials = j.at("trials").get<int>();
    r.note = j.at("note").get<std::string>();
    if (!r.passed && !r.witness) throw ParseError("failed report without witness");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string reports_to_json_text(const std::vector<CheckReport>& reports) {
  ojson array = ojson::array();
  for (const auto& r : reports) array.push_back(to_json(r));
  return array.dump(2) + "\n";
}

std::vector<CheckReport> reports_from_json_text(const std::string& text) {
  ojson array;
  try {
    array = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report file is not JSON: ") + e.what());
  }
  if (!array.is_array()) throw ParseError("report file must hold a JSON array");
  std::vector<CheckReport> out;
  for (const auto& item : array) out.push_back(report_from_json(item));
  return out;
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
  struct Tally {
    int configs = 0;
    long trials = 0;
    int pass_count = 0;
  };
  std::map<std::string, Tally> tallies;
  for (const auto& r : reports) {
    Tally& t = tallies[r.check_id];
    ++t.configs;
    t.trials += r.trials;
    if (r.passed) ++t.pass_count;
  }
  std::ostringstream os;
  os << "check_id,configs,trials,pass_count\n";
  for (const auto& [id, t] : tallies) os << id << ',' << t.configs << ',' << t.trials << ',' << t.pass_count << '\n';
  return os.str();
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

}  // namespace vertexion
