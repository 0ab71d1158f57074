#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "vertexion/lattice.hpp"
#include "vertexion/report.hpp"
#include "vertexion/symfun.hpp"
#include "vertexion/verify.hpp"

namespace vertexion {

enum class Command { eval_w, eval_f, eval_ow, eval_of, eval_groth, verify };

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command command);

struct TriangularEvalJob {
  TriangularModel model;
  SpinConfig x;
};

struct OrdinaryEvalJob {
  OrdinaryModel model;
  SpinConfig x;
};

struct GrothendieckEvalJob {
  Partition lambda;
  GrothendieckPoint point;
};

/// Sizes default to the acceptance sweep; max_n / max_N only shrink it.
struct VerifyJob {
  std::uint64_t seed = 7;
  int trials = 5;
  std::optional<int> max_n;
  std::optional<int> max_N;
  std::string out = "verify_report.json";
  int relation_points = 100;
};

struct JobConfig {
  Command command = Command::verify;
  std::variant<VerifyJob, TriangularEvalJob, OrdinaryEvalJob, GrothendieckEvalJob> job;
};

/// Command-line flags that take precedence over the config file.
struct JobOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<int> max_n;
  std::optional<int> max_N;
  std::optional<std::string> out;
};

/*
 * Builds a job from a parsed config document (null when no file was given).
 * Unknown keys, wrong types and malformed scalars throw ConfigError carrying
 * the JSON pointer of the field. Scalars are "p/q" strings or JSON integers.
 */
JobConfig parse_job_config(Command command, const nlohmann::json& document, const JobOverrides& overrides = {});

/// Reads and parses a config file; unreadable or non-JSON input is a ConfigError.
nlohmann::json load_config_file(const std::string& path);

/// The full verification plan: every suite at its default sizes, clipped by max_n / max_N.
std::vector<CheckReport> run_verify_plan(const VerifyJob& job, const VerifyOptions& options = {});

/// Sibling of the JSON report path with a .csv extension.
std::string csv_path_for(const std::string& json_path);

/*
 * Executes a job, writing results to `out` and diagnostics to `err`.
 * Returns 0 on success, 1 when any check failed, 2 on a configuration or
 * evaluation error.
 */
int run_job(const JobConfig& config, std::ostream& out, std::ostream& err);

}  // namespace vertexion
