#include <sstream>

#include <gtest/gtest.h>

#include "vertexion/errors.hpp"
#include "vertexion/jobs.hpp"

namespace vertexion {
namespace {

using nlohmann::json;

const char* kOrdinaryConfig = R"({
  "t": "1/2", "u": ["4"], "w": ["9"], "x": [1],
  "sites": [{"a": "1", "b": "1", "c": "3/2", "d": "1", "e": "-3/4", "f": "-3/2"}]
})";

std::string run(Command command, const json& doc, int expected_code) {
  std::ostringstream out, err;
  const int code = run_job(parse_job_config(command, doc), out, err);
  EXPECT_EQ(code, expected_code) << err.str();
  return out.str();
}

TEST(Jobs, CommandNamesRoundTrip) {
  for (const char* name : {"eval-w", "eval-f", "eval-ow", "eval-of", "eval-groth", "verify"}) {
    const auto command = parse_command(name);
    ASSERT_TRUE(command.has_value());
    EXPECT_EQ(command_name(*command), name);
  }
  EXPECT_FALSE(parse_command("eval").has_value());
}

TEST(Jobs, EvalOfSingleSite) { EXPECT_EQ(run(Command::eval_of, json::parse(kOrdinaryConfig), 0), "3\n"); }

TEST(Jobs, EvalOwMatchesEvalOf) { EXPECT_EQ(run(Command::eval_ow, json::parse(kOrdinaryConfig), 0), "3\n"); }

TEST(Jobs, EvalWPrintsBothSides) {
  const json doc = json::parse(R"({"t": "2", "A": "1", "B": "1", "u": ["3"], "w": ["5"], "x": [1]})");
  EXPECT_EQ(run(Command::eval_f, doc, 0), "oracle=-8 formula=-8\n");
}

TEST(Jobs, EvalWBeyondClosedForm) {
  const json doc = json::parse(R"({"t": "2", "A": "1", "B": "3", "u": ["3"], "w": ["5", "7"], "x": [1, 2]})");
  EXPECT_TRUE(run(Command::eval_w, doc, 0).ends_with("formula=n/a\n"));
}

TEST(Jobs, EvalGrothendieck) {
  const json doc = json::parse(R"({"beta": "5", "z": ["3/7"], "lambda": [2]})");
  EXPECT_EQ(run(Command::eval_groth, doc, 0), "9/49\n");
}

TEST(Jobs, DecimalScalarRejectedWithPointer) {
  json doc = json::parse(kOrdinaryConfig);
  doc["sites"][0]["c"] = "1.5";
  try {
    parse_job_config(Command::eval_of, doc);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.pointer(), "/sites/0/c");
  }
}

TEST(Jobs, SchemaViolations) {
  json unknown = json::parse(kOrdinaryConfig);
  unknown["colour"] = "red";
  EXPECT_THROW(parse_job_config(Command::eval_of, unknown), ConfigError);

  json missing = json::parse(kOrdinaryConfig);
  missing.erase("t");
  EXPECT_THROW(parse_job_config(Command::eval_of, missing), ConfigError);

  json wrong_command = json::parse(kOrdinaryConfig);
  wrong_command["command"] = "eval-w";
  EXPECT_THROW(parse_job_config(Command::eval_of, wrong_command), ConfigError);

  json violating = json::parse(kOrdinaryConfig);
  violating["sites"][0]["f"] = "1";
  EXPECT_THROW(parse_job_config(Command::eval_of, violating), ConfigError);

  json float_scalar = json::parse(kOrdinaryConfig);
  float_scalar["t"] = 0.5;
  EXPECT_THROW(parse_job_config(Command::eval_of, float_scalar), ConfigError);

  EXPECT_THROW(parse_job_config(Command::verify, json::parse(R"({"trials": 0})")), ConfigError);
  EXPECT_THROW(parse_job_config(Command::eval_w, json()), ConfigError);
}

TEST(Jobs, VerifyOverridesBeatConfig) {
  JobOverrides overrides;
  overrides.seed = 11;
  overrides.max_n = 2;
  const auto config = parse_job_config(Command::verify, json::parse(R"({"seed": 3, "trials": 2, "out": "a.json"})"), overrides);
  const auto& job = std::get<VerifyJob>(config.job);
  EXPECT_EQ(job.seed, 11U);
  EXPECT_EQ(job.trials, 2);
  EXPECT_EQ(job.max_n, 2);
  EXPECT_EQ(job.out, "a.json");
}

TEST(Jobs, CsvPathSitsNextToReport) {
  EXPECT_EQ(csv_path_for("out/report.json"), "out/report.csv");
  EXPECT_EQ(csv_path_for("dir.d/report"), "dir.d/report.csv");
}

}  // namespace
}  // namespace vertexion
