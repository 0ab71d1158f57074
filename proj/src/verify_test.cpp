#include <algorithm>

#include <gtest/gtest.h>

#include "vertexion/errors.hpp"
#include "vertexion/verify.hpp"

namespace vertexion {
namespace {

SweepSpec small_spec(int N_hi, int n_hi, int trials = 3) {
  SweepSpec spec;
  spec.N_range = {1, N_hi};
  spec.n_range = {1, n_hi};
  spec.trials_per_point = trials;
  return spec;
}

bool any_failed(const std::vector<CheckReport>& reports, std::string_view prefix) {
  return std::any_of(reports.begin(), reports.end(), [&](const CheckReport& r) {
    return !r.passed && r.check_id.starts_with(prefix) && r.witness.has_value();
  });
}

TEST(Verify, RelationsPass) {
  const auto reports = verify_algebraic_relations(20, 7);
  ASSERT_EQ(reports.size(), 3U);
  EXPECT_TRUE(all_passed(reports));
  for (const auto& r : reports) EXPECT_EQ(r.trials, 20);
}

TEST(Verify, TriangularPropertiesPassOnSmallSweep) {
  const auto reports = verify_triangular_properties(small_spec(3, 3));
  EXPECT_TRUE(all_passed(reports));
  EXPECT_TRUE(std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.check_id == "triangular.recursion"; }));
}

TEST(Verify, NonTriangularBoundaryIsCaught) {
  VerifyOptions faulty;
  faulty.fault = Fault::non_triangular_boundary;
  const auto reports = verify_triangular_properties(small_spec(3, 3, 2), faulty);
  EXPECT_TRUE(any_failed(reports, "triangular.symmetry"));
  EXPECT_TRUE(any_failed(reports, "triangular.initial-empty"));
  // with one row K meets the vacuum auxiliary spin only, so nothing can change
  for (const auto& r : reports) {
    if (r.n == 1) {
      EXPECT_TRUE(r.passed) << r.check_id;
    }
  }
  EXPECT_TRUE(any_failed(verify_algebraic_relations(5, 7, faulty), "relations.reflection"));
}

TEST(Verify, DroppedFactorialFailsExactlyWhenNExceedsM) {
  VerifyOptions faulty;
  faulty.fault = Fault::dropped_factorial;
  const auto reports = verify_triangular_closed_form(small_spec(2, 3, 2), faulty);
  for (const auto& r : reports) {
    if (r.check_id != "triangular.closed-form") continue;
    const bool factor_differs = *r.n - *r.m >= 2;
    EXPECT_EQ(r.passed, !factor_differs) << r.n.value() << ' ' << r.m.value() << ' ' << r.x.value();
  }
}

TEST(Verify, UnconstrainedSitesFailTheGate) {
  VerifyOptions faulty;
  faulty.fault = Fault::unconstrained_sites;
  const auto reports = verify_ordinary_properties(small_spec(3, 2, 2), faulty);
  EXPECT_TRUE(any_failed(reports, "ordinary.rll-gate"));
  for (const auto& r : reports) {
    if (r.check_id == "ordinary.rll-gate") {
      EXPECT_FALSE(r.passed);
    }
  }
}

TEST(Verify, OrdinaryAndGrothendieckPass) {
  const auto spec = small_spec(4, 2, 2);
  EXPECT_TRUE(all_passed(verify_ordinary_properties(spec)));
  EXPECT_TRUE(all_passed(verify_ordinary_closed_form(spec)));
  EXPECT_TRUE(all_passed(verify_grothendieck_correspondence(spec, std::nullopt)));
  EXPECT_TRUE(all_passed(verify_grothendieck_correspondence(spec, Scalar(-3, 2))));
  EXPECT_TRUE(all_passed(verify_proof_identities(spec)));
}

TEST(Verify, OutputIndependentOfThreadCount) {
  const auto spec = small_spec(3, 2, 2);
  VerifyOptions one;
  one.threads = 1;
  VerifyOptions many;
  many.threads = 6;
  EXPECT_EQ(reports_to_json_text(verify_triangular_closed_form(spec, one)),
            reports_to_json_text(verify_triangular_closed_form(spec, many)));
}

TEST(Verify, SeedChangesSampledPoints) {
  auto a = small_spec(1, 1, 1);
  auto b = a;
  b.seed = 8;
  EXPECT_NE(verify_triangular_properties(a).front().params_used, verify_triangular_properties(b).front().params_used);
}

TEST(Verify, FixedMRestrictsSweep) {
  auto spec = small_spec(3, 3, 1);
  spec.fixed_m = 1;
  for (const auto& r : verify_triangular_closed_form(spec)) EXPECT_EQ(r.m, 1);
}

TEST(Verify, InvalidSpecRejected) {
  auto spec = small_spec(2, 2);
  spec.trials_per_point = 0;
  EXPECT_THROW(verify_triangular_properties(spec), std::invalid_argument);
  spec = small_spec(2, 2);
  spec.N_range = {3, 2};
  EXPECT_THROW(verify_triangular_properties(spec), std::invalid_argument);
}

TEST(Report, JsonRoundTrip) {
  auto reports = verify_triangular_properties(small_spec(2, 2, 1));
  VerifyOptions faulty;
  faulty.fault = Fault::non_triangular_boundary;
  const auto failing = verify_triangular_properties(small_spec(2, 2, 1), faulty);
  reports.insert(reports.end(), failing.begin(), failing.end());
  EXPECT_EQ(reports_from_json_text(reports_to_json_text(reports)), reports);
}

TEST(Report, StrictParsing) {
  CheckReport r;
  r.check_id = "x";
  r.passed = true;
  r.trials = 1;
  auto j = to_json(r);
  j["extra"] = 1;
  EXPECT_THROW(report_from_json(j), ParseError);
  auto failed = to_json(r);
  failed["passed"] = false;
  EXPECT_THROW(report_from_json(failed), ParseError);
  EXPECT_THROW(reports_from_json_text("{"), ParseError);
}

TEST(Report, CsvSummary) {
  const auto csv = reports_to_csv(verify_algebraic_relations(2, 1));
  EXPECT_EQ(csv,
            "check_id,configs,trials,pass_count\n"
            "relations.reflection,1,2,1\n"
            "relations.rll,1,2,1\n"
            "relations.yang-baxter,1,2,1\n");
}

}  // namespace
}  // namespace vertexion
