// Wire formats and command outcomes: the JSON field-document parser and its
// canonical serializer, the FNV-1a digest, run-report shape, and the exit
// code contract of the library-level commands.

#include <gtest/gtest.h>

#include <json.hpp>
#include <string>

#include "polarity/commands.hpp"
#include "polarity/field_json.hpp"
#include "polarity/report.hpp"

namespace polarity {
namespace {

const char* kSampleDocument = R"({
  "fields": {
    "sigma": {
      "rank": "tensor",
      "components": [
        [[{"coeff": "1/2", "exps": [0, 1, 0]}], [], []],
        [[], [], [{"coeff": "-3", "exps": [1, 0, 0]}]],
        [[], [], []]
      ]
    }
  }
})";

TEST(FieldDocument, ParsesTensorEntries) {
  const FieldDocument doc = parse_field_document(kSampleDocument);
  ASSERT_TRUE(doc.has("sigma"));
  const FieldEntry& e = doc.at("sigma");
  ASSERT_EQ(e.rank, FieldRank::Tensor);
  EXPECT_EQ(e.tensor(0, 0), Rational(1, 2) * PolyScalarField::variable(1));
  EXPECT_EQ(e.tensor(1, 2), Rational(-3) * PolyScalarField::variable(0));
  EXPECT_TRUE(e.tensor(2, 2).is_zero());
}

TEST(FieldDocument, DuplicateMonomialsAreSummed) {
  const char* text = R"({"fields": {"f": {"rank": "scalar", "components": [
    {"coeff": "1/3", "exps": [1, 0, 0]},
    {"coeff": "2/3", "exps": [1, 0, 0]}
  ]}}})";
  const FieldDocument doc = parse_field_document(text);
  EXPECT_EQ(doc.at("f").scalar, PolyScalarField::variable(0));
}

TEST(FieldDocument, SerializeParseRoundTripIsByteIdentical) {
  const FieldDocument doc = parse_field_document(kSampleDocument);
  const std::string wire = serialize_field_document(doc);
  EXPECT_EQ(serialize_field_document(parse_field_document(wire)), wire);
}

TEST(FieldDocument, ErrorPathsPinpointTheOffence) {
  const auto path_of = [](const std::string& text) {
    try {
      parse_field_document(text);
    } catch (const FieldParseError& e) {
      return e.path();
    }
    return std::string("(no error)");
  };
  EXPECT_EQ(path_of("not json"), "/");
  EXPECT_EQ(path_of(R"({"no_fields": {}})"), "/");
  EXPECT_EQ(path_of(R"({"fields": {"f": {"rank": "widget", "components": []}}})"), "/fields/f/rank");
  EXPECT_EQ(path_of(R"({"fields": {"f": {"rank": "scalar", "components": [
      {"coeff": "1/0", "exps": [0, 0, 0]}]}}})"),
            "/fields/f/components/0/coeff");
  EXPECT_EQ(path_of(R"({"fields": {"f": {"rank": "scalar", "components": [
      {"coeff": "1", "exps": [0, -1, 0]}]}}})"),
            "/fields/f/components/0/exps/1");
  EXPECT_EQ(path_of(R"({"fields": {"f": {"rank": "scalar", "components": [
      {"coeff": "1", "exps": [0, 0, 0], "extra": 1}]}}})"),
            "/fields/f/components/0/extra");
  EXPECT_EQ(path_of(R"({"fields": {"v": {"rank": "vector", "components": [[], []]}}})"),
            "/fields/v/components");
}

TEST(Digest, Fnv1aKnownVectors) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(fnv1a_hex("foobar"), "85944171f73967e8");
}

TEST(Report, JsonShapeAndCheckOrdering) {
  RunReport r;
  r.command = "verify";
  r.seed = 7;
  r.checks.push_back(check_pass("zeta.last", "z", "1 trial"));
  r.checks.push_back(check_fail("alpha.first", "a", "1", "2", "counterexample at trial 3"));
  const nlohmann::ordered_json j = r.to_json();
  EXPECT_EQ(j["tool"], "polarity");
  EXPECT_EQ(j["command"], "verify");
  EXPECT_EQ(j["seed"], 7);
  ASSERT_EQ(j["checks"].size(), 2u);
  EXPECT_EQ(j["checks"][0]["id"], "alpha.first");
  EXPECT_EQ(j["checks"][0]["status"], "fail");
  EXPECT_EQ(j["checks"][0]["lhs"], "1");
  EXPECT_EQ(j["checks"][1]["id"], "zeta.last");
  EXPECT_EQ(j["checks"][1]["status"], "pass");
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_FALSE(r.all_passed());
}

TEST(Commands, VerifyRunsAllRegisteredChecks) {
  const CommandOutcome out = cmd_verify(42, 2, 2);
  EXPECT_EQ(out.exit_code, 0);
  EXPECT_TRUE(out.report.all_passed());
  EXPECT_EQ(out.report.checks.size(), identity_checks().size());
  EXPECT_EQ(out.report.seed, std::uint64_t{42});
}

TEST(Commands, VerifyRejectsUnusableParameters) {
  EXPECT_EQ(cmd_verify(1, 0, 2).exit_code, 2);
  EXPECT_EQ(cmd_verify(1, 4, -1).exit_code, 2);
}

TEST(Commands, AnalyzeProducesTheStandingReport) {
  AnalyzeOptions opts;
  const CommandOutcome out = cmd_analyze(kSampleDocument, opts);
  ASSERT_EQ(out.exit_code, 0) << out.error;
  EXPECT_TRUE(out.report.all_passed());
  const auto& res = out.report.results;
  ASSERT_TRUE(res.contains("pieces"));
  EXPECT_TRUE(res["pieces"].contains("p2"));
  EXPECT_TRUE(res.contains("couple_stress"));
  EXPECT_TRUE(res.contains("angular_balance"));
  ASSERT_TRUE(out.report.input_digest.has_value());
  EXPECT_EQ(*out.report.input_digest, fnv1a_hex(kSampleDocument));
}

TEST(Commands, AnalyzeMergePsiFoldsTheTerm) {
  AnalyzeOptions merged;
  merged.merge_psi = true;
  const CommandOutcome out = cmd_analyze(kSampleDocument, merged);
  ASSERT_EQ(out.exit_code, 0) << out.error;
  EXPECT_TRUE(out.report.results["angular_balance"].contains("div_m_plus_psi"));

  AnalyzeOptions split;
  const CommandOutcome out2 = cmd_analyze(kSampleDocument, split);
  EXPECT_TRUE(out2.report.results["angular_balance"].contains("div_m"));
  EXPECT_TRUE(out2.report.results["angular_balance"].contains("div_psi"));

  // Folding psi never changes the residual itself.
  EXPECT_EQ(out.report.results["angular_balance"]["residual"],
            out2.report.results["angular_balance"]["residual"]);
}

TEST(Commands, AnalyzeRejectsUnusableInput) {
  AnalyzeOptions opts;
  EXPECT_EQ(cmd_analyze("not json", opts).exit_code, 2);
  EXPECT_EQ(cmd_analyze(R"({"fields": {}})", opts).exit_code, 2);  // no "sigma"
  const char* scalar_sigma = R"({"fields": {"sigma": {"rank": "scalar", "components": []}}})";
  EXPECT_EQ(cmd_analyze(scalar_sigma, opts).exit_code, 2);
  AnalyzeOptions bad_edge;
  bad_edge.L_c = Rational(0);
  EXPECT_EQ(cmd_analyze(kSampleDocument, bad_edge).exit_code, 2);
}

TEST(Commands, ScenariosReportCleanRuns) {
  const TorsionParams torsion{
      Rational(2),
      IsotropicMaterial{Rational(3), Rational(5), Rational(1), Rational(1, 12), Rational(1),
                        Rational(0)},
      Rational(1)};
  const CommandOutcome t = cmd_scenario_torsion(torsion);
  EXPECT_EQ(t.exit_code, 0);
  EXPECT_TRUE(t.report.all_passed());

  const CommandOutcome f = cmd_scenario_trace_free(
      TraceFreeFamilyParams{Rational(1), Rational(2), Rational(3), Rational(1)});
  EXPECT_EQ(f.exit_code, 0);
  EXPECT_TRUE(f.report.all_passed());

  const CommandOutcome y = cmd_scenario_yang_cantilever(Rational(3), Rational(5));
  EXPECT_EQ(y.exit_code, 0);
  EXPECT_TRUE(y.report.all_passed());

  const CommandOutcome s =
      cmd_scenario_yang_surface(11, 2, Cube{Vec3{Rational(1), Rational(0), Rational(0)}, Rational(2)});
  EXPECT_EQ(s.exit_code, 0);
  EXPECT_TRUE(s.report.all_passed());

  const CommandOutcome c = cmd_scenario_conformal(
      5, IsotropicMaterial{Rational(3), Rational(2), Rational(1), Rational(1, 12), Rational(1),
                           Rational(0)});
  EXPECT_EQ(c.exit_code, 0);
  EXPECT_TRUE(c.report.all_passed());
}

TEST(Commands, TorsionScenarioRejectsDegenerateTwist) {
  TorsionParams p{
      Rational(0),
      IsotropicMaterial{Rational(3), Rational(5), Rational(1), Rational(1, 12), Rational(1),
                        Rational(0)},
      Rational(1)};
  EXPECT_EQ(cmd_scenario_torsion(p).exit_code, 2);
}

TEST(Commands, ReportsAreDeterministic) {
  const std::string a = cmd_verify(9, 2, 2).report.to_string();
  const std::string b = cmd_verify(9, 2, 2).report.to_string();
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace polarity
