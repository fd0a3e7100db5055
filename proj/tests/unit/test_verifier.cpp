#include <cmath>
#include <memory>
#include <string>

#include <gtest/gtest.h>

#include "covariant/builtin_groups.hpp"
#include "covariant/errors.hpp"
#include "covariant/report.hpp"
#include "covariant/verifier.hpp"

using namespace covariant;

namespace {

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

SuiteOptions quick(std::size_t trials = 20) {
  SuiteOptions o;
  o.trials = trials;
  o.descent_restarts = 20;
  return o;
}

}  // namespace

TEST(TheoremIds, RoundTrip) {
  for (TheoremId id : kAllTheorems) EXPECT_EQ(theorem_from_string(to_string(id)), id);
  EXPECT_EQ(to_string(TheoremId::quotient_isometry), "quotient_isometry");
  EXPECT_THROW(theorem_from_string("fermat"), UnknownTheorem);
}

TEST(CaseKey, TextAndOrder) {
  const GroupPtr s3 = share(parse_group_selector("S3"));
  const Character xi = Character::make(Subgroup::from_members(s3, {0, 3, 4}), 3, {0, 1, 2});
  EXPECT_EQ(CaseKey::of(xi).text(), "S3|N=0,3,4|xi=3:0,1,2");
  EXPECT_EQ(CaseKey::axb(1.0).text(), "ax+b|omega=1");
  EXPECT_TRUE(CaseKey::of(Character::trivial(Subgroup::trivial(s3))) < CaseKey::of(xi));
}

TEST(Suite, S3Produces84PassingReports) {
  const auto cases = run_suite(share(parse_group_selector("S3")), SuiteOptions{});
  EXPECT_EQ(cases.size(), 6u);
  const auto reports = flatten(cases);
  EXPECT_EQ(reports.size(), 84u);
  for (const TheoremReport& r : reports) {
    EXPECT_TRUE(r.passed) << r.case_key.text() << " " << to_string(r.id) << " " << r.residual << " " << r.detail;
    EXPECT_LE(r.residual, kFiniteTolerance);
    EXPECT_GT(r.samples, 0u);
  }
  EXPECT_TRUE(all_passed(cases));
}

TEST(Suite, TrivialGroupHasZeroResiduals) {
  const auto cases = run_suite(share(parse_group_selector("trivial")), quick());
  ASSERT_EQ(cases.size(), 1u);
  for (const TheoremReport& r : cases[0].theorems) {
    EXPECT_TRUE(r.passed) << to_string(r.id);
    EXPECT_EQ(r.residual, 0.0) << to_string(r.id);
  }
}

TEST(Suite, DeterministicAcrossThreadCounts) {
  const GroupPtr d4 = share(parse_group_selector("D4"));
  SuiteOptions one = quick();
  one.threads = 1;
  SuiteOptions many = quick();
  many.threads = 4;
  const ReportHeader header{7, 20, {}, {}};
  EXPECT_EQ(report_json(run_suite(d4, one), header), report_json(run_suite(d4, many), header));
}

TEST(Suite, SeedChangesSamplesNotOutcome) {
  const GroupPtr z6 = share(parse_group_selector("Z6"));
  SuiteOptions a = quick();
  SuiteOptions b = quick();
  b.seed = 8;
  EXPECT_TRUE(all_passed(run_suite(z6, a)));
  EXPECT_TRUE(all_passed(run_suite(z6, b)));
  EXPECT_THROW(run_suite(z6, quick(0)), ParameterOutOfRange);
}

TEST(VerifyTheorem, Examples) {
  const GroupPtr s3 = share(parse_group_selector("S3"));
  const Character xi = Character::make(Subgroup::from_members(s3, {0, 3, 4}), 3, {0, 1, 2});
  const TheoremReport adj = verify_theorem(TheoremId::adjointness, xi, HaarData{}, SuiteOptions{});
  EXPECT_TRUE(adj.passed);
  EXPECT_LE(adj.residual, 1e-12);
  EXPECT_EQ(adj.samples, 100u);

  const GroupPtr z4 = share(parse_group_selector("Z4"));
  const Character trivial = Character::trivial(Subgroup::from_members(z4, {0, 2}));
  const TheoremReport dual = verify_theorem(TheoremId::duality, trivial, HaarData{}, SuiteOptions{});
  EXPECT_TRUE(dual.passed);
  EXPECT_LE(dual.residual, 1e-12);

  // Same inputs, same report.
  const TheoremReport again = verify_theorem(TheoremId::adjointness, xi, HaarData{}, SuiteOptions{});
  EXPECT_EQ(again.residual, adj.residual);

  EXPECT_THROW(verify_theorem(TheoremId::weil, Character::trivial(Subgroup::from_members(s3, {0, 2})), HaarData{},
                              SuiteOptions{}),
               NotNormal);
}

TEST(VerifyTheorem, WeightsDoNotChangeOutcomes) {
  const GroupPtr q8 = share(parse_group_selector("Q8"));
  for (const WeightChoice& w : {WeightChoice{2, 1, false}, WeightChoice{1, 1, true}, WeightChoice{3, 2, false}}) {
    SuiteOptions o = quick();
    o.weights = w;
    EXPECT_TRUE(all_passed(run_suite(q8, o))) << w.text();
  }
}

TEST(Mutation, CorruptedCharacterIsCaught) {
  const GroupPtr s3 = share(parse_group_selector("S3"));
  const Character xi = Character::make(Subgroup::from_members(s3, {0, 3, 4}), 3, {0, 1, 2});
  const Character bad = corrupted_character(xi);
  EXPECT_FALSE(bad.is_homomorphism());

  SuiteOptions o = quick();
  o.corrupt_character = true;
  const CaseReport report = run_case(xi, o);
  std::size_t failures = 0;
  bool adjointness_failed = false, intertwine_failed = false;
  for (const TheoremReport& r : report.theorems) {
    failures += !r.passed;
    if (r.id == TheoremId::adjointness) adjointness_failed = !r.passed;
    if (r.id == TheoremId::intertwine_R) intertwine_failed = !r.passed;
  }
  EXPECT_GE(failures, 2u);
  EXPECT_TRUE(adjointness_failed || intertwine_failed);
  EXPECT_TRUE(intertwine_failed);

  // Real-valued characters take the bump path.
  const Character sign = enumerate_characters(Subgroup::whole(s3)).back();
  EXPECT_FALSE(corrupted_character(sign).is_homomorphism());
}

TEST(Report, JsonShape) {
  const auto cases = run_suite(share(parse_group_selector("Z2")), quick(5));
  const std::string json = report_json(cases, ReportHeader{7, 5, WeightChoice{}, {}});
  EXPECT_NE(json.find("\"suite_version\": \"1.0\""), std::string::npos);
  EXPECT_NE(json.find("\"prng\""), std::string::npos);
  EXPECT_NE(json.find("\"status\": \"pass\""), std::string::npos);
  EXPECT_EQ(json.find("\"status\": \"fail\""), std::string::npos);
  EXPECT_EQ(json.back(), '\n');
  const std::string text = report_text(cases, ReportHeader{7, 5, {}, {}});
  EXPECT_NE(text.find("42/42 checks passed"), std::string::npos) << text;
}
