#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "json.hpp"
#include "steenrod/expression.hpp"
#include "steenrod/presentation.hpp"
#include "steenrod/suite.hpp"

using namespace steenrod;

namespace {

const ReportEntry& only(const VerificationReport& r) {
  EXPECT_EQ(r.size(), 1u);
  return r.entries().front();
}

void expect_witnesses_canonical(const VerificationReport& report) {
  for (const auto& e : report.entries()) {
    if (e.witness_kind == WitnessKind::steenrod) {
      const auto parsed = parse_steenrod(e.witness);
      EXPECT_EQ(to_admissible(parsed), parsed) << e.check << " " << e.witness;
      EXPECT_EQ(parsed.to_string(), e.witness);
    } else if (e.witness_kind == WitnessKind::ring) {
      ASSERT_TRUE(e.witness_ring) << e.check;
      const auto parsed = parse_ring_element(*e.witness_ring, e.witness);
      EXPECT_EQ(e.witness_ring->format(parsed), e.witness) << e.check;
    }
  }
}

}  // namespace

TEST(OddSquares, DefaultRange) {
  const auto report = verify_lemma_3_1(5);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.count(CheckStatus::pass), 56u);
  EXPECT_EQ(lemma_3_1_check_count(5), 56u);
  EXPECT_EQ(report.count(CheckStatus::skipped), 1u);
  expect_witnesses_canonical(report);
}

TEST(OddSquares, Examples) {
  const auto report = verify_lemma_3_1(2);
  ASSERT_EQ(report.size(), 4u);
  EXPECT_EQ(report.entries()[0].params, "j=2 i=1");
  EXPECT_EQ(report.entries()[0].witness, "0");  // Sq1 Sq3 = 0
  EXPECT_EQ(report.entries()[1].witness, "Sq5 Sq1");
  EXPECT_EQ(report.entries()[3].witness, "Sq7 Sq3");
  EXPECT_EQ(report.entries()[3].status, CheckStatus::skipped);
  EXPECT_THROW(verify_lemma_3_1(1), std::invalid_argument);
}

TEST(OddSquares, EvenExponentsFail) {
  const auto report = falsified_lemma_3_1(3);
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.entries()[0].witness, "Sq5 + Sq4 Sq1");
}

TEST(WitnessMonomial, Examples) {
  EXPECT_EQ(only(verify_lemma_4_1(1, 1)).status, CheckStatus::pass);
  EXPECT_EQ(only(verify_lemma_4_1(1, 1)).witness, "x1^2");
  EXPECT_EQ(only(verify_lemma_4_1(2, 2)).witness, "x1^4*x2^2");
  EXPECT_EQ(only(verify_lemma_4_1(5, 5)).witness, "x1^32*x2^16*x3^8*x4^4*x5^2");
  for (int s = 2; s <= 5; ++s) EXPECT_TRUE(verify_lemma_4_1(s, s).passed()) << s;
  EXPECT_TRUE(verify_lemma_4_1(4, 2).passed());
  EXPECT_THROW(verify_lemma_4_1(2, 3), std::invalid_argument);
  EXPECT_THROW(verify_lemma_4_1(2, 0), std::invalid_argument);
}

TEST(WitnessMonomial, WrongMonomialFails) {
  for (int s = 2; s <= 4; ++s) EXPECT_FALSE(falsified_lemma_4_1(s, s).passed()) << s;
}

TEST(BiellipticSigma, Passes) {
  const auto report = verify_prop_5_3();
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.entries()[0].witness, "alpha*gamma*delta + beta*gamma*delta");
  EXPECT_EQ(report.entries()[1].witness, "alpha^3*beta*gamma*delta");
  EXPECT_EQ(report.entries()[2].params, "ring=bielliptic dims=1,6,16,26,30,26,16,6,1");
  expect_witnesses_canonical(report);
}

TEST(BiellipticSigma, SplitCoverFails) {
  const auto report = falsified_prop_5_3();
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.entries()[1].witness, "0");
}

TEST(CoverDimensions, AllStepsPass) {
  const auto report = verify_cover_dimensions();
  EXPECT_EQ(report.size(), 4u);
  EXPECT_TRUE(report.passed());
}

TEST(BocksteinClass, Examples) {
  EXPECT_EQ(only(verify_theorem_4_3(1, 3)).witness, "x1^4*x2^2 + x1^2*x2^4");
  EXPECT_EQ(only(verify_theorem_4_3(2, 5)).witness, "x1^4*x2^2*lambda + x1^2*x2^4*lambda");
  const auto e = only(verify_theorem_4_3(1, 4));
  EXPECT_EQ(e.status, CheckStatus::pass);
  EXPECT_NE(e.witness.find("x1^8*x2^4*x3^2"), std::string::npos);
  EXPECT_TRUE(verify_theorem_4_3(2, 6).passed());
  EXPECT_TRUE(verify_theorem_4_3(3, 8).passed());
}

TEST(BocksteinClass, Parameters) {
  EXPECT_THROW(verify_theorem_4_3(0, 3), std::invalid_argument);
  EXPECT_THROW(verify_theorem_4_3(2, 4), std::invalid_argument);
  const auto model = theorem_4_3_model(2, 6);
  EXPECT_EQ(model.s, 3);
  ASSERT_TRUE(model.lambda);
  EXPECT_EQ(model.ring->generator(*model.lambda).degree, 2u);
  EXPECT_FALSE(theorem_4_3_model(1, 3).lambda);
}

TEST(BocksteinClass, WithoutBocksteinFails) {
  EXPECT_FALSE(falsified_theorem_4_3(1, 3).passed());
  EXPECT_FALSE(falsified_theorem_4_3(2, 5).passed());
}

TEST(SigmaSq3, Examples) {
  EXPECT_EQ(only(verify_theorem_5_4(3)).witness, "alpha^3*beta*gamma*delta");
  const auto l4 = verify_theorem_5_4(4);
  ASSERT_EQ(l4.size(), 2u);
  EXPECT_TRUE(l4.passed());
  EXPECT_EQ(l4.entries()[0].witness, "alpha^3*beta*gamma*delta*t1");
  EXPECT_EQ(l4.entries()[1].check, "thm-5-4/sq1-sigma");
  EXPECT_THROW(verify_theorem_5_4(5), std::invalid_argument);
  expect_witnesses_canonical(l4);
}

TEST(SigmaSq3, WrongClassFails) {
  EXPECT_FALSE(falsified_theorem_5_4(3).passed());
  EXPECT_FALSE(falsified_theorem_5_4(4).passed());
}

TEST(ProductWitness, Examples) {
  EXPECT_EQ(only(verify_remark_4_4(3)).witness, "x1*x2*x3");
  EXPECT_TRUE(verify_remark_4_4(1).passed());
  EXPECT_FALSE(falsified_remark_4_4(3).passed());
  EXPECT_THROW(verify_remark_4_4(0), std::invalid_argument);
}

TEST(TwoSided, Report) {
  const auto report = verify_two_sided_ideal();
  EXPECT_EQ(report.size(), 4u);
  EXPECT_TRUE(report.passed());
}

TEST(Controls, EveryFalsifiedVariantFails) {
  for (const auto& [name, variant] : falsified_variants()) EXPECT_FALSE(variant.passed()) << name;
  const auto controls = negative_controls();
  EXPECT_TRUE(controls.passed());
  EXPECT_EQ(controls.size(), falsified_variants().size());
}

TEST(Report, TextAndJsonLines) {
  VerificationReport report;
  report.add(timed_entry("a", "p=1", [](ReportEntry& e) {
    e.witness = "Sq3";
    return true;
  }));
  report.add(timed_entry("bb", "p=\"2\"", [](ReportEntry&) { return false; }));
  const auto text = report.to_text(false);
  EXPECT_EQ(text,
            "check  params  status   witness\n"
            "a      p=1     pass     Sq3\n"
            "bb     p=\"2\"   fail     \n"
            "overall: fail (1 pass, 1 fail, 0 skipped)\n");
  std::istringstream lines(report.to_json_lines());
  std::string line;
  std::vector<nlohmann::json> parsed;
  while (std::getline(lines, line)) parsed.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(parsed[1]["params"], "p=\"2\"");
  EXPECT_EQ(parsed[0]["status"], "pass");
  std::vector<std::string> keys;
  for (const auto& [k, v] : parsed[0].items()) keys.push_back(k);
  EXPECT_EQ(keys.size(), 5u);
  for (const char* k : {"check", "params", "status", "witness", "elapsed_ms"}) EXPECT_TRUE(parsed[0].contains(k));
}

TEST(Report, SkippedEntriesDoNotFail) {
  VerificationReport report;
  ReportEntry e;
  e.status = CheckStatus::skipped;
  report.add(e);
  EXPECT_TRUE(report.passed());
}

TEST(FullSuite, DeterministicAndPassing) {
  SuiteConfig cfg;
  cfg.properties.cases = 60;
  const auto a = run_full_suite(cfg);
  const auto b = run_full_suite(cfg);
  EXPECT_TRUE(a.passed()) << a.to_text();
  EXPECT_EQ(a.to_text(false), b.to_text(false));
  expect_witnesses_canonical(a);
}

TEST(FullSuite, SeedChangesRandomCasesOnly) {
  SuiteConfig cfg;
  cfg.properties.cases = 30;
  cfg.properties.seed = 7;
  const auto report = run_full_suite(cfg);
  EXPECT_TRUE(report.passed());
  bool mentions_seed = false;
  for (const auto& e : report.entries()) mentions_seed |= e.params.find("seed=7 ") != std::string::npos;
  EXPECT_TRUE(mentions_seed);
}

TEST(Properties, LeftIdealSpanCrossCheck) {
  PropertyConfig cfg;
  cfg.left_ideal_crosscheck_degree = 20;
  EXPECT_EQ(property_left_ideal_span(cfg).status, CheckStatus::pass);
}
