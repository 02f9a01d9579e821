// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

#include <ostream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "metro/validation.hpp"
#include "mutations.hpp"

namespace metro {
namespace testing {

// Keeps discovered test names readable.
void PrintTo(const RuleMutation& m, std::ostream* os) { *os << m.rule; }

}  // namespace testing
namespace {

std::vector<std::string> error_codes(const std::vector<Diagnostic>& ds) {
  std::vector<std::string> out;
  for (const auto& d : ds) {
    if (d.severity == Severity::kError) out.push_back(d.code);
  }
  return out;
}

class RuleKill : public ::testing::TestWithParam<testing::RuleMutation> {};

TEST_P(RuleKill, TriggersExactlyItsRule) {
  const auto& m = GetParam();
  auto model = build_model(m.parts);
  ASSERT_TRUE(model) << m.edit << ": " << to_string(model.error());
  auto ds = validate_reference_configuration(*model);
  bool fired = false;
  for (const auto& d : ds) fired |= d.code == m.rule;
  EXPECT_TRUE(fired) << m.edit;
  for (const auto& code : error_codes(ds)) EXPECT_EQ(code, m.rule) << m.edit;
}

INSTANTIATE_TEST_SUITE_P(Mutations, RuleKill, ::testing::ValuesIn(testing::rule_mutations()),
                         [](const auto& info) { return info.param.rule; });

TEST(Validation, CleanGponHasNoDiagnostics) {
  auto m = testing::load_fixture("clean-gpon.metromodel.json");
  EXPECT_TRUE(validate_reference_configuration(m).empty());
}

TEST(Validation, UniLegacyIsAWarning) {
  auto m = testing::load_fixture("uni-legacy.metromodel.json");
  auto ds = validate_reference_configuration(m);
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].code, "R9");
  EXPECT_EQ(ds[0].severity, Severity::kWarning);
  EXPECT_FALSE(has_errors(ds));
  EXPECT_FALSE(ds[0].anchor.empty());
}

TEST(Validation, U1AndTConflict) {
  auto m = testing::load_fixture("u1-t-conflict.metromodel.json");
  auto ds = validate_reference_configuration(m);
  EXPECT_TRUE(has_errors(ds));
  EXPECT_EQ(error_codes(ds), std::vector<std::string>{"R6"});
}

TEST(Validation, OrderedByRuleNumber) {
  // Combine an R1 and an R10 defect; R1 must come first despite "R10" < "R2".
  auto muts = testing::rule_mutations();
  auto parts = muts[0].parts;  // R1
  for (auto& rp : parts.reference_points) {
    if (rp.id == "u") rp.designator = {DesignatorKind::kUniLegacy, ""};
  }
  auto m = testing::build_or_throw(parts);
  auto ds = validate_reference_configuration(m);
  ASSERT_GE(ds.size(), 2u);
  auto rank = [](const std::string& code) { return std::stoi(code.substr(1)); };
  for (std::size_t i = 1; i < ds.size(); ++i) {
    EXPECT_LE(rank(ds[i - 1].code), rank(ds[i].code));
  }
}

TEST(Validation, RenderTextCarriesCodeAndAnchor) {
  auto m = testing::load_fixture("uni-legacy.metromodel.json");
  auto line = render_text(validate_reference_configuration(m).front());
  EXPECT_EQ(line.rfind("R9 warning ", 0), 0u);
  EXPECT_NE(line.find('('), std::string::npos);
}

TEST(Validation, Deterministic) {
  for (const auto& mut : testing::rule_mutations()) {
    auto m = testing::build_or_throw(mut.parts);
    EXPECT_EQ(validate_reference_configuration(m), validate_reference_configuration(m));
  }
}

}  // namespace
}  // namespace metro
