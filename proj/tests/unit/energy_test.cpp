// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "metro/catalog.hpp"
#include "metro/energy.hpp"
#include "oracles.hpp"

namespace metro {
namespace {

using G = FunctionalGroup;

PowerProfile flat(std::string id, std::int64_t start, std::int64_t end, double w) {
  return {std::move(id), {{start, end, w}}, "meter", {start, end}};
}

Model integrated_gpon() {
  TemplateParams p;
  p.integrated_cpe = true;
  return testing::build_or_throw(instantiate_template(TemplateId::kGpon, p).parts);
}

TEST(Integrate, OneKilowattForAnHour) {
  auto v = integrate_energy(flat("x", 0, 3600, 1000.0), {0, 3600});
  ASSERT_TRUE(v);
  EXPECT_DOUBLE_EQ(*v, 1000.0);
}

TEST(Integrate, PartialOverlapMatchesRiemann) {
  // 500 W from 00:30 to 01:30 seen through [01:00, 02:00): 30 min -> 250 Wh.
  auto prof = flat("x", 1800, 5400, 500.0);
  Interval iv{3600, 7200};
  auto v = integrate_energy(prof, iv);
  ASSERT_TRUE(v);
  EXPECT_NEAR(*v, 250.0, 1e-9);
  EXPECT_NEAR(*v, testing::riemann_energy_wh(prof, iv), 1e-9);
}

TEST(Integrate, GapsContributeNothing) {
  PowerProfile p{"x", {{0, 600, 100.0}, {1200, 1800, 300.0}}, "m", {0, 1800}};
  auto v = integrate_energy(p, {0, 3600});
  ASSERT_TRUE(v);
  EXPECT_NEAR(*v, 100.0 / 6 + 300.0 / 6, 1e-9);
}

TEST(Integrate, RejectsBadSamples) {
  PowerProfile backwards{"x", {{10, 5, 1.0}}, "m", {10, 5}};
  EXPECT_EQ(integrate_energy(backwards, {0, 10}).error().code, "E-BAD-SAMPLE");
  PowerProfile negative{"x", {{0, 5, -1.0}}, "m", {0, 5}};
  EXPECT_EQ(integrate_energy(negative, {0, 10}).error().code, "E-BAD-SAMPLE");
  PowerProfile overlap{"x", {{0, 10, 1.0}, {5, 15, 1.0}}, "m", {0, 15}};
  EXPECT_EQ(integrate_energy(overlap, {0, 20}).error().code, "E-SAMPLE-OVERLAP");
}

TEST(Integrate, RandomProfilesMatchRiemann) {
  testing::Rng rng(99);
  auto parts = testing::random_chain(rng).parts;
  for (auto& e : parts.elements) e.powered = true;
  for (int i = 0; i < 50; ++i) {
    for (const auto& prof : testing::random_profiles(rng, parts, 3 * 3600)) {
      Interval iv{600, 3 * 3600 - 900};
      double want = testing::riemann_energy_wh(prof, iv);
      double got = *integrate_energy(prof, iv);
      EXPECT_LE(std::abs(got - want), 1e-6 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST(Split, DeclaredFractions) {
  auto m = integrated_gpon();
  const auto& holder = *m.find_element("onu-rg");
  const auto& u = *m.find_rp("u");
  auto s = split_subsumed(holder, u, {SplitMode::kDeclared, {{G::kONU, 0.7}, {G::kRG, 0.3}}});
  ASSERT_TRUE(s);
  EXPECT_DOUBLE_EQ(s->fractions.at(G::kONU), 0.7);
  EXPECT_FALSE(s->warning);
  auto bad = split_subsumed(holder, u, {SplitMode::kDeclared, {{G::kONU, 0.7}, {G::kRG, 0.2}}});
  EXPECT_EQ(bad.error().code, "E-FRACTIONS-INVALID");
}

TEST(Split, DenyAndEqual) {
  auto m = integrated_gpon();
  const auto& holder = *m.find_element("onu-rg");
  const auto& u = *m.find_rp("u");
  EXPECT_EQ(split_subsumed(holder, u, {SplitMode::kDeny, {}}).error().code, "E-SPLIT-DENIED");
  auto eq = split_subsumed(holder, u, {});
  ASSERT_TRUE(eq);
  EXPECT_TRUE(eq->warning);
  for (const auto& [g, f] : eq->fractions) EXPECT_DOUBLE_EQ(f, 1.0 / 3);
}

TEST(Attribute, SubsumedHolderSplitsAcrossSegments) {
  auto m = integrated_gpon();
  auto cov = serial_recomposition(m);
  ASSERT_EQ(cov.assignment.at("onu-rg"), "access");
  auto r = attribute_energy(m, cov, {flat("onu-rg", 0, 3600, 10.0)}, {0, 3600},
                            {SplitMode::kDeclared, {{G::kONU, 0.7}, {G::kRG, 0.3}}});
  ASSERT_TRUE(r) << to_string(r.error());
  EXPECT_NEAR(r->per_segment_wh.at("access"), 7.0, 1e-12);
  EXPECT_NEAR(r->per_segment_wh.at("customer"), 3.0, 1e-12);
  EXPECT_NEAR(r->per_operator_wh.at(std::string(kSubscriberOperator)), 3.0, 1e-12);

  auto denied = attribute_energy(m, cov, {flat("onu-rg", 0, 3600, 10.0)}, {0, 3600},
                                 {SplitMode::kDeny, {}});
  ASSERT_FALSE(denied);
  EXPECT_EQ(denied.error().code, "E-SPLIT-DENIED");

  auto equal = attribute_energy(m, cov, {flat("onu-rg", 0, 3600, 9.0)}, {0, 3600}, {});
  ASSERT_TRUE(equal);
  EXPECT_NEAR(equal->per_segment_wh.at("access"), 6.0, 1e-12);
  EXPECT_NEAR(equal->per_segment_wh.at("customer"), 3.0, 1e-12);
  EXPECT_FALSE(equal->warnings.empty());
}

TEST(Attribute, RatedFallbackAndUncaptured) {
  auto p = testing::load_fixture("l3vpn.metromodel.json").parts();
  std::erase_if(p.segments, [](const Segment& s) { return s.id == "customer-b"; });
  for (auto& e : p.elements) e.power_draw_w = 50.0;
  auto m = testing::build_or_throw(p);
  auto cov = serial_recomposition(m);
  ASSERT_EQ(cov.uncaptured, std::vector<std::string>{"CE2"});
  auto r = attribute_energy(m, cov, {flat("PE1", 0, 3600, 100.0)}, {0, 3600}, {});
  ASSERT_TRUE(r);
  EXPECT_NEAR(r->per_segment_wh.at("metro-core"), 100.0 + 3 * 50.0, 1e-9);
  EXPECT_NEAR(r->per_segment_wh.at("customer-a"), 50.0, 1e-9);
  EXPECT_EQ(r->rated_not_measured, (std::vector<std::string>{"CE1", "CE2", "P1", "P2", "PE2"}));
  EXPECT_NEAR(r->uncaptured_wh, 50.0, 1e-9);
  double sum = r->uncaptured_wh;
  for (const auto& [s, wh] : r->per_segment_wh) sum += wh;
  EXPECT_NEAR(sum, r->total_wh, 1e-9);
  ASSERT_EQ(r->hidden_consumer_notes.size(), 2u);
  EXPECT_EQ(r->hidden_consumer_notes[0].rfind("P1 ", 0), 0u);
  EXPECT_EQ(r->hidden_consumer_notes[1].rfind("P2 ", 0), 0u);
}

TEST(Attribute, ProfileErrors) {
  auto m = testing::load_fixture("amplifier.metromodel.json");
  auto cov = serial_recomposition(m);
  auto r = attribute_energy(m, cov, {flat("ghost", 0, 1, 1.0), flat("amp", 0, 1, 1.0),
                                     flat("amp", 0, 1, 1.0)},
                            {0, 1}, {});
  ASSERT_FALSE(r);
  std::set<std::string> codes;
  for (const auto& e : r.errors()) codes.insert(e.code);
  EXPECT_TRUE(codes.count("E-UNKNOWN-ELEMENT"));
  EXPECT_TRUE(codes.count("E-DUP-PROFILE"));
}

TEST(Csv, ParsesIsoAndEpochTimes) {
  auto m = testing::load_fixture("amplifier.metromodel.json");
  auto r = parse_power_csv(
      "element_id,start_utc,end_utc,avg_power_w\n"
      "amp,2026-01-01T00:00:00Z,2026-01-01T01:00:00Z,60\n"
      "sw-a,0,3600,100.5\n",
      m);
  ASSERT_TRUE(r) << to_string(r.error());
  ASSERT_EQ(r->size(), 2u);
  EXPECT_EQ((*r)[0].element_id, "amp");
  EXPECT_EQ((*r)[0].samples[0].end - (*r)[0].samples[0].start, 3600);
  EXPECT_EQ((*r)[0].measurement_location, "hut");
  EXPECT_DOUBLE_EQ((*r)[1].samples[0].avg_power_w, 100.5);
}

TEST(Csv, Errors) {
  auto m = testing::load_fixture("amplifier.metromodel.json");
  EXPECT_EQ(parse_power_csv("", m).error().code, "E-CSV");
  auto bad = parse_power_csv("element_id,start_utc,end_utc,avg_power_w\namp,0,x,1\n", m);
  ASSERT_FALSE(bad);
  EXPECT_EQ(bad.error().code, "E-CSV");
  EXPECT_EQ(bad.error().subject, "line 2");
}

TEST(Utc, RoundTrip) {
  EXPECT_EQ(parse_utc("1970-01-01T00:00:00Z"), 0);
  EXPECT_EQ(parse_utc("2026-03-01"), *parse_utc("2026-03-01T00:00:00Z"));
  EXPECT_EQ(format_utc(*parse_utc("2024-02-29T23:59:59Z")), "2024-02-29T23:59:59Z");
  EXPECT_FALSE(parse_utc("yesterday"));
}

}  // namespace
}  // namespace metro
