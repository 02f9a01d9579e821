// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "metro/mec.hpp"

namespace metro {
namespace {

class Mec : public ::testing::Test {
 protected:
  Model m = testing::load_fixture("mec-sites.metromodel.json");
};

TEST_F(Mec, Classification) {
  EXPECT_EQ(*classify_distribution(m, "omod-cab"), Distribution::kCaseAPassive);
  EXPECT_EQ(*classify_distribution(m, "msan-cab"), Distribution::kCaseBActive);
  EXPECT_EQ(*classify_distribution(m, "co"), Distribution::kCaseBActive);
  EXPECT_EQ(*classify_distribution(m, "empty-vault"), Distribution::kOther);
  EXPECT_EQ(*classify_distribution(m, "prem"), Distribution::kOther);
  EXPECT_EQ(classify_distribution(m, "moon").error().code, "E-NO-SUCH-SITE");
}

TEST_F(Mec, PassiveSiteFailsPowerAndNetwork) {
  for (double w : {1.0, 50.0, 5000.0}) {
    auto r = evaluate_candidacy(m, "omod-cab", {w, std::nullopt, true});
    ASSERT_TRUE(r);
    EXPECT_FALSE(r->power.passed);
    EXPECT_FALSE(r->network.passed);
    EXPECT_FALSE(r->eligible);
    EXPECT_DOUBLE_EQ(r->power.deficit_w, w);
    EXPECT_EQ(r->upgrades,
              (std::vector<Upgrade>{Upgrade::kProvidePower, Upgrade::kInstallEthernetUplink}));
  }
}

TEST_F(Mec, ActiveSiteEligibleWithinHeadroom) {
  auto ok = evaluate_candidacy(m, "msan-cab", {800.0, std::nullopt, true});
  ASSERT_TRUE(ok);
  EXPECT_TRUE(ok->eligible);
  EXPECT_TRUE(ok->upgrades.empty());
  auto over = evaluate_candidacy(m, "msan-cab", {800.5, std::nullopt, true});
  EXPECT_FALSE(over->eligible);
  EXPECT_DOUBLE_EQ(over->power.deficit_w, 0.5);
}

TEST_F(Mec, PowerlessSiteFailsZeroDemand) {
  EXPECT_FALSE(evaluate_candidacy(m, "empty-vault", {0.0, std::nullopt, false})->power.passed);
}

TEST_F(Mec, SpaceRanking) {
  EXPECT_LT(*space_rank(SpaceClass::kCabinet), *space_rank(SpaceClass::kCentralOffice));
  EXPECT_FALSE(space_rank(SpaceClass::kCustomerPremises));
  EXPECT_EQ(space_rank(*m.find_site("prem")), 1);
  auto r = evaluate_candidacy(m, "msan-cab", {10.0, SpaceClass::kCentralOffice, true});
  EXPECT_FALSE(r->space.passed);
  EXPECT_EQ(r->upgrades, std::vector<Upgrade>{Upgrade::kExpandSpace});
  EXPECT_TRUE(evaluate_candidacy(m, "co", {10.0, SpaceClass::kCabinet, true})->space.passed);
}

TEST_F(Mec, RankEligibleFirstThenHeadroom) {
  auto ranked = rank_sites(m, {500.0, std::nullopt, true});
  ASSERT_EQ(ranked.size(), m.sites().size());
  EXPECT_EQ(ranked[0].site_id, "co");
  EXPECT_EQ(ranked[1].site_id, "msan-cab");
  for (std::size_t i = 2; i < ranked.size(); ++i) EXPECT_FALSE(ranked[i].eligible);
  auto again = rank_sites(m, {500.0, std::nullopt, true});
  for (std::size_t i = 0; i < ranked.size(); ++i) EXPECT_EQ(ranked[i].site_id, again[i].site_id);
}

TEST_F(Mec, NoEthernetRequirement) {
  auto r = evaluate_candidacy(m, "prem", {10.0, std::nullopt, false});
  EXPECT_TRUE(r->network.passed);
  EXPECT_FALSE(r->network.required);
}

}  // namespace
}  // namespace metro
