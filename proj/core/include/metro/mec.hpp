// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

// Edge-compute hosting candidacy of sites: passive versus active
// distribution, and the power, network and space criteria.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metro/model.hpp"
#include "metro/result.hpp"

namespace metro {

enum class Distribution { kCaseAPassive, kCaseBActive, kOther };

enum class Upgrade { kProvidePower, kInstallEthernetUplink, kExpandSpace };

std::string_view to_string(Distribution d);
std::string_view to_string(Upgrade u);

struct MecDemand {
  double required_power_w = 0.0;
  std::optional<SpaceClass> required_space_class;
  bool requires_ethernet = true;
};

// Position on the space scale: pedestal 1 up to central-office 7.
// customer-premises and other are unranked unless the site declares a rank.
std::optional<int> space_rank(SpaceClass c);
std::optional<int> space_rank(const Site& site);

struct PowerCriterion {
  bool passed = false;
  bool has_power = false;
  double headroom_w = 0.0;
  double required_w = 0.0;
  double deficit_w = 0.0;  // max(0, required - available)
};

struct NetworkCriterion {
  bool passed = false;
  bool required = true;
  bool has_ethernet_uplink = false;
};

struct SpaceCriterion {
  bool passed = false;
  SpaceClass space_class = SpaceClass::kOther;
  std::optional<int> rank;
  std::optional<SpaceClass> required_class;
  std::optional<int> required_rank;
};

struct CandidacyReport {
  std::string site_id;
  Distribution classification = Distribution::kOther;
  PowerCriterion power;
  NetworkCriterion network;
  SpaceCriterion space;
  std::vector<Upgrade> upgrades;  // provide-power, install-ethernet-uplink, expand-space
  bool eligible = false;
};

// Errors: E-NO-SUCH-SITE.
Result<Distribution> classify_distribution(const Model& model, std::string_view site_id);
Result<CandidacyReport> evaluate_candidacy(const Model& model, std::string_view site_id,
                                           const MecDemand& demand);

// Eligible sites by descending residual headroom, then fewest upgrades, then
// id; ineligible sites after, by fewest upgrades, then id.
std::vector<CandidacyReport> rank_sites(const Model& model, const MecDemand& demand);

}  // namespace metro
