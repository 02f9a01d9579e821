// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

#include "metro/mec.hpp"

#include <algorithm>
#include <tuple>

namespace metro {
namespace {

using G = FunctionalGroup;

bool passive_distribution(const NetworkElement& e) {
  if (e.powered || e.functional_groups.empty()) return false;
  return std::all_of(e.functional_groups.begin(), e.functional_groups.end(),
                     [](G g) { return g == G::kOMOD || g == G::kPowerSplitter; });
}

bool active_access(const NetworkElement& e) {
  if (!e.powered) return false;
  for (G g : {G::kMSAN, G::kDSLAM, G::kOLT, G::kONU, G::kCMTS, G::kEthernetSwitch}) {
    if (e.has_group(g)) return true;
  }
  return false;
}

Error no_site(std::string_view id) {
  return {"E-NO-SUCH-SITE", std::string(id), "unknown site"};
}

Distribution classify(const Model& model, const Site& site) {
  auto hosted = model.elements_at_site(site.id);
  if (hosted.empty()) return Distribution::kOther;
  if (std::all_of(hosted.begin(), hosted.end(),
                  [](const NetworkElement* e) { return passive_distribution(*e); })) {
    return Distribution::kCaseAPassive;
  }
  if (site.has_ethernet_uplink &&
      std::any_of(hosted.begin(), hosted.end(),
                  [](const NetworkElement* e) { return active_access(*e); })) {
    return Distribution::kCaseBActive;
  }
  return Distribution::kOther;
}

CandidacyReport evaluate(const Model& model, const Site& site, const MecDemand& demand) {
  CandidacyReport r;
  r.site_id = site.id;
  r.classification = classify(model, site);

  double available = site.has_power ? site.power_headroom_w : 0.0;
  r.power = {site.has_power && site.power_headroom_w >= demand.required_power_w,
             site.has_power, site.power_headroom_w, demand.required_power_w,
             std::max(0.0, demand.required_power_w - available)};

  r.network = {!demand.requires_ethernet || site.has_ethernet_uplink, demand.requires_ethernet,
               site.has_ethernet_uplink};

  r.space.space_class = site.space_class;
  r.space.rank = space_rank(site);
  r.space.required_class = demand.required_space_class;
  if (!demand.required_space_class) {
    r.space.passed = true;
  } else {
    r.space.required_rank = space_rank(*demand.required_space_class);
    if (r.space.required_rank && r.space.rank) {
      r.space.passed = *r.space.rank >= *r.space.required_rank;
    } else {
      // Unranked classes only match themselves.
      r.space.passed = site.space_class == *demand.required_space_class;
    }
  }

  if (!r.power.passed) r.upgrades.push_back(Upgrade::kProvidePower);
  if (!r.network.passed) r.upgrades.push_back(Upgrade::kInstallEthernetUplink);
  if (!r.space.passed) r.upgrades.push_back(Upgrade::kExpandSpace);
  r.eligible = r.upgrades.empty();
  return r;
}

}  // namespace

std::string_view to_string(Distribution d) {
  switch (d) {
    case Distribution::kCaseAPassive: return "CaseA-passive";
    case Distribution::kCaseBActive: return "CaseB-active";
    case Distribution::kOther: return "Other";
  }
  return "";
}

std::string_view to_string(Upgrade u) {
  switch (u) {
    case Upgrade::kProvidePower: return "provide-power";
    case Upgrade::kInstallEthernetUplink: return "install-ethernet-uplink";
    case Upgrade::kExpandSpace: return "expand-space";
  }
  return "";
}

std::optional<int> space_rank(SpaceClass c) {
  switch (c) {
    case SpaceClass::kPedestal: return 1;
    case SpaceClass::kCabinet: return 2;
    case SpaceClass::kVault: return 3;
    case SpaceClass::kStreetNode: return 4;
    case SpaceClass::kServiceRoom: return 5;
    case SpaceClass::kHeadend: return 6;
    case SpaceClass::kCentralOffice: return 7;
    case SpaceClass::kCustomerPremises:
    case SpaceClass::kOther: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<int> space_rank(const Site& site) {
  return site.space_rank ? site.space_rank : space_rank(site.space_class);
}

Result<Distribution> classify_distribution(const Model& model, std::string_view site_id) {
  const auto* site = model.find_site(site_id);
  if (site == nullptr) return no_site(site_id);
  return classify(model, *site);
}

Result<CandidacyReport> evaluate_candidacy(const Model& model, std::string_view site_id,
                                           const MecDemand& demand) {
  const auto* site = model.find_site(site_id);
  if (site == nullptr) return no_site(site_id);
  return evaluate(model, *site, demand);
}

std::vector<CandidacyReport> rank_sites(const Model& model, const MecDemand& demand) {
  std::vector<CandidacyReport> out;
  for (const auto& [id, site] : model.sites()) out.push_back(evaluate(model, site, demand));
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    if (a.eligible != b.eligible) return a.eligible;
    double ra = a.eligible ? a.power.headroom_w - demand.required_power_w : 0.0;
    double rb = b.eligible ? b.power.headroom_w - demand.required_power_w : 0.0;
    auto na = a.upgrades.size();
    auto nb = b.upgrades.size();
    return std::tie(rb, na, a.site_id) < std::tie(ra, nb, b.site_id);
  });
  return out;
}

}  // namespace metro
