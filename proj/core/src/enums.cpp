// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

#include <array>
#include <utility>

#include "metro/model.hpp"

namespace metro {
namespace {

template <typename E, std::size_t N>
using Table = std::array<std::pair<E, std::string_view>, N>;

template <typename E, std::size_t N>
std::string_view lookup(const Table<E, N>& table, E v) {
  for (const auto& [e, s] : table) {
    if (e == v) return s;
  }
  return "?";
}

template <typename E, std::size_t N>
std::optional<E> reverse(const Table<E, N>& table, std::string_view s) {
  for (const auto& [e, name] : table) {
    if (name == s) return e;
  }
  return std::nullopt;
}

constexpr Table<LayerKind, 2> kLayerKinds{{
    {LayerKind::kTransmissionMedia, "transmission-media"},
    {LayerKind::kPath, "path"},
}};

constexpr Table<SpaceClass, 9> kSpaceClasses{{
    {SpaceClass::kCabinet, "cabinet"},
    {SpaceClass::kPedestal, "pedestal"},
    {SpaceClass::kVault, "vault"},
    {SpaceClass::kServiceRoom, "service-room"},
    {SpaceClass::kCentralOffice, "central-office"},
    {SpaceClass::kHeadend, "headend"},
    {SpaceClass::kCustomerPremises, "customer-premises"},
    {SpaceClass::kStreetNode, "street-node"},
    {SpaceClass::kOther, "other"},
}};

constexpr Table<FunctionalGroup, 22> kGroups{{
    {FunctionalGroup::kNT1, "NT1"},
    {FunctionalGroup::kNT2, "NT2"},
    {FunctionalGroup::kAF, "AF"},
    {FunctionalGroup::kRG, "RG"},
    {FunctionalGroup::kTE, "TE"},
    {FunctionalGroup::kONU, "ONU"},
    {FunctionalGroup::kOLT, "OLT"},
    {FunctionalGroup::kMSAN, "MSAN"},
    {FunctionalGroup::kDSLAM, "DSLAM"},
    {FunctionalGroup::kCM, "CM"},
    {FunctionalGroup::kCMTS, "CMTS"},
    {FunctionalGroup::kRU, "RU"},
    {FunctionalGroup::kDU, "DU"},
    {FunctionalGroup::kCSR, "CSR"},
    {FunctionalGroup::kOMOD, "OM-OD"},
    {FunctionalGroup::kPowerSplitter, "power-splitter"},
    {FunctionalGroup::kPRouter, "P-router"},
    {FunctionalGroup::kPERouter, "PE-router"},
    {FunctionalGroup::kCERouter, "CE-router"},
    {FunctionalGroup::kOpticalAmplifier, "optical-amplifier"},
    {FunctionalGroup::kEthernetSwitch, "ethernet-switch"},
    {FunctionalGroup::kOther, "other"},
}};

constexpr Table<RpKind, 5> kRpKinds{{
    {RpKind::kRpiN, "RPI-N"},
    {RpKind::kRpiS, "RPI-S"},
    {RpKind::kIrDI, "IrDI"},
    {RpKind::kIaDI, "IaDI"},
    {RpKind::kAccessPoint, "AccessPoint"},
}};

constexpr Table<Accessibility, 2> kAccessibility{{
    {Accessibility::kExternal, "external"},
    {Accessibility::kSubsumed, "subsumed"},
}};

constexpr Table<DesignatorKind, 12> kDesignators{{
    {DesignatorKind::kS, "S"},
    {DesignatorKind::kT, "T"},
    {DesignatorKind::kU, "U"},
    {DesignatorKind::kU1, "U1"},
    {DesignatorKind::kPAI, "PAI"},
    {DesignatorKind::kDI, "DI"},
    {DesignatorKind::kV, "V"},
    {DesignatorKind::kW, "W"},
    {DesignatorKind::kRS, "R-S"},
    {DesignatorKind::kCMCI, "CMCI"},
    {DesignatorKind::kAEphemeral, "A-ephemeral"},
    {DesignatorKind::kUniLegacy, "UNI-legacy"},
}};

constexpr Table<SegmentKind, 7> kSegmentKinds{{
    {SegmentKind::kCustomer, "customer"},
    {SegmentKind::kAccess, "access"},
    {SegmentKind::kAggregation, "aggregation"},
    {SegmentKind::kMetroCore, "metro-core"},
    {SegmentKind::kFronthaul, "fronthaul"},
    {SegmentKind::kMidhaul, "midhaul"},
    {SegmentKind::kBackhaul, "backhaul"},
}};

constexpr std::string_view kCustomPrefix = "custom:";
constexpr std::string_view kOtherPrefix = "other:";

}  // namespace

std::string_view to_string(LayerKind v) { return lookup(kLayerKinds, v); }
std::string_view to_string(SpaceClass v) { return lookup(kSpaceClasses, v); }
std::string_view to_string(FunctionalGroup v) { return lookup(kGroups, v); }
std::string_view to_string(RpKind v) { return lookup(kRpKinds, v); }
std::string_view to_string(Accessibility v) { return lookup(kAccessibility, v); }

std::string to_string(const Designator& v) {
  if (v.kind == DesignatorKind::kCustom) {
    return std::string(kCustomPrefix) + v.label;
  }
  return std::string(lookup(kDesignators, v.kind));
}

std::string to_string(const SegmentName& v) {
  if (v.kind == SegmentKind::kOther) return std::string(kOtherPrefix) + v.label;
  return std::string(lookup(kSegmentKinds, v.kind));
}

std::optional<LayerKind> parse_layer_kind(std::string_view s) {
  return reverse(kLayerKinds, s);
}
std::optional<SpaceClass> parse_space_class(std::string_view s) {
  return reverse(kSpaceClasses, s);
}
std::optional<FunctionalGroup> parse_functional_group(std::string_view s) {
  return reverse(kGroups, s);
}
std::optional<RpKind> parse_rp_kind(std::string_view s) {
  return reverse(kRpKinds, s);
}
std::optional<Accessibility> parse_accessibility(std::string_view s) {
  return reverse(kAccessibility, s);
}

std::optional<Designator> parse_designator(std::string_view s) {
  if (s.starts_with(kCustomPrefix)) {
    auto label = s.substr(kCustomPrefix.size());
    if (label.empty()) return std::nullopt;
    return Designator{DesignatorKind::kCustom, std::string(label)};
  }
  if (auto k = reverse(kDesignators, s)) return Designator{*k, {}};
  return std::nullopt;
}

std::optional<SegmentName> parse_segment_name(std::string_view s) {
  if (s.starts_with(kOtherPrefix)) {
    auto label = s.substr(kOtherPrefix.size());
    if (label.empty()) return std::nullopt;
    return SegmentName{SegmentKind::kOther, std::string(label)};
  }
  if (auto k = reverse(kSegmentKinds, s)) return SegmentName{*k, {}};
  return std::nullopt;
}

std::string to_string(const Error& e) {
  std::string out = e.code;
  if (!e.subject.empty()) out += "(" + e.subject + ")";
  if (!e.detail.empty()) out += ": " + e.detail;
  return out;
}

}  // namespace metro
