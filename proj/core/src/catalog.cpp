// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

#include "metro/catalog.hpp"

#include <algorithm>
#include <utility>

namespace metro {
namespace {

using G = FunctionalGroup;

constexpr std::string_view kMedia = "media";
constexpr std::string_view kEth = "eth";

// Incremental model assembly with template-local naming conventions: media
// links are named "<a>--<b>", every element sits on the media layer.
class Draft {
 public:
  Draft(const TemplateParams& params, std::string name, std::string comment)
      : params_(params) {
    parts_.metadata.name = std::move(name);
    parts_.metadata.author = "metromodel catalog";
    parts_.metadata.comment = std::move(comment);
    assume("power_draw_w and power_headroom_w are 0 W placeholders");
  }

  const std::string& op() const { return params_.operator_id; }

  void media_layer(std::string info) {
    parts_.layers.push_back(
        {std::string(kMedia), "transmission media", LayerKind::kTransmissionMedia,
         std::move(info), {}});
  }
  void path_layer(std::string_view id, std::string name, std::string info) {
    parts_.layers.push_back({std::string(id), std::move(name), LayerKind::kPath,
                             std::move(info), {std::string(kMedia)}});
  }

  void site(std::string id, std::string name, SpaceClass cls, bool power, bool eth) {
    std::string label = name;
    if (auto it = params_.site_labels.find(id); it != params_.site_labels.end()) {
      label = it->second;
    }
    parts_.sites.push_back({std::move(id), std::move(name), std::move(label), cls,
                            power, 0.0, eth, std::nullopt});
  }

  void element(std::string id, std::string name, std::string site,
               std::vector<G> groups, bool powered = true) {
    bool cpe = site == "prem";
    parts_.elements.push_back(
        {std::move(id), std::move(name), std::move(site),
         cpe ? std::string(kSubscriberOperator) : params_.operator_id,
         std::move(groups), powered, 0.0, {std::string(kMedia)}, {}});
  }

  // Media links a--b, b--c, ...
  void chain(const std::vector<std::string>& ids) {
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
      parts_.links.push_back(
          {ids[i] + "--" + ids[i + 1], std::string(kMedia), ids[i], ids[i + 1], {}, {}});
    }
    chain_ = ids;
  }

  void span(std::vector<std::string> ids) { chain_ = std::move(ids); }

  // Service adjacency at `layer` between the two ends of the media chain;
  // everything in between is transparent at that layer.
  void service_link(std::string_view layer) {
    const auto& a = chain_.front();
    const auto& b = chain_.back();
    for (auto& e : parts_.elements) {
      bool end = e.id == a || e.id == b;
      bool inside = std::find(chain_.begin(), chain_.end(), e.id) != chain_.end();
      if (end) e.present_at_layers.emplace_back(layer);
      else if (inside) e.transparent_at_layers.emplace_back(layer);
    }
    parts_.links.push_back({a + "~" + b, std::string(layer), a, b,
                            std::string(kMedia), chain_});
  }

  void rp(std::string id, DesignatorKind d, std::string up, std::string down,
          RpKind kind = RpKind::kRpiN) {
    parts_.reference_points.push_back({std::move(id), {d, {}}, kind,
                                       std::string(kMedia), std::move(up),
                                       std::move(down), Accessibility::kExternal,
                                       std::nullopt});
  }
  void custom_rp(std::string id, std::string label, std::string up, std::string down) {
    parts_.reference_points.push_back(
        {std::move(id), {DesignatorKind::kCustom, std::move(label)}, RpKind::kRpiN,
         std::string(kMedia), std::move(up), std::move(down),
         Accessibility::kExternal, std::nullopt});
  }
  void subsumed_rp(std::string id, DesignatorKind d, RpKind kind, std::string holder,
                   G up, G down) {
    parts_.reference_points.push_back(
        {std::move(id), {d, {}}, kind, std::string(kMedia),
         std::string(to_string(up)), std::string(to_string(down)),
         Accessibility::kSubsumed, std::move(holder)});
  }

  void segment(std::string id, SegmentName name, std::string op,
               std::vector<std::string> rps) {
    parts_.segments.push_back({std::move(id), std::move(name), std::move(op),
                               std::move(rps)});
  }

  // Standard three-segment split: aggregation above V, access between V and
  // U, customer below U.
  void access_segments() {
    segment("aggregation", {SegmentKind::kAggregation, {}}, op(), {"v"});
    segment("access", {SegmentKind::kAccess, {}}, op(), {"u", "v"});
    segment("customer", {SegmentKind::kCustomer, {}},
            std::string(kSubscriberOperator), {"u"});
  }

  void assume(std::string text) { parts_.metadata.assumed.push_back(std::move(text)); }

  ModelDocument done() && { return {std::string(kSchemaVersion), std::move(parts_)}; }

 private:
  const TemplateParams& params_;
  ModelParts parts_;
  std::vector<std::string> chain_;
};

void central_office(Draft& d, SpaceClass cls = SpaceClass::kCentralOffice,
                    std::string id = "co", std::string name = "central office") {
  d.site(std::move(id), std::move(name), cls, true, true);
}

void premises(Draft& d) {
  d.site("prem", "subscriber premises", SpaceClass::kCustomerPremises, true, false);
}

void standard_layers(Draft& d, std::string media_info) {
  d.media_layer(std::move(media_info));
  d.path_layer(kEth, "Ethernet", "Ethernet MAC frames");
}

// CPE below a network termination `nt` (NT1-bearing): separate NT and RG
// with T and S, or an integrated NT+RG that subsumes T. Returns the chain
// tail starting at the NT or integrated device.
std::vector<std::string> nt_rg_tail(Draft& d, const std::string& nt, bool integrated,
                                    G nt_group, bool with_cmci) {
  const std::string merged = nt + "-rg";
  std::vector<G> nt_groups{nt_group};
  if (nt_group != G::kNT1) nt_groups.push_back(G::kNT1);
  if (integrated) {
    auto groups = nt_groups;
    groups.push_back(G::kRG);
    groups.push_back(G::kNT2);
    d.element(merged, "integrated network termination and gateway", "prem", groups);
    d.element("te", "terminal equipment", "prem", {G::kTE});
    d.subsumed_rp("t", DesignatorKind::kT, RpKind::kIaDI, merged, G::kNT1, G::kRG);
    if (with_cmci) {
      d.subsumed_rp("cmci", DesignatorKind::kCMCI, RpKind::kIaDI, merged, G::kNT1, G::kRG);
    }
    d.rp("s", DesignatorKind::kS, merged, "te");
    return {merged, "te"};
  }
  d.element(nt, "network termination", "prem", nt_groups);
  d.element("rg", "residential gateway", "prem", {G::kRG, G::kNT2});
  d.element("te", "terminal equipment", "prem", {G::kTE});
  d.rp("t", DesignatorKind::kT, nt, "rg");
  if (with_cmci) d.rp("cmci", DesignatorKind::kCMCI, nt, "rg");
  d.rp("s", DesignatorKind::kS, "rg", "te");
  return {nt, "rg", "te"};
}

std::vector<std::string> concat(std::vector<std::string> a,
                                const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Media chain through the CPE; the service adjacency stops at the gateway
// just above the terminal equipment.
void finish_service(Draft& d, const std::vector<std::string>& chain) {
  d.chain(chain);
  d.span({chain.begin(), chain.end() - 1});
}

ModelDocument pon(const TemplateParams& p, bool xgs) {
  std::string tech = xgs ? "XGS-PON" : "GPON";
  Draft d(p, tech + " access",
          "PON reference configuration. R/S coincides with the PAI at the ONU "
          "input (BBF TR-156, ITU-T Y.120). The ephemeral A point between ONU and "
          "adaptation function exists only when the AF is external (ITU-T G.984.1). "
          "An integrated ONU+RG subsumes U (BBF TR-156).");
  standard_layers(d, "single-mode fibre (" + tech + " ODN) and in-home copper");
  central_office(d);
  d.site("fdh", "fibre distribution hub", SpaceClass::kCabinet, false, false);
  premises(d);
  d.element("agg", "aggregation switch", "co", {G::kEthernetSwitch});
  d.element("olt", tech + " OLT", "co", {G::kOLT});
  d.element("splitter", "passive optical splitter", "fdh", {G::kPowerSplitter}, false);
  d.rp("v", DesignatorKind::kV, "agg", "olt");

  std::vector<std::string> chain{"agg", "olt", "splitter"};
  if (p.integrated_cpe) {
    d.element("onu-rg", "integrated ONU and residential gateway", "prem",
              {G::kONU, G::kAF, G::kRG});
    d.element("te", "terminal equipment", "prem", {G::kTE});
    d.rp("pai", DesignatorKind::kPAI, "splitter", "onu-rg");
    d.rp("r-s", DesignatorKind::kRS, "splitter", "onu-rg");
    d.subsumed_rp("u", DesignatorKind::kU, RpKind::kIrDI, "onu-rg", G::kONU, G::kRG);
    d.rp("s", DesignatorKind::kS, "onu-rg", "te");
    chain = concat(chain, {"onu-rg", "te"});
  } else {
    d.element("onu", tech + " ONU", "prem", {G::kONU});
    d.element("af", "adaptation function", "prem", {G::kAF});
    d.element("rg", "residential gateway", "prem", {G::kRG});
    d.element("te", "terminal equipment", "prem", {G::kTE});
    d.rp("pai", DesignatorKind::kPAI, "splitter", "onu");
    d.rp("r-s", DesignatorKind::kRS, "splitter", "onu");
    d.rp("a", DesignatorKind::kAEphemeral, "onu", "af");
    d.rp("u", DesignatorKind::kU, "af", "rg");
    d.rp("s", DesignatorKind::kS, "rg", "te");
    chain = concat(chain, {"onu", "af", "rg", "te"});
    d.assume("U placed between the external adaptation function and the RG");
  }
  d.access_segments();
  finish_service(d, chain);
  d.service_link(kEth);
  return std::move(d).done();
}

ModelDocument xdsl(const TemplateParams& p) {
  Draft d(p, "xDSL access",
          "Copper loop from a central-office DSLAM through the serving area "
          "interface (DI, ITU-T Y.120) to the premises attachment interface. No "
          "active device between PAI and U (BBF TR-043). T separates the B-NT from "
          "the RG (ITU-T I.411, BBF TR-145) and is subsumed by an integrated "
          "xDSL+RG.");
  standard_layers(d, "twisted-pair copper");
  central_office(d);
  d.site("sai", "serving area interface", SpaceClass::kCabinet, false, false);
  premises(d);
  d.element("agg", "aggregation switch", "co", {G::kEthernetSwitch});
  d.element("dslam", "DSLAM", "co", {G::kDSLAM});
  d.element("sai-xc", "SAI cross-connect", "sai", {G::kOther}, false);
  d.element("nid", "network interface device", "prem", {G::kOther}, false);
  d.rp("v", DesignatorKind::kV, "agg", "dslam");
  d.rp("di", DesignatorKind::kDI, "dslam", "sai-xc");
  d.rp("pai", DesignatorKind::kPAI, "sai-xc", "nid");
  auto tail = nt_rg_tail(d, "modem", p.integrated_cpe, G::kNT1, false);
  d.rp("u", DesignatorKind::kU, "nid", tail.front());
  d.access_segments();
  d.assume("DI placed on the feeder side of the SAI cross-connect");
  finish_service(d, concat({"agg", "dslam", "sai-xc", "nid"}, tail));
  d.service_link(kEth);
  return std::move(d).done();
}

ModelDocument gfast(const TemplateParams& p) {
  Draft d(p, "G.fast access",
          "Fibre to the distribution point: a reverse-powered DPU at the PAI/DP "
          "drives the copper drop, so unlike other xDSL an active device lies "
          "between PAI and U.");
  standard_layers(d, "fibre feeder and copper drop");
  central_office(d);
  d.site("dp", "distribution point", SpaceClass::kPedestal, true, true);
  premises(d);
  d.element("agg", "aggregation switch", "co", {G::kEthernetSwitch});
  d.element("olt", "OLT", "co", {G::kOLT});
  d.element("dpu", "distribution point unit", "dp", {G::kONU, G::kDSLAM});
  d.rp("v", DesignatorKind::kV, "agg", "olt");
  d.rp("pai", DesignatorKind::kPAI, "olt", "dpu");
  auto tail = nt_rg_tail(d, "modem", p.integrated_cpe, G::kNT1, false);
  d.rp("u", DesignatorKind::kU, "dpu", tail.front());
  d.access_segments();
  d.assume("DPU fed point-to-point from the OLT; ODN splitters omitted");
  d.assume("DP site counted as having power (reverse powering) and Ethernet uplink");
  finish_service(d, concat({"agg", "olt", "dpu"}, tail));
  d.service_link(kEth);
  return std::move(d).done();
}

ModelDocument hfc(const TemplateParams& p) {
  Draft d(p, "HFC DOCSIS access",
          "Hybrid fibre-coax with an N+5 outside plant: the optical node plus five "
          "powered coaxial actives, power available along the coaxial run. CMCI "
          "coincides with T between cable modem and CPE (CableLabs modular "
          "headend architecture).");
  standard_layers(d, "fibre to the optical node, coaxial cable beyond");
  central_office(d, SpaceClass::kHeadend, "hub", "headend");
  d.site("node-site", "optical node enclosure", SpaceClass::kStreetNode, true, false);
  for (int i = 1; i <= 5; ++i) {
    d.site("coax-" + std::to_string(i), "coaxial amplifier location " + std::to_string(i),
           SpaceClass::kStreetNode, true, false);
  }
  d.site("tap-site", "tap pedestal", SpaceClass::kPedestal, false, false);
  premises(d);
  d.element("agg", "aggregation switch", "hub", {G::kEthernetSwitch});
  d.element("cmts", "CMTS", "hub", {G::kCMTS});
  d.element("node", "optical node", "node-site", {G::kOther});
  std::vector<std::string> chain{"agg", "cmts", "node"};
  for (int i = 1; i <= 5; ++i) {
    auto id = "amp-" + std::to_string(i);
    d.element(id, "coaxial amplifier " + std::to_string(i), "coax-" + std::to_string(i),
              {G::kOther});
    chain.push_back(id);
  }
  d.element("tap", "coaxial tap", "tap-site", {G::kOther}, false);
  chain.push_back("tap");
  d.rp("v", DesignatorKind::kV, "agg", "cmts");
  auto tail = nt_rg_tail(d, "cm", p.integrated_cpe, G::kCM, true);
  d.rp("pai", DesignatorKind::kPAI, "tap", tail.front());
  d.rp("u", DesignatorKind::kU, "tap", tail.front());
  d.access_segments();
  d.assume("PAI and U both placed on the tap drop");
  finish_service(d, concat(chain, tail));
  d.service_link(kEth);
  return std::move(d).done();
}

ModelDocument rfog(const TemplateParams& p) {
  Draft d(p, "RFoG access",
          "Radio frequency over glass: passive ODN from the headend to an RFoG ONU "
          "at the premises feeding a cable modem. R/S coincides with the PAI; CMCI "
          "coincides with T.");
  standard_layers(d, "single-mode fibre (RFoG ODN) and in-home coax");
  central_office(d, SpaceClass::kHeadend, "hub", "headend");
  d.site("fdh", "fibre distribution hub", SpaceClass::kCabinet, false, false);
  premises(d);
  d.element("agg", "aggregation switch", "hub", {G::kEthernetSwitch});
  d.element("cmts", "CMTS", "hub", {G::kCMTS});
  d.element("splitter", "passive optical splitter", "fdh", {G::kPowerSplitter}, false);
  d.element("r-onu", "RFoG ONU", "prem", {G::kONU});
  d.rp("v", DesignatorKind::kV, "agg", "cmts");
  d.rp("pai", DesignatorKind::kPAI, "splitter", "r-onu");
  d.rp("r-s", DesignatorKind::kRS, "splitter", "r-onu");
  auto tail = nt_rg_tail(d, "cm", p.integrated_cpe, G::kCM, true);
  d.rp("u", DesignatorKind::kU, "r-onu", tail.front());
  d.access_segments();
  d.assume("headend optical transmitter folded into the CMTS element");
  finish_service(d, concat({"agg", "cmts", "splitter", "r-onu"}, tail));
  d.service_link(kEth);
  return std::move(d).done();
}

ModelDocument remote_phy(const TemplateParams& p) {
  Draft d(p, "Remote-PHY access",
          "Distributed access architecture: CCAP core at the headend, digital "
          "Ethernet fibre to a remote-PHY node, coax from the node to the tap. "
          "CMCI coincides with T.");
  standard_layers(d, "digital fibre to the node, coaxial cable beyond");
  central_office(d, SpaceClass::kHeadend, "hub", "headend");
  d.site("rpn-site", "remote-PHY node enclosure", SpaceClass::kStreetNode, true, true);
  d.site("tap-site", "tap pedestal", SpaceClass::kPedestal, false, false);
  premises(d);
  d.element("agg", "aggregation switch", "hub", {G::kEthernetSwitch});
  d.element("ccap", "CCAP core", "hub", {G::kCMTS});
  d.element("rpn", "remote-PHY node", "rpn-site", {G::kOther});
  d.element("tap", "coaxial tap", "tap-site", {G::kOther}, false);
  d.rp("v", DesignatorKind::kV, "agg", "ccap");
  d.custom_rp("rphy", "R-PHY", "ccap", "rpn");
  auto tail = nt_rg_tail(d, "cm", p.integrated_cpe, G::kCM, true);
  d.rp("pai", DesignatorKind::kPAI, "tap", tail.front());
  d.rp("u", DesignatorKind::kU, "tap", tail.front());
  d.access_segments();
  d.assume("no coaxial amplifiers between the remote-PHY node and the tap");
  finish_service(d, concat({"agg", "ccap", "rpn", "tap"}, tail));
  d.service_link(kEth);
  return std::move(d).done();
}

ModelDocument ptp(const TemplateParams& p) {
  Draft d(p, "Point-to-point Ethernet access",
          "Active Ethernet over a dedicated fibre from a central-office access "
          "switch to an Ethernet NT at the premises.");
  standard_layers(d, "point-to-point fibre");
  central_office(d);
  premises(d);
  d.element("agg", "aggregation switch", "co", {G::kEthernetSwitch});
  d.element("access-sw", "access switch", "co", {G::kEthernetSwitch});
  d.rp("v", DesignatorKind::kV, "agg", "access-sw");
  auto tail = nt_rg_tail(d, "nt", p.integrated_cpe, G::kNT1, false);
  d.rp("pai", DesignatorKind::kPAI, "access-sw", tail.front());
  d.rp("u", DesignatorKind::kU, "access-sw", tail.front());
  d.access_segments();
  d.assume("PAI and U both placed on the dedicated fibre drop");
  finish_service(d, concat({"agg", "access-sw"}, tail));
  d.service_link(kEth);
  return std::move(d).done();
}

ModelDocument fttx_node(const TemplateParams& p, bool building) {
  Draft d(p, building ? "FTTB access" : "FTTN access",
          "An MSAN at the subscriber end of the ODN aggregates over an XGS-PON ONU "
          "that provides carrier-grade metro Ethernet (ITU-T G.987.1); copper "
          "distribution beyond the MSAN.");
  standard_layers(d, "PON fibre to the MSAN, copper distribution");
  central_office(d);
  d.site("fdh", "fibre distribution hub", SpaceClass::kCabinet, false, false);
  if (building) {
    d.site("node", "building service room", SpaceClass::kServiceRoom, true, true);
  } else {
    d.site("node", "street cabinet", SpaceClass::kCabinet, true, true);
  }
  premises(d);
  d.element("agg", "aggregation switch", "co", {G::kEthernetSwitch});
  d.element("olt", "XGS-PON OLT", "co", {G::kOLT});
  d.element("splitter", "passive optical splitter", "fdh", {G::kPowerSplitter}, false);
  d.element("onu", "XGS-PON ONU (Ethernet uplink)", "node", {G::kONU});
  d.element("msan", "MSAN", "node", {G::kMSAN});
  d.element("nid", "network interface device", "prem", {G::kOther}, false);
  d.rp("v", DesignatorKind::kV, "agg", "olt");
  d.rp("pai", DesignatorKind::kPAI, "msan", "nid");
  auto tail = nt_rg_tail(d, "modem", p.integrated_cpe, G::kNT1, false);
  d.rp("u", DesignatorKind::kU, "nid", tail.front());
  d.access_segments();
  d.assume("no R/S declared: the ODN terminates at the node, not the premises");
  finish_service(d, concat({"agg", "olt", "splitter", "onu", "msan", "nid"}, tail));
  d.service_link(kEth);
  return std::move(d).done();
}

ModelDocument fiveg(const TemplateParams& p) {
  Draft d(p, "5G disaggregated RAN",
          "One functional split: RU to DU over fronthaul, DU to CSR over midhaul, "
          "CSR to aggregation over backhaul, each hop a custom RPI-N.");
  standard_layers(d, "fronthaul, midhaul and backhaul fibre");
  central_office(d);
  d.site("hub", "RAN hub", SpaceClass::kCabinet, true, true);
  d.site("cell", "cell site", SpaceClass::kOther, true, false);
  d.element("agg", "aggregation switch", "co", {G::kEthernetSwitch});
  d.element("csr", "cell site router", "hub", {G::kCSR});
  d.element("du", "distributed unit", "hub", {G::kDU});
  d.element("ru", "radio unit", "cell", {G::kRU});
  d.custom_rp("bh", "backhaul", "agg", "csr");
  d.custom_rp("mh", "midhaul", "csr", "du");
  d.custom_rp("fh", "fronthaul", "du", "ru");
  d.segment("aggregation", {SegmentKind::kAggregation, {}}, d.op(), {"bh"});
  d.segment("backhaul", {SegmentKind::kBackhaul, {}}, d.op(), {"bh", "mh"});
  d.segment("midhaul", {SegmentKind::kMidhaul, {}}, d.op(), {"fh", "mh"});
  d.segment("fronthaul", {SegmentKind::kFronthaul, {}}, d.op(), {"fh"});
  d.assume("DU and CSR co-located at the RAN hub");
  d.assume("the other RAN deployment scenarios are not encoded");
  d.assume("integrated_cpe has no effect on this template");
  d.chain({"agg", "csr", "du", "ru"});
  d.service_link(kEth);
  return std::move(d).done();
}

ModelDocument ip_over_dwdm(const TemplateParams& p) {
  Draft d(p, "IP over DWDM metro",
          "Routers with 400ZR pluggables connect directly over a DWDM line system; "
          "passive OM/OD cabinets and an inline amplifier are invisible at the IP "
          "layer.");
  d.media_layer("DWDM line system");
  d.path_layer("ip", "IP", "IP packets over 400ZR coherent optics");
  d.site("pop-a", "metro PoP A", SpaceClass::kCentralOffice, true, true);
  d.site("pop-b", "metro PoP B", SpaceClass::kCentralOffice, true, true);
  d.site("cab-a", "OM/OD cabinet A", SpaceClass::kCabinet, false, false);
  d.site("cab-b", "OM/OD cabinet B", SpaceClass::kCabinet, false, false);
  d.site("hut", "amplifier hut", SpaceClass::kOther, true, false);
  d.element("pe-a", "PE router A (400ZR)", "pop-a", {G::kPERouter});
  d.element("omod-a", "OM/OD A", "cab-a", {G::kOMOD}, false);
  d.element("amp", "inline optical amplifier", "hut", {G::kOpticalAmplifier});
  d.element("omod-b", "OM/OD B", "cab-b", {G::kOMOD}, false);
  d.element("pe-b", "PE router B (400ZR)", "pop-b", {G::kPERouter});
  d.custom_rp("zr-a", "400ZR-line", "omod-a", "pe-a");
  d.custom_rp("zr-b", "400ZR-line", "omod-b", "pe-b");
  d.segment("metro-core", {SegmentKind::kMetroCore, {}}, d.op(), {"zr-a", "zr-b"});
  d.segment("edge-a", {SegmentKind::kAggregation, {}}, d.op(), {"zr-a"});
  d.segment("edge-b", {SegmentKind::kAggregation, {}}, d.op(), {"zr-b"});
  d.assume("integrated_cpe has no effect on this template");
  d.chain({"pe-a", "omod-a", "amp", "omod-b", "pe-b"});
  d.service_link("ip");
  return std::move(d).done();
}

constexpr std::string_view kNames[] = {
    "FIVEG-RU-DU-CSR", "FTTB",       "FTTN", "GFAST", "GPON", "HFC-DOCSIS",
    "IP-OVER-DWDM",    "PTP-ETHERNET", "REMOTE-PHY", "RFOG", "XDSL", "XGSPON",
};

}  // namespace

const std::vector<TemplateInfo>& list_templates() {
  static const std::vector<TemplateInfo> kCatalog = {
      {TemplateId::kFivegRuDuCsr, "FIVEG-RU-DU-CSR",
       "5G RAN with RU, DU and cell site router over fronthaul/midhaul/backhaul"},
      {TemplateId::kFttb, "FTTB", "MSAN in a building service room over an XGS-PON ONU"},
      {TemplateId::kFttn, "FTTN", "MSAN in a street cabinet over an XGS-PON ONU"},
      {TemplateId::kGfast, "GFAST", "G.fast from a powered distribution point unit"},
      {TemplateId::kGpon, "GPON", "GPON with passive splitter, ONU and optional AF"},
      {TemplateId::kHfcDocsis, "HFC-DOCSIS",
       "Hybrid fibre-coax, optical node plus five powered coaxial actives"},
      {TemplateId::kIpOverDwdm, "IP-OVER-DWDM",
       "Routers with 400ZR optics over a passive DWDM line system"},
      {TemplateId::kPtpEthernet, "PTP-ETHERNET", "Point-to-point active Ethernet"},
      {TemplateId::kRemotePhy, "REMOTE-PHY", "CCAP core with a remote-PHY node"},
      {TemplateId::kRfog, "RFOG", "RF over glass to an RFoG ONU and cable modem"},
      {TemplateId::kXdsl, "XDSL", "Central-office DSLAM over a passive copper loop"},
      {TemplateId::kXgspon, "XGSPON", "XGS-PON with passive splitter, ONU and optional AF"},
  };
  return kCatalog;
}

std::string_view to_string(TemplateId id) {
  return kNames[static_cast<std::size_t>(id)];
}

std::optional<TemplateId> parse_template_id(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kNames); ++i) {
    if (kNames[i] == name) return static_cast<TemplateId>(i);
  }
  return std::nullopt;
}

ModelDocument instantiate_template(TemplateId id, const TemplateParams& params) {
  switch (id) {
    case TemplateId::kFivegRuDuCsr: return fiveg(params);
    case TemplateId::kFttb: return fttx_node(params, true);
    case TemplateId::kFttn: return fttx_node(params, false);
    case TemplateId::kGfast: return gfast(params);
    case TemplateId::kGpon: return pon(params, false);
    case TemplateId::kHfcDocsis: return hfc(params);
    case TemplateId::kIpOverDwdm: return ip_over_dwdm(params);
    case TemplateId::kPtpEthernet: return ptp(params);
    case TemplateId::kRemotePhy: return remote_phy(params);
    case TemplateId::kRfog: return rfog(params);
    case TemplateId::kXdsl: return xdsl(params);
    case TemplateId::kXgspon: return pon(params, true);
  }
  return {};
}

Result<ModelDocument> instantiate_template(std::string_view name,
                                           const TemplateParams& params) {
  auto id = parse_template_id(name);
  if (!id) {
    return Error{"E-UNKNOWN-TEMPLATE", std::string(name), "not in the catalog"};
  }
  return instantiate_template(*id, params);
}

}  // namespace metro
