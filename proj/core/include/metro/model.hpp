// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

// Layered network model: layer networks stacked client-over-server, the
// sites and elements that realize them, links with their server trails, the
// reference points that demarcate functional groups and segments, and the
// segments themselves.

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "metro/result.hpp"

namespace metro {

enum class LayerKind { kTransmissionMedia, kPath };

enum class SpaceClass {
  kCabinet,
  kPedestal,
  kVault,
  kServiceRoom,
  kCentralOffice,
  kHeadend,
  kCustomerPremises,
  kStreetNode,
  kOther,
};

enum class FunctionalGroup {
  kNT1,
  kNT2,
  kAF,
  kRG,
  kTE,
  kONU,
  kOLT,
  kMSAN,
  kDSLAM,
  kCM,
  kCMTS,
  kRU,
  kDU,
  kCSR,
  kOMOD,
  kPowerSplitter,
  kPRouter,
  kPERouter,
  kCERouter,
  kOpticalAmplifier,
  kEthernetSwitch,
  kOther,
};

enum class DesignatorKind {
  kS,
  kT,
  kU,
  kU1,
  kPAI,
  kDI,
  kV,
  kW,
  kRS,
  kCMCI,
  kAEphemeral,
  kUniLegacy,
  kCustom,
};

// Reference point designator. `label` is only meaningful for kCustom.
struct Designator {
  DesignatorKind kind = DesignatorKind::kCustom;
  std::string label;

  friend bool operator==(const Designator&, const Designator&) = default;
};

enum class RpKind { kRpiN, kRpiS, kIrDI, kIaDI, kAccessPoint };

enum class Accessibility { kExternal, kSubsumed };

enum class SegmentKind {
  kCustomer,
  kAccess,
  kAggregation,
  kMetroCore,
  kFronthaul,
  kMidhaul,
  kBackhaul,
  kOther,
};

// Segment name. `label` is only meaningful for kOther.
struct SegmentName {
  SegmentKind kind = SegmentKind::kOther;
  std::string label;

  friend bool operator==(const SegmentName&, const SegmentName&) = default;
};

struct LayerNetwork {
  std::string id;
  std::string name;
  LayerKind kind = LayerKind::kPath;
  std::string characteristic_info;
  std::vector<std::string> server_layers;  // empty iff transmission media

  friend bool operator==(const LayerNetwork&, const LayerNetwork&) = default;
};

struct Site {
  std::string id;
  std::string name;
  std::string location_label;
  SpaceClass space_class = SpaceClass::kOther;
  bool has_power = false;
  double power_headroom_w = 0.0;
  bool has_ethernet_uplink = false;
  // Explicit position on the space scale; overrides the class default.
  std::optional<int> space_rank;

  friend bool operator==(const Site&, const Site&) = default;
};

struct NetworkElement {
  std::string id;
  std::string name;
  std::string site_id;
  std::string operator_id;
  // Declared upstream-to-downstream; the order is significant when a
  // subsumed reference point splits the element.
  std::vector<FunctionalGroup> functional_groups;
  bool powered = false;
  double power_draw_w = 0.0;
  std::vector<std::string> present_at_layers;
  std::vector<std::string> transparent_at_layers;

  bool has_group(FunctionalGroup g) const;
  friend bool operator==(const NetworkElement&, const NetworkElement&) = default;
};

struct Link {
  std::string id;
  std::string layer_id;
  std::string endpoint_a;
  std::string endpoint_b;
  // Layer carrying `server_trail`. May be left empty on input when the
  // client layer has exactly one server layer.
  std::string server_layer;
  std::vector<std::string> server_trail;

  friend bool operator==(const Link&, const Link&) = default;
};

struct ReferencePoint {
  std::string id;
  Designator designator;
  RpKind kind = RpKind::kRpiN;
  std::string layer_id;
  // Element ids for external RPs. For subsumed RPs both endpoints name
  // functional groups of the subsuming element.
  std::string upstream_element;
  std::string downstream_element;
  Accessibility accessibility = Accessibility::kExternal;
  std::optional<std::string> subsuming_element;

  bool subsumed() const { return accessibility == Accessibility::kSubsumed; }
  friend bool operator==(const ReferencePoint&, const ReferencePoint&) = default;
};

struct Segment {
  std::string id;
  SegmentName name;
  std::string operator_id;
  std::vector<std::string> bounding_rp_ids;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct Metadata {
  std::string name;
  std::string author;
  std::string date;
  std::string comment;
  std::vector<std::string> assumed;

  friend bool operator==(const Metadata&, const Metadata&) = default;
};

// Unvalidated collections, as read from a document or assembled by hand.
struct ModelParts {
  std::vector<LayerNetwork> layers;
  std::vector<Site> sites;
  std::vector<NetworkElement> elements;
  std::vector<Link> links;
  std::vector<ReferencePoint> reference_points;
  std::vector<Segment> segments;
  Metadata metadata;

  friend bool operator==(const ModelParts&, const ModelParts&) = default;
};

namespace detail {
class ModelBuilder;
}  // namespace detail

template <typename T>
using IdMap = std::map<std::string, T, std::less<>>;

// Immutable, structurally valid network description. Only build_model
// constructs one; every query is a const read.
class Model {
 public:
  Model() = default;
  Model(const Model& other);
  Model& operator=(const Model& other);
  Model(Model&&) noexcept = default;
  Model& operator=(Model&&) noexcept = default;

  const Metadata& metadata() const { return metadata_; }
  const IdMap<LayerNetwork>& layers() const { return layers_; }
  const IdMap<Site>& sites() const { return sites_; }
  const IdMap<NetworkElement>& elements() const { return elements_; }
  const IdMap<Link>& links() const { return links_; }
  const IdMap<ReferencePoint>& reference_points() const { return rps_; }
  const IdMap<Segment>& segments() const { return segments_; }

  const LayerNetwork* find_layer(std::string_view id) const;
  const Site* find_site(std::string_view id) const;
  const NetworkElement* find_element(std::string_view id) const;
  const Link* find_link(std::string_view id) const;
  const ReferencePoint* find_rp(std::string_view id) const;
  const Segment* find_segment(std::string_view id) const;

  // Media layers first, then topological client-after-server order; ties by id.
  const std::vector<std::string>& layer_order() const { return layer_order_; }

  bool is_present(std::string_view element, std::string_view layer) const;
  // Links at `layer`, sorted by id.
  const std::vector<const Link*>& links_at(std::string_view layer) const;
  // Links at `layer` joining a and b in either direction, sorted by id.
  std::vector<const Link*> links_between(std::string_view layer,
                                         std::string_view a,
                                         std::string_view b) const;
  // Elements present at `layer`, sorted by id.
  const std::vector<std::string>& elements_at(std::string_view layer) const;
  std::vector<const NetworkElement*> elements_at_site(std::string_view site) const;
  // Every layer reachable through server_layers, excluding `layer` itself.
  std::set<std::string> transitive_servers(std::string_view layer) const;
  // Layer the segment's like reference points share; empty when unbounded.
  const std::string& segment_layer(std::string_view segment) const;

  // Canonical parts: collections sorted by id.
  ModelParts parts() const;

  friend bool operator==(const Model& a, const Model& b) {
    return a.parts() == b.parts();
  }

 private:
  friend class detail::ModelBuilder;
  void index();

  Metadata metadata_;
  IdMap<LayerNetwork> layers_;
  IdMap<Site> sites_;
  IdMap<NetworkElement> elements_;
  IdMap<Link> links_;
  IdMap<ReferencePoint> rps_;
  IdMap<Segment> segments_;

  std::vector<std::string> layer_order_;
  IdMap<std::vector<const Link*>> links_by_layer_;
  IdMap<std::vector<std::string>> elements_by_layer_;
  IdMap<std::string> segment_layer_;
  std::set<std::pair<std::string, std::string>, std::less<>> presence_;
  // (layer, lesser endpoint, greater endpoint) -> links, sorted by id.
  std::map<std::tuple<std::string, std::string, std::string>, std::vector<const Link*>>
      links_by_pair_;
};

// Validates every structural invariant and returns either the Model or the
// full, sorted list of violations.
Result<Model> build_model(ModelParts parts);

std::vector<std::string> layer_order(const Model& model);

// Declared server trail of a path-layer link, endpoint_a to endpoint_b.
Result<std::vector<std::string>> server_trail(const Model& model,
                                              std::string_view link_id);

// Enum spellings used in documents and reports.
std::string_view to_string(LayerKind v);
std::string_view to_string(SpaceClass v);
std::string_view to_string(FunctionalGroup v);
std::string_view to_string(RpKind v);
std::string_view to_string(Accessibility v);
std::string to_string(const Designator& v);
std::string to_string(const SegmentName& v);

std::optional<LayerKind> parse_layer_kind(std::string_view s);
std::optional<SpaceClass> parse_space_class(std::string_view s);
std::optional<FunctionalGroup> parse_functional_group(std::string_view s);
std::optional<RpKind> parse_rp_kind(std::string_view s);
std::optional<Accessibility> parse_accessibility(std::string_view s);
std::optional<Designator> parse_designator(std::string_view s);
std::optional<SegmentName> parse_segment_name(std::string_view s);

}  // namespace metro
