// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

#include "metro/model.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <utility>

namespace metro {
namespace {

template <typename T>
const T* find_in(const IdMap<T>& map, std::string_view id) {
  auto it = map.find(id);
  return it == map.end() ? nullptr : &it->second;
}

void sort_unique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string field(std::string_view collection, std::string_view id,
                  std::string_view name) {
  std::string out(collection);
  out += "[";
  out += id;
  out += "].";
  out += name;
  return out;
}

}  // namespace

namespace detail {

// Accumulates violations while loading parts into id maps.
class ModelBuilder {
 public:
  explicit ModelBuilder(ModelParts parts) : parts_(std::move(parts)) {}

  Result<Model> run(Model model);

 private:
  template <typename T>
  void load(std::vector<T>& items, IdMap<T>& out, std::string_view collection);

  void dangling(std::string_view id, std::string path) {
    add("E-DANGLING-REF", std::string(id), std::move(path));
  }
  void add(std::string code, std::string subject, std::string detail = {}) {
    errors_.push_back({std::move(code), std::move(subject), std::move(detail)});
  }

  void check_layers(const Model& m);
  void check_sites(const Model& m);
  void check_elements(const Model& m);
  void check_links(Model& m);
  void check_reference_points(const Model& m);
  void check_segments(const Model& m);

  bool present(const Model& m, std::string_view e, std::string_view layer) const {
    const auto* el = find_in(m.elements(), e);
    if (el == nullptr) return false;
    return std::find(el->present_at_layers.begin(), el->present_at_layers.end(),
                     layer) != el->present_at_layers.end();
  }
  std::set<std::string> servers_of(const Model& m, std::string_view layer) const;

  ModelParts parts_;
  std::vector<Error> errors_;
  bool layers_acyclic_ = true;
};

template <typename T>
void ModelBuilder::load(std::vector<T>& items, IdMap<T>& out,
                   std::string_view collection) {
  for (auto& item : items) {
    if (out.count(item.id) != 0) {
      add("E-DUP-ID", item.id, std::string(collection));
      continue;
    }
    std::string id = item.id;
    out.emplace(std::move(id), std::move(item));
  }
}

std::set<std::string> ModelBuilder::servers_of(const Model& m,
                                          std::string_view layer) const {
  std::set<std::string> seen;
  std::vector<std::string> stack{std::string(layer)};
  while (!stack.empty()) {
    auto cur = std::move(stack.back());
    stack.pop_back();
    const auto* l = find_in(m.layers(), cur);
    if (l == nullptr) continue;
    for (const auto& s : l->server_layers) {
      if (seen.insert(s).second) stack.push_back(s);
    }
  }
  seen.erase(std::string(layer));
  return seen;
}

void ModelBuilder::check_layers(const Model& m) {
  bool any_media = false;
  for (const auto& [id, layer] : m.layers()) {
    if (layer.kind == LayerKind::kTransmissionMedia) {
      any_media = true;
      if (!layer.server_layers.empty()) {
        add("E-LAYER-KIND", id, "transmission-media layer declares server layers");
      }
    } else if (layer.server_layers.empty()) {
      add("E-LAYER-KIND", id, "path layer has no server layer");
    }
    for (const auto& s : layer.server_layers) {
      if (find_in(m.layers(), s) == nullptr) {
        dangling(s, field("layers", id, "server_layers"));
      }
    }
  }
  if (!any_media) add("E-NO-MEDIA-LAYER", "", "model has no transmission-media layer");

  // Tarjan SCC over client->server edges; any SCC with a cycle is reported
  // once, by its smallest layer id.
  std::map<std::string, int> index;
  std::map<std::string, int> low;
  std::set<std::string> on_stack;
  std::vector<std::string> stack;
  int counter = 0;
  std::function<void(const std::string&)> visit = [&](const std::string& v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack.insert(v);
    bool self_loop = false;
    for (const auto& w : m.layers().at(v).server_layers) {
      if (find_in(m.layers(), w) == nullptr) continue;
      if (w == v) self_loop = true;
      if (index.count(w) == 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack.count(w) != 0) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::string> scc;
      std::string w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack.erase(w);
        scc.push_back(w);
      } while (w != v);
      if (scc.size() > 1 || self_loop) {
        layers_acyclic_ = false;
        add("E-LAYER-CYCLE", *std::min_element(scc.begin(), scc.end()),
            "client/server relation between layers is cyclic");
      }
    }
  };
  for (const auto& [id, _] : m.layers()) {
    if (index.count(id) == 0) visit(id);
  }
}

void ModelBuilder::check_sites(const Model& m) {
  for (const auto& [id, site] : m.sites()) {
    if (site.power_headroom_w < 0.0) {
      add("E-SITE-POWER", id, "power_headroom_w is negative");
    } else if (!site.has_power && site.power_headroom_w != 0.0) {
      add("E-SITE-POWER", id, "unpowered site declares power headroom");
    }
  }
}

void ModelBuilder::check_elements(const Model& m) {
  for (const auto& [id, el] : m.elements()) {
    if (find_in(m.sites(), el.site_id) == nullptr) {
      dangling(el.site_id, field("elements", id, "site_id"));
    }
    if (el.power_draw_w < 0.0) {
      add("E-ELEMENT-POWER", id, "power_draw_w is negative");
    } else if (!el.powered && el.power_draw_w != 0.0) {
      add("E-ELEMENT-POWER", id, "unpowered element declares power draw");
    }
    for (const auto& l : el.present_at_layers) {
      if (find_in(m.layers(), l) == nullptr) {
        dangling(l, field("elements", id, "present_at_layers"));
      }
    }
    for (const auto& l : el.transparent_at_layers) {
      if (find_in(m.layers(), l) == nullptr) {
        dangling(l, field("elements", id, "transparent_at_layers"));
        continue;
      }
      if (std::find(el.present_at_layers.begin(), el.present_at_layers.end(), l) !=
          el.present_at_layers.end()) {
        add("E-LAYER-OVERLAP", id, "layer " + l + " is both present and transparent");
        continue;
      }
      if (!layers_acyclic_) continue;
      auto servers = servers_of(m, l);
      bool supported = std::any_of(
          el.present_at_layers.begin(), el.present_at_layers.end(),
          [&](const std::string& p) { return servers.count(p) != 0; });
      if (!supported) {
        add("E-TRANSPARENT-UNSUPPORTED", id,
            "no present layer serves transparent layer " + l);
      }
    }
  }
}

void ModelBuilder::check_links(Model& m) {
  for (auto& [id, link] : m.links_) {
    const auto* layer = find_in(m.layers(), link.layer_id);
    if (layer == nullptr) {
      dangling(link.layer_id, field("links", id, "layer_id"));
      continue;
    }
    bool endpoints_ok = true;
    for (const auto* end : {&link.endpoint_a, &link.endpoint_b}) {
      if (find_in(m.elements(), *end) == nullptr) {
        dangling(*end, field("links", id, end == &link.endpoint_a ? "endpoint_a"
                                                                   : "endpoint_b"));
        endpoints_ok = false;
      } else if (!present(m, *end, link.layer_id)) {
        add("E-LINK-ENDPOINT", id, *end + " is not present at " + link.layer_id);
      }
    }
    if (link.endpoint_a == link.endpoint_b) {
      add("E-LINK-ENDPOINT", id, "link joins an element to itself");
    }

    if (layer->kind == LayerKind::kTransmissionMedia) {
      if (!link.server_trail.empty() || !link.server_layer.empty()) {
        add("E-TRAIL", id, "transmission-media link declares a server trail");
      }
      continue;
    }
    if (link.server_layer.empty() && layer->server_layers.size() == 1) {
      link.server_layer = layer->server_layers.front();
    }
    if (link.server_layer.empty()) {
      add("E-TRAIL", id, "server_layer required: layer has several server layers");
      continue;
    }
    if (std::find(layer->server_layers.begin(), layer->server_layers.end(),
                  link.server_layer) == layer->server_layers.end()) {
      add("E-TRAIL", id, link.server_layer + " is not a server layer of " +
                             link.layer_id);
      continue;
    }
    const auto& trail = link.server_trail;
    if (trail.size() < 2) {
      add("E-TRAIL", id, "path-layer link needs a server trail of two or more elements");
      continue;
    }
    if (endpoints_ok &&
        (trail.front() != link.endpoint_a || trail.back() != link.endpoint_b)) {
      add("E-TRAIL", id, "server trail must run from endpoint_a to endpoint_b");
    }
    bool trail_ok = true;
    for (const auto& e : trail) {
      if (find_in(m.elements(), e) == nullptr) {
        dangling(e, field("links", id, "server_trail"));
        trail_ok = false;
      } else if (!present(m, e, link.server_layer)) {
        add("E-TRAIL", id, e + " is not present at server layer " + link.server_layer);
        trail_ok = false;
      }
    }
    if (!trail_ok) continue;
    for (std::size_t i = 0; i + 1 < trail.size(); ++i) {
      const auto& a = trail[i];
      const auto& b = trail[i + 1];
      bool joined = std::any_of(m.links().begin(), m.links().end(), [&](const auto& kv) {
        const Link& l = kv.second;
        return l.layer_id == link.server_layer &&
               ((l.endpoint_a == a && l.endpoint_b == b) ||
                (l.endpoint_a == b && l.endpoint_b == a));
      });
      if (!joined) {
        add("E-TRAIL", id, "no " + link.server_layer + " link joins " + a + " and " + b);
      }
    }
  }
}

void ModelBuilder::check_reference_points(const Model& m) {
  for (const auto& [id, rp] : m.reference_points()) {
    const auto* layer = find_in(m.layers(), rp.layer_id);
    if (layer == nullptr) dangling(rp.layer_id, field("reference_points", id, "layer_id"));

    if (rp.subsumed() != rp.subsuming_element.has_value()) {
      add("E-SUBSUMPTION", id,
          "accessibility subsumed requires subsuming_element and vice versa");
      continue;
    }
    if (rp.subsumed()) {
      const auto& holder = *rp.subsuming_element;
      if (find_in(m.elements(), holder) == nullptr) {
        dangling(holder, field("reference_points", id, "subsuming_element"));
      } else if (layer != nullptr && !present(m, holder, rp.layer_id)) {
        add("E-RP-ENDPOINT", id, holder + " is not present at " + rp.layer_id);
      }
      for (const auto* fn : {&rp.upstream_element, &rp.downstream_element}) {
        if (!parse_functional_group(*fn)) {
          add("E-SUBSUMPTION", id, "subsumed endpoint '" + *fn +
                                       "' is not a functional group");
        }
      }
      if (rp.kind == RpKind::kRpiN) {
        add("E-RPIN-NOT-ADJACENT", id, "a subsumed RP has no physical adjacency");
      } else if (rp.kind == RpKind::kAccessPoint) {
        add("E-ACCESS-POINT", id, "an access point cannot be subsumed");
      }
      continue;
    }

    bool ends_ok = true;
    for (const auto* end : {&rp.upstream_element, &rp.downstream_element}) {
      if (find_in(m.elements(), *end) == nullptr) {
        dangling(*end, field("reference_points", id,
                             end == &rp.upstream_element ? "upstream_element"
                                                         : "downstream_element"));
        ends_ok = false;
      } else if (layer != nullptr && !present(m, *end, rp.layer_id)) {
        add("E-RP-ENDPOINT", id, *end + " is not present at " + rp.layer_id);
        ends_ok = false;
      }
    }
    if (!ends_ok || layer == nullptr) continue;

    if (rp.kind == RpKind::kAccessPoint) {
      if (rp.upstream_element != rp.downstream_element) {
        add("E-ACCESS-POINT", id, "access point endpoints must name one element");
        continue;
      }
      const auto& el = m.elements().at(rp.upstream_element);
      bool joins = std::any_of(
          el.present_at_layers.begin(), el.present_at_layers.end(),
          [&](const std::string& other) {
            if (other == rp.layer_id) return false;
            const auto* ol = find_in(m.layers(), other);
            if (ol == nullptr) return false;
            auto is_server = [](const LayerNetwork& l, const std::string& s) {
              return std::find(l.server_layers.begin(), l.server_layers.end(), s) !=
                     l.server_layers.end();
            };
            return is_server(*layer, other) || is_server(*ol, rp.layer_id);
          });
      if (!joins) {
        add("E-ACCESS-POINT", id,
            "element is not present at a client or server of " + rp.layer_id);
      }
      continue;
    }
    if (rp.upstream_element == rp.downstream_element) {
      add("E-RP-ENDPOINT", id, "reference point joins an element to itself");
      continue;
    }
    if (rp.kind == RpKind::kRpiN) {
      bool adjacent = false;
      if (layer->kind == LayerKind::kTransmissionMedia) {
        adjacent = std::any_of(m.links().begin(), m.links().end(), [&](const auto& kv) {
          const Link& l = kv.second;
          return l.layer_id == rp.layer_id &&
                 ((l.endpoint_a == rp.upstream_element &&
                   l.endpoint_b == rp.downstream_element) ||
                  (l.endpoint_b == rp.upstream_element &&
                   l.endpoint_a == rp.downstream_element));
        });
      }
      if (!adjacent) {
        add("E-RPIN-NOT-ADJACENT", id,
            "no transmission-media link joins upstream and downstream elements");
      }
    }
  }
}

void ModelBuilder::check_segments(const Model& m) {
  for (const auto& [id, seg] : m.segments()) {
    std::vector<const ReferencePoint*> rps;
    for (const auto& rid : seg.bounding_rp_ids) {
      const auto* rp = find_in(m.reference_points(), rid);
      if (rp == nullptr) {
        dangling(rid, field("segments", id, "bounding_rp_ids"));
      } else {
        rps.push_back(rp);
      }
    }
    std::set<std::string> layers;
    for (const auto* rp : rps) {
      if (rp->kind != RpKind::kAccessPoint) layers.insert(rp->layer_id);
    }
    if (layers.size() > 1) {
      add("E-SEGMENT-UNLIKE", id, "bounding reference points span several layers");
      continue;
    }
    if (layers.empty()) {
      for (const auto* rp : rps) layers.insert(rp->layer_id);
      if (layers.size() > 1) {
        add("E-SEGMENT-UNLIKE", id, "access points are declared onto several layers");
      }
      continue;
    }
    const auto& layer = *layers.begin();
    for (const auto* rp : rps) {
      if (rp->kind != RpKind::kAccessPoint || rp->layer_id == layer) continue;
      if (!present(m, rp->upstream_element, layer)) {
        add("E-SEGMENT-UNLIKE", id,
            "access point " + rp->id + " is not declared onto layer " + layer);
      }
    }
  }
}

Result<Model> ModelBuilder::run(Model model) {
  load(parts_.layers, model.layers_, "layers");
  load(parts_.sites, model.sites_, "sites");
  load(parts_.elements, model.elements_, "elements");
  load(parts_.links, model.links_, "links");
  load(parts_.reference_points, model.rps_, "reference_points");
  load(parts_.segments, model.segments_, "segments");
  model.metadata_ = std::move(parts_.metadata);

  for (auto& [_, l] : model.layers_) sort_unique(l.server_layers);
  for (auto& [_, e] : model.elements_) {
    sort_unique(e.present_at_layers);
    sort_unique(e.transparent_at_layers);
  }
  for (auto& [_, s] : model.segments_) sort_unique(s.bounding_rp_ids);

  check_layers(model);
  check_sites(model);
  check_elements(model);
  check_links(model);
  check_reference_points(model);
  check_segments(model);

  if (!errors_.empty()) {
    normalize(errors_);
    return errors_;
  }
  model.index();
  return model;
}

}  // namespace detail

bool NetworkElement::has_group(FunctionalGroup g) const {
  return std::find(functional_groups.begin(), functional_groups.end(), g) !=
         functional_groups.end();
}

Result<Model> build_model(ModelParts parts) {
  return detail::ModelBuilder(std::move(parts)).run(Model{});
}

Model::Model(const Model& other)
    : metadata_(other.metadata_),
      layers_(other.layers_),
      sites_(other.sites_),
      elements_(other.elements_),
      links_(other.links_),
      rps_(other.rps_),
      segments_(other.segments_) {
  index();
}

Model& Model::operator=(const Model& other) {
  if (this != &other) *this = Model(other);
  return *this;
}

void Model::index() {
  layer_order_.clear();
  links_by_layer_.clear();
  links_by_pair_.clear();
  elements_by_layer_.clear();
  segment_layer_.clear();
  presence_.clear();

  for (const auto& [id, el] : elements_) {
    for (const auto& l : el.present_at_layers) {
      presence_.emplace(id, l);
      elements_by_layer_[l].push_back(id);
    }
  }
  for (const auto& [id, l] : links_) {
    links_by_layer_[l.layer_id].push_back(&l);
    auto [lo, hi] = std::minmax(l.endpoint_a, l.endpoint_b);
    links_by_pair_[{l.layer_id, lo, hi}].push_back(&l);
  }

  // Kahn's algorithm; a layer becomes ready once all its servers are placed.
  std::map<std::string, std::size_t> pending;
  std::map<std::string, std::vector<std::string>> clients;
  using Key = std::pair<int, std::string>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
  for (const auto& [id, l] : layers_) {
    pending[id] = l.server_layers.size();
    for (const auto& s : l.server_layers) clients[s].push_back(id);
    if (l.server_layers.empty()) {
      ready.emplace(l.kind == LayerKind::kTransmissionMedia ? 0 : 1, id);
    }
  }
  while (!ready.empty()) {
    auto [_, id] = ready.top();
    ready.pop();
    layer_order_.push_back(id);
    for (const auto& c : clients[id]) {
      if (--pending[c] == 0) ready.emplace(1, c);
    }
  }

  for (const auto& [id, seg] : segments_) {
    std::string layer;
    for (const auto& rid : seg.bounding_rp_ids) {
      const auto& rp = rps_.at(rid);
      if (rp.kind != RpKind::kAccessPoint) {
        layer = rp.layer_id;
        break;
      }
      if (layer.empty()) layer = rp.layer_id;
    }
    segment_layer_.emplace(id, std::move(layer));
  }
}

const LayerNetwork* Model::find_layer(std::string_view id) const {
  return find_in(layers_, id);
}
const Site* Model::find_site(std::string_view id) const { return find_in(sites_, id); }
const NetworkElement* Model::find_element(std::string_view id) const {
  return find_in(elements_, id);
}
const Link* Model::find_link(std::string_view id) const { return find_in(links_, id); }
const ReferencePoint* Model::find_rp(std::string_view id) const {
  return find_in(rps_, id);
}
const Segment* Model::find_segment(std::string_view id) const {
  return find_in(segments_, id);
}

bool Model::is_present(std::string_view element, std::string_view layer) const {
  return presence_.count(std::pair<std::string, std::string>(element, layer)) != 0;
}

const std::vector<const Link*>& Model::links_at(std::string_view layer) const {
  static const std::vector<const Link*> kEmpty;
  auto it = links_by_layer_.find(layer);
  return it == links_by_layer_.end() ? kEmpty : it->second;
}

std::vector<const Link*> Model::links_between(std::string_view layer,
                                              std::string_view a,
                                              std::string_view b) const {
  if (b < a) std::swap(a, b);
  auto it = links_by_pair_.find({std::string(layer), std::string(a), std::string(b)});
  return it == links_by_pair_.end() ? std::vector<const Link*>{} : it->second;
}

const std::vector<std::string>& Model::elements_at(std::string_view layer) const {
  static const std::vector<std::string> kEmpty;
  auto it = elements_by_layer_.find(layer);
  return it == elements_by_layer_.end() ? kEmpty : it->second;
}

std::vector<const NetworkElement*> Model::elements_at_site(std::string_view site) const {
  std::vector<const NetworkElement*> out;
  for (const auto& [_, e] : elements_) {
    if (e.site_id == site) out.push_back(&e);
  }
  return out;
}

std::set<std::string> Model::transitive_servers(std::string_view layer) const {
  std::set<std::string> seen;
  std::vector<std::string> stack{std::string(layer)};
  while (!stack.empty()) {
    auto cur = std::move(stack.back());
    stack.pop_back();
    for (const auto& s : layers_.at(cur).server_layers) {
      if (seen.insert(s).second) stack.push_back(s);
    }
  }
  return seen;
}

const std::string& Model::segment_layer(std::string_view segment) const {
  static const std::string kEmpty;
  auto it = segment_layer_.find(segment);
  return it == segment_layer_.end() ? kEmpty : it->second;
}

ModelParts Model::parts() const {
  ModelParts p;
  p.metadata = metadata_;
  for (const auto& [_, v] : layers_) p.layers.push_back(v);
  for (const auto& [_, v] : sites_) p.sites.push_back(v);
  for (const auto& [_, v] : elements_) p.elements.push_back(v);
  for (const auto& [_, v] : links_) p.links.push_back(v);
  for (const auto& [_, v] : rps_) p.reference_points.push_back(v);
  for (const auto& [_, v] : segments_) p.segments.push_back(v);
  return p;
}

std::vector<std::string> layer_order(const Model& model) { return model.layer_order(); }

Result<std::vector<std::string>> server_trail(const Model& model,
                                              std::string_view link_id) {
  const auto* link = model.find_link(link_id);
  if (link == nullptr) {
    return Error{"E-NO-SUCH-LINK", std::string(link_id), "link does not exist"};
  }
  if (model.layers().at(link->layer_id).kind == LayerKind::kTransmissionMedia) {
    return Error{"E-MEDIA-HAS-NO-SERVER", std::string(link_id),
                 "transmission-media links are not carried by a server layer"};
  }
  return link->server_trail;
}

}  // namespace metro
