// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

#include "metro/recomposition.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <unordered_map>

namespace metro {
namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

bool is_media(const Model& m, std::string_view layer) {
  const auto* l = m.find_layer(layer);
  return l != nullptr && l->kind == LayerKind::kTransmissionMedia;
}

// Distance from the customer edge; lower is further downstream.
std::optional<int> depth(const SegmentName& name) {
  switch (name.kind) {
    case SegmentKind::kCustomer: return 0;
    case SegmentKind::kAccess:
    case SegmentKind::kFronthaul: return 1;
    case SegmentKind::kAggregation:
    case SegmentKind::kMidhaul: return 2;
    case SegmentKind::kBackhaul: return 3;
    case SegmentKind::kMetroCore: return 4;
    case SegmentKind::kOther: return std::nullopt;
  }
  return std::nullopt;
}

bool downstream_of(const Segment& a, const Segment& b) {
  auto da = depth(a.name);
  auto db = depth(b.name);
  if (da && db && *da != *db) return *da < *db;
  return a.id < b.id;
}

// ---- expansion ---------------------------------------------------------

struct Expander {
  const Model& m;
  std::set<std::string> media_reached;

  // Media-level element sequence for one link, endpoint_a to endpoint_b.
  std::optional<std::vector<std::string>> link(const Link& l) {
    if (is_media(m, l.layer_id)) {
      media_reached.insert(l.layer_id);
      return std::vector<std::string>{l.endpoint_a, l.endpoint_b};
    }
    std::vector<std::string> out{l.server_trail.front()};
    for (std::size_t i = 0; i + 1 < l.server_trail.size(); ++i) {
      auto seg = hop(l.server_layer, l.server_trail[i], l.server_trail[i + 1]);
      if (!seg) return std::nullopt;
      out.insert(out.end(), seg->begin() + 1, seg->end());
    }
    return out;
  }

  // a to b over the lowest-id link joining them at `layer`.
  std::optional<std::vector<std::string>> hop(std::string_view layer,
                                              const std::string& a,
                                              const std::string& b) {
    auto links = m.links_between(layer, a, b);
    if (links.empty()) return std::nullopt;
    auto seq = link(*links.front());
    if (seq && links.front()->endpoint_a != a) std::reverse(seq->begin(), seq->end());
    return seq;
  }
};

// ---- recomposition -----------------------------------------------------

// One side of a boundary RP: a region of the cut graph and the vertices in
// it where flooding starts.
struct Side {
  int region = -1;
  std::vector<int> seeds;
  int seed_distance = 0;
};

struct Boundary {
  const ReferencePoint* rp = nullptr;
  // External RPs: [upstream, downstream]. Subsumed RPs: one side per region
  // adjacent to the subsuming element, ordered by smallest member id.
  std::vector<Side> sides;
  int holder = -1;  // subsuming element vertex, isolated in the cut graph
};

class LayerPass {
 public:
  LayerPass(const Model& m, const std::string& layer, CoverageResult& out)
      : m_(m), layer_(layer), out_(out) {}

  void run() {
    for (const auto& [id, seg] : m_.segments()) {
      if (m_.segment_layer(id) == layer_) segs_.push_back(&seg);
    }
    if (segs_.empty()) return;
    build_graph();
    if (bounds_.empty()) return;
    resolve_sides();
    flood();
    capture();
  }

 private:
  void build_graph() {
    ids_ = m_.elements_at(layer_);
    for (std::size_t i = 0; i < ids_.size(); ++i) index_[ids_[i]] = static_cast<int>(i);
    adj_.assign(ids_.size(), {});

    std::set<std::string> seen;
    for (const auto* seg : segs_) {
      for (const auto& rid : seg->bounding_rp_ids) {
        const auto* rp = m_.find_rp(rid);
        if (rp->kind == RpKind::kAccessPoint || rp->layer_id != layer_) continue;
        if (!seen.insert(rid).second) continue;
        Boundary b;
        b.rp = rp;
        if (rp->subsumed()) {
          b.holder = vertex(*rp->subsuming_element);
        } else {
          cut_.insert(pair(vertex(rp->upstream_element), vertex(rp->downstream_element)));
        }
        bounds_.emplace(rid, std::move(b));
      }
    }
    std::set<int> isolated;
    for (const auto& [rid, b] : bounds_) {
      if (b.holder >= 0) isolated.insert(b.holder);
    }

    full_adj_.assign(ids_.size(), {});
    for (const Link* l : m_.links_at(layer_)) {
      int a = vertex(l->endpoint_a);
      int b = vertex(l->endpoint_b);
      if (a < 0 || b < 0 || a == b || cut_.count(pair(a, b))) continue;
      full_adj_[a].push_back(b);
      full_adj_[b].push_back(a);
      if (isolated.count(a) || isolated.count(b)) continue;
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }

    region_.assign(ids_.size(), -1);
    int next = 0;
    for (std::size_t s = 0; s < ids_.size(); ++s) {
      if (region_[s] >= 0) continue;
      std::deque<int> q{static_cast<int>(s)};
      region_[s] = next;
      while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj_[v]) {
          if (region_[w] < 0) {
            region_[w] = next;
            q.push_back(w);
          }
        }
      }
      ++next;
    }

    for (auto& [rid, b] : bounds_) {
      if (b.holder < 0) {
        int up = vertex(b.rp->upstream_element);
        int down = vertex(b.rp->downstream_element);
        b.sides = {{region_[up], {up}, 0}, {region_[down], {down}, 0}};
        continue;
      }
      std::map<int, std::vector<int>> by_region;
      for (int w : full_adj_[b.holder]) by_region[region_[w]].push_back(w);
      for (auto& [r, seeds] : by_region) {
        std::sort(seeds.begin(), seeds.end());
        seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
        b.sides.push_back({r, seeds, 1});
      }
      // Vertex ids follow element id order, so seeds.front() is the smallest.
      std::sort(b.sides.begin(), b.sides.end(),
                [](const Side& x, const Side& y) { return x.seeds.front() < y.seeds.front(); });
    }
  }

  int vertex(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
  }
  static std::pair<int, int> pair(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

  // Regions in which `rp` has a foothold.
  std::set<int> footholds(const Boundary& b) const {
    std::set<int> out;
    for (const auto& s : b.sides) out.insert(s.region);
    return out;
  }

  std::vector<const Boundary*> boundaries_of(const Segment& seg) const {
    std::vector<const Boundary*> out;
    for (const auto& rid : seg.bounding_rp_ids) {
      auto it = bounds_.find(rid);
      if (it != bounds_.end()) out.push_back(&it->second);
    }
    return out;
  }

  std::vector<const Segment*> sharing(const std::string& rid, const Segment* except) const {
    std::vector<const Segment*> out;
    for (const auto* seg : segs_) {
      if (seg == except) continue;
      const auto& ids = seg->bounding_rp_ids;
      if (std::binary_search(ids.begin(), ids.end(), rid)) out.push_back(seg);
    }
    return out;
  }

  using Key = std::pair<std::string, std::string>;  // (segment, rp)

  void resolve_sides() {
    // (a) the side that reaches another of the segment's own boundaries.
    std::map<Key, std::vector<std::size_t>> by_reach;
    for (const auto* seg : segs_) {
      auto own = boundaries_of(*seg);
      for (const auto* b : own) {
        std::set<int> others;
        for (const auto* o : own) {
          if (o == b) continue;
          auto f = footholds(*o);
          others.insert(f.begin(), f.end());
        }
        std::vector<std::size_t> hit;
        for (std::size_t i = 0; i < b->sides.size(); ++i) {
          if (others.count(b->sides[i].region)) hit.push_back(i);
        }
        if (!hit.empty() && hit.size() < b->sides.size()) {
          by_reach[{seg->id, b->rp->id}] = hit;
        }
      }
    }

    for (const auto* seg : segs_) {
      for (const auto* b : boundaries_of(*seg)) {
        Key key{seg->id, b->rp->id};
        if (auto it = by_reach.find(key); it != by_reach.end()) {
          chosen_[key] = it->second;
          continue;
        }
        auto partners = sharing(b->rp->id, seg);
        // (b) the complement of a partner's reach-resolved side.
        bool done = false;
        for (const auto* p : partners) {
          auto it = by_reach.find({p->id, b->rp->id});
          if (it == by_reach.end()) continue;
          std::vector<std::size_t> rest;
          for (std::size_t i = 0; i < b->sides.size(); ++i) {
            if (std::find(it->second.begin(), it->second.end(), i) == it->second.end()) {
              rest.push_back(i);
            }
          }
          if (!rest.empty()) {
            chosen_[key] = rest;
            done = true;
            break;
          }
        }
        if (done) continue;
        // (c) depth order against the first partner, or the segment's own
        // kind when it is alone on this boundary.
        bool downstream = partners.empty() ? seg->name.kind == SegmentKind::kCustomer
                                           : downstream_of(*seg, *partners.front());
        std::vector<std::size_t> pick;
        if (b->sides.empty()) {
          // Holder with no neighbours at this layer.
        } else if (downstream) {
          for (std::size_t i = 1; i < b->sides.size(); ++i) pick.push_back(i);
          if (pick.empty()) pick.push_back(0);
        } else {
          pick.push_back(0);
        }
        chosen_[key] = pick;
      }
    }
  }

  void flood() {
    for (const auto* seg : segs_) {
      auto& dist = dist_[seg->id];
      auto& via = via_[seg->id];
      dist.assign(ids_.size(), kUnreached);
      via.assign(ids_.size(), nullptr);
      // Seeds ordered by (distance, rp id) so ties resolve to the smaller RP.
      std::vector<std::tuple<int, std::string, int>> seeds;
      for (const auto* b : boundaries_of(*seg)) {
        for (std::size_t i : chosen_[{seg->id, b->rp->id}]) {
          const Side& s = b->sides[i];
          for (int v : s.seeds) seeds.emplace_back(s.seed_distance, b->rp->id, v);
        }
      }
      std::sort(seeds.begin(), seeds.end());
      std::deque<int> q;
      for (const auto& [d, rid, v] : seeds) {
        if (dist[v] <= d) continue;
        dist[v] = d;
        via[v] = m_.find_rp(rid);
        q.push_back(v);
      }
      // Seeds at distance 0 precede distance 1, so a plain BFS stays ordered.
      while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj_[v]) {
          if (dist[w] != kUnreached) continue;
          dist[w] = dist[v] + 1;
          via[w] = via[v];
          q.push_back(w);
        }
      }
    }
  }

  // Nearest claiming segment for a vertex, or nullptr.
  const Segment* owner(int v, bool warn) {
    const Segment* best = nullptr;
    int best_d = kUnreached;
    bool tie = false;
    for (const auto* seg : segs_) {  // ascending id
      int d = dist_[seg->id][v];
      if (d == kUnreached) continue;
      if (d < best_d) {
        best = seg;
        best_d = d;
        tie = false;
      } else if (d == best_d) {
        tie = true;
      }
    }
    if (tie && warn) {
      std::string names;
      for (const auto* seg : segs_) {
        if (dist_[seg->id][v] == best_d) names += (names.empty() ? "" : ",") + seg->id;
      }
      out_.warnings.push_back("overlap: " + ids_[v] + " equidistant from segments " + names +
                              "; assigned to " + best->id);
    }
    return best;
  }

  bool takes(const std::string& id) const {
    const auto* e = m_.find_element(id);
    return e != nullptr && e->powered && !out_.assignment.count(id);
  }

  void assign(const std::string& element, const Segment& seg, const ReferencePoint& rp) {
    out_.assignment[element] = seg.id;
    out_.rp_trace[seg.id].push_back({element, layer_, rp.id});
  }

  void capture() {
    std::vector<const Segment*> owners(ids_.size(), nullptr);
    for (std::size_t v = 0; v < ids_.size(); ++v) {
      owners[v] = owner(static_cast<int>(v), takes(ids_[v]));
      if (owners[v] != nullptr && takes(ids_[v])) {
        assign(ids_[v], *owners[v], *via_[owners[v]->id][v]);
      }
    }

    // A subsuming element is charged to the upstream segment on its RP.
    for (const auto& [rid, b] : bounds_) {
      if (b.holder < 0 || !takes(ids_[b.holder])) continue;
      auto segs = sharing(rid, nullptr);
      const Segment* up = segs.front();
      for (const auto* s : segs) {
        if (downstream_of(*up, *s)) up = s;
      }
      assign(ids_[b.holder], *up, *b.rp);
    }

    // Server-layer elements beneath links wholly inside one segment.
    if (is_media(m_, layer_)) return;
    Expander ex{m_, {}};
    for (const Link* l : m_.links_at(layer_)) {
      int a = vertex(l->endpoint_a);
      int b = vertex(l->endpoint_b);
      if (a < 0 || b < 0 || owners[a] == nullptr || owners[a] != owners[b]) continue;
      auto seq = ex.link(*l);
      if (!seq) continue;
      for (const auto& id : *seq) {
        if (takes(id)) assign(id, *owners[a], *via_[owners[a]->id][a]);
      }
    }
  }

  const Model& m_;
  const std::string& layer_;
  CoverageResult& out_;

  std::vector<const Segment*> segs_;  // ascending id
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> adj_;       // cut graph
  std::vector<std::vector<int>> full_adj_;  // cut graph plus holder edges
  std::set<std::pair<int, int>> cut_;
  std::vector<int> region_;
  std::map<std::string, Boundary> bounds_;
  std::map<Key, std::vector<std::size_t>> chosen_;
  std::map<std::string, std::vector<int>> dist_;
  std::map<std::string, std::vector<const ReferencePoint*>> via_;
};

}  // namespace

CoverageResult serial_recomposition(const Model& model) {
  CoverageResult out;
  for (const auto& layer : model.layer_order()) LayerPass(model, layer, out).run();
  for (const auto& [id, e] : model.elements()) {
    if (e.powered && !out.assignment.count(id)) out.uncaptured.push_back(id);
  }
  return out;
}

Result<PathTrace> expand_path(const Model& model, std::string_view layer_id,
                              const std::vector<std::string>& path) {
  if (model.find_layer(layer_id) == nullptr) {
    return Error{"E-NO-SUCH-LAYER", std::string(layer_id), "unknown layer"};
  }
  if (path.empty()) return Error{"E-NOT-A-PATH", "0", "empty path"};
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (model.find_element(path[i]) == nullptr) {
      return Error{"E-NOT-A-PATH", std::to_string(i), "unknown element " + path[i]};
    }
  }

  Expander ex{model, {}};
  std::vector<std::string> seq{path.front()};
  for (std::size_t i = 1; i < path.size(); ++i) {
    auto hop = ex.hop(layer_id, path[i - 1], path[i]);
    if (!hop) {
      return Error{"E-NOT-A-PATH", std::to_string(i),
                   "no " + std::string(layer_id) + " link joins " + path[i - 1] + " and " +
                       path[i]};
    }
    seq.insert(seq.end(), hop->begin() + 1, hop->end());
  }

  PathTrace trace;
  if (is_media(model, layer_id)) {
    trace.layer_id = std::string(layer_id);
  } else {
    auto servers = model.transitive_servers(layer_id);
    const auto& reached = ex.media_reached.empty() ? servers : ex.media_reached;
    for (const auto& l : model.layer_order()) {
      if (reached.count(l) && is_media(model, l)) {
        trace.layer_id = l;
        break;
      }
    }
  }
  std::set<std::string_view> named(path.begin(), path.end());
  for (auto& id : seq) {
    trace.visible.push_back(named.count(id) > 0);
    trace.elements.push_back(std::move(id));
  }
  return trace;
}

Result<std::vector<std::string>> detect_hidden_consumers(
    const Model& model, std::string_view layer_id, const std::vector<std::string>& path) {
  auto trace = expand_path(model, layer_id, path);
  if (!trace) return trace.errors();
  std::set<std::string> hidden;
  for (std::size_t i = 0; i < trace->elements.size(); ++i) {
    const auto& id = trace->elements[i];
    if (!trace->visible[i] && model.find_element(id)->powered) hidden.insert(id);
  }
  return std::vector<std::string>(hidden.begin(), hidden.end());
}

}  // namespace metro
