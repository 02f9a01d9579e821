// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

#include "generators.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <map>
#include <set>

namespace metro::testing {
namespace {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}
bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1))];
}

std::string id(const char* prefix, int n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%02d", prefix, n);
  return buf;
}

SegmentName random_segment_name(Rng& rng) {
  static const std::vector<SegmentKind> kinds{
      SegmentKind::kCustomer,  SegmentKind::kAccess,   SegmentKind::kAggregation,
      SegmentKind::kMetroCore, SegmentKind::kFronthaul, SegmentKind::kMidhaul,
      SegmentKind::kBackhaul,  SegmentKind::kOther};
  auto k = pick(rng, kinds);
  return {k, k == SegmentKind::kOther ? "x" : ""};
}

Site one_site() {
  return {"s", "site", "site", SpaceClass::kOther, true, 0.0, false, std::nullopt};
}

NetworkElement random_element(Rng& rng, std::string eid) {
  NetworkElement e;
  e.id = std::move(eid);
  e.name = e.id;
  e.site_id = "s";
  e.operator_id = "op";
  e.functional_groups = {FunctionalGroup::kOther};
  e.powered = coin(rng, 0.75);
  e.power_draw_w = e.powered ? uniform(rng, 0, 500) : 0.0;
  return e;
}

// Shortest hop route between a and b over the given links.
std::vector<std::string> route(const std::vector<Link>& links, const std::string& layer,
                               const std::string& a, const std::string& b) {
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& l : links) {
    if (l.layer_id != layer) continue;
    adj[l.endpoint_a].push_back(l.endpoint_b);
    adj[l.endpoint_b].push_back(l.endpoint_a);
  }
  std::map<std::string, std::string> prev{{a, a}};
  std::deque<std::string> q{a};
  while (!q.empty()) {
    auto v = q.front();
    q.pop_front();
    if (v == b) break;
    for (const auto& w : adj[v]) {
      if (prev.emplace(w, v).second) q.push_back(w);
    }
  }
  if (!prev.count(b)) return {};
  std::vector<std::string> out{b};
  while (out.back() != a) out.push_back(prev[out.back()]);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

LayeredCase random_layered(Rng& rng) {
  LayeredCase c;
  auto& p = c.parts;
  int n_el = uniform(rng, 2, 12);
  int n_layers = uniform(rng, 1, 4);

  std::vector<std::string> all;
  for (int i = 0; i < n_el; ++i) all.push_back(id("e", i));
  std::vector<std::vector<std::string>> present{all};
  for (int i = 1; i < n_layers; ++i) {
    std::vector<std::string> keep;
    for (const auto& e : present.back()) {
      if (coin(rng, 0.65)) keep.push_back(e);
    }
    if (keep.size() < 2) break;
    present.push_back(keep);
  }
  n_layers = static_cast<int>(present.size());

  for (int i = 0; i < n_layers; ++i) {
    LayerNetwork l;
    l.id = id("L", i);
    l.name = l.id;
    if (i == 0) {
      l.kind = LayerKind::kTransmissionMedia;
    } else {
      l.kind = LayerKind::kPath;
      l.server_layers.push_back(id("L", i - 1));
      if (i == 2 && coin(rng, 0.3)) l.server_layers.push_back(id("L", 0));
    }
    p.layers.push_back(l);
  }
  p.sites.push_back(one_site());
  for (const auto& eid : all) {
    auto e = random_element(rng, eid);
    for (int i = 0; i < n_layers; ++i) {
      if (std::count(present[i].begin(), present[i].end(), eid)) {
        e.present_at_layers.push_back(id("L", i));
      }
    }
    p.elements.push_back(std::move(e));
  }

  int link_no = 0;
  auto add_link = [&](const std::string& layer, std::string a, std::string b,
                      std::string server, std::vector<std::string> trail) {
    if (coin(rng)) {
      std::swap(a, b);
      std::reverse(trail.begin(), trail.end());
    }
    p.links.push_back({id("k", link_no++), layer, a, b, server, trail});
  };

  // Media: random tree plus a few chords.
  for (int i = 1; i < n_el; ++i) add_link("L00", all[i], all[uniform(rng, 0, i - 1)], "", {});
  for (int extra = uniform(rng, 0, 3); extra > 0; --extra) {
    int a = uniform(rng, 0, n_el - 1);
    int b = uniform(rng, 0, n_el - 1);
    if (a != b) add_link("L00", all[a], all[b], "", {});
  }

  for (int i = 1; i < n_layers; ++i) {
    const auto& here = present[i];
    const auto& servers = p.layers[i].server_layers;
    int target = uniform(rng, 1, static_cast<int>(here.size()) + 1);
    for (int attempt = 0; attempt < 4 * target && target > 0; ++attempt) {
      const auto& a = pick(rng, here);
      const auto& b = pick(rng, here);
      if (a == b) continue;
      const auto& s = pick(rng, servers);
      auto trail = route(p.links, s, a, b);
      if (trail.empty()) continue;
      add_link(id("L", i), a, b, s, trail);
      --target;
    }
  }

  // Transparency declarations at layers an element is absent from.
  for (int t = uniform(rng, 0, 3); t > 0 && n_layers > 1; --t) {
    auto& e = p.elements[uniform(rng, 0, n_el - 1)];
    auto layer = id("L", uniform(rng, 1, n_layers - 1));
    bool present_here = std::count(e.present_at_layers.begin(), e.present_at_layers.end(), layer);
    bool already = std::count(e.transparent_at_layers.begin(), e.transparent_at_layers.end(), layer);
    if (!present_here && !already) e.transparent_at_layers.push_back(layer);
  }

  // Reference points and segments.
  std::map<std::string, std::vector<std::string>> rps_by_layer;
  int rp_no = 0;
  auto add_rp = [&](const Link& l, RpKind kind) {
    ReferencePoint rp;
    rp.id = id("r", rp_no++);
    rp.designator = {DesignatorKind::kCustom, "x"};
    rp.kind = kind;
    rp.layer_id = l.layer_id;
    rp.upstream_element = l.endpoint_a;
    rp.downstream_element = l.endpoint_b;
    if (coin(rng)) std::swap(rp.upstream_element, rp.downstream_element);
    rps_by_layer[l.layer_id].push_back(rp.id);
    p.reference_points.push_back(std::move(rp));
  };
  std::vector<Link> media;
  std::vector<Link> upper;
  for (const auto& l : p.links) (l.layer_id == "L00" ? media : upper).push_back(l);
  for (int k = uniform(rng, 0, 3); k > 0; --k) add_rp(pick(rng, media), RpKind::kRpiN);
  if (!upper.empty()) {
    for (int k = uniform(rng, 0, 2); k > 0; --k) {
      const auto& l = pick(rng, upper);
      if (l.layer_id == "L01") add_rp(l, RpKind::kRpiS);
    }
  }
  std::vector<std::string> rp_layers;
  for (const auto& [layer, ids] : rps_by_layer) rp_layers.push_back(layer);
  int n_seg = uniform(rng, 1, 4);
  for (int s = 0; s < n_seg; ++s) {
    Segment seg;
    seg.id = id("g", s);
    seg.name = random_segment_name(rng);
    seg.operator_id = coin(rng) ? "op-a" : "op-b";
    if (!rp_layers.empty()) {
      const auto& ids = rps_by_layer[pick(rng, rp_layers)];
      for (int k = uniform(rng, 1, 2); k > 0; --k) seg.bounding_rp_ids.push_back(pick(rng, ids));
    }
    p.segments.push_back(std::move(seg));
  }

  // Random walks.
  std::map<std::string, std::vector<const Link*>> by_layer;
  for (const auto& l : p.links) by_layer[l.layer_id].push_back(&l);
  std::vector<std::string> walk_layers;
  for (const auto& [layer, links] : by_layer) walk_layers.push_back(layer);
  for (int w = 0; w < 5; ++w) {
    const auto& layer = pick(rng, walk_layers);
    const auto& links = by_layer[layer];
    const Link* start = pick(rng, links);
    RandomPath path{layer, {start->endpoint_a}};
    for (int hops = uniform(rng, 0, 5); hops > 0; --hops) {
      std::vector<std::string> next;
      for (const auto* l : links) {
        if (l->endpoint_a == path.elements.back()) next.push_back(l->endpoint_b);
        if (l->endpoint_b == path.elements.back()) next.push_back(l->endpoint_a);
      }
      if (next.empty()) break;
      path.elements.push_back(pick(rng, next));
    }
    c.paths.push_back(std::move(path));
  }
  return c;
}

ChainCase random_chain(Rng& rng) {
  ChainCase c;
  auto& p = c.parts;
  int n = uniform(rng, 2, 12);
  p.layers.push_back({"m", "media", LayerKind::kTransmissionMedia, "", {}});
  p.sites.push_back(one_site());
  for (int i = 0; i < n; ++i) {
    auto e = random_element(rng, id("c", i));
    e.present_at_layers = {"m"};
    c.order.push_back(e.id);
    p.elements.push_back(std::move(e));
  }
  // Shuffle ids along the line so id order and line order differ.
  std::shuffle(c.order.begin(), c.order.end(), rng);
  for (int i = 0; i + 1 < n; ++i) {
    std::string a = c.order[i];
    std::string b = c.order[i + 1];
    if (coin(rng)) std::swap(a, b);
    p.links.push_back({id("k", i), "m", a, b, "", {}});
    if (coin(rng, 0.4)) c.cuts.push_back(static_cast<std::size_t>(i));
  }
  if (c.cuts.empty()) c.cuts.push_back(static_cast<std::size_t>(uniform(rng, 0, n - 2)));

  std::vector<std::string> rp_ids;
  for (auto cut : c.cuts) {
    ReferencePoint rp;
    rp.id = id("r", static_cast<int>(cut));
    rp.designator = {DesignatorKind::kCustom, "x"};
    rp.kind = RpKind::kRpiN;
    rp.layer_id = "m";
    rp.upstream_element = c.order[cut];
    rp.downstream_element = c.order[cut + 1];
    if (coin(rng)) std::swap(rp.upstream_element, rp.downstream_element);
    rp_ids.push_back(rp.id);
    p.reference_points.push_back(std::move(rp));
  }
  for (std::size_t s = 0; s <= c.cuts.size(); ++s) {
    Segment seg;
    seg.id = id("g", static_cast<int>(s));
    seg.name = random_segment_name(rng);
    seg.operator_id = coin(rng) ? "op-a" : "op-b";
    if (s > 0) seg.bounding_rp_ids.push_back(rp_ids[s - 1]);
    if (s < c.cuts.size()) seg.bounding_rp_ids.push_back(rp_ids[s]);
    p.segments.push_back(std::move(seg));
  }
  // Segment ids need not follow line order.
  std::vector<std::string> names;
  for (const auto& s : p.segments) names.push_back(s.id);
  std::shuffle(names.begin(), names.end(), rng);
  for (std::size_t i = 0; i < names.size(); ++i) p.segments[i].id = names[i];
  return c;
}

std::vector<PowerProfile> random_profiles(Rng& rng, const ModelParts& parts,
                                          std::int64_t horizon) {
  std::vector<PowerProfile> out;
  std::uniform_real_distribution<double> watts(0.0, 1000.0);
  for (const auto& e : parts.elements) {
    if (!e.powered || !coin(rng, 0.7)) continue;
    PowerProfile prof;
    prof.element_id = e.id;
    prof.measurement_location = "meter at " + e.id;
    std::int64_t t = 0;
    while (t < horizon) {
      std::int64_t start = t + std::uniform_int_distribution<std::int64_t>(0, horizon / 10)(rng);
      std::int64_t len = std::uniform_int_distribution<std::int64_t>(1, horizon / 4)(rng);
      std::int64_t end = std::min(start + len, horizon);
      if (start >= end) break;
      prof.samples.push_back({start, end, watts(rng)});
      t = end;
    }
    if (prof.samples.empty()) prof.samples.push_back({0, horizon, watts(rng)});
    prof.measurement_dates = {prof.samples.front().start, prof.samples.back().end};
    out.push_back(std::move(prof));
  }
  return out;
}

}  // namespace metro::testing
