// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

#include "metro/schema_io.hpp"

#include <algorithm>
#include <initializer_list>
#include <nlohmann/json.hpp>

namespace metro {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Reads one JSON object under a closed key set, recording every shape error
// with its document path.
class ObjectReader {
 public:
  ObjectReader(const json& obj, std::string path, std::vector<Error>& errors,
               std::initializer_list<std::string_view> keys)
      : obj_(obj), path_(std::move(path)), errors_(errors) {
    for (const auto& [k, _] : obj.items()) {
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
        errors_.push_back({"E-UNKNOWN-KEY", at(k), "key is not part of the schema"});
      }
    }
  }

  std::string at(std::string_view key) const {
    return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
  }

  const json* get(std::string_view key, bool required) {
    auto it = obj_.find(key);
    if (it == obj_.end()) {
      if (required) errors_.push_back({"E-MISSING-FIELD", at(key), "required field"});
      return nullptr;
    }
    return &*it;
  }

  void bad(std::string_view key, std::string detail) {
    errors_.push_back({"E-BAD-VALUE", at(key), std::move(detail)});
  }

  void string(std::string_view key, std::string& out, bool required) {
    const json* v = get(key, required);
    if (v == nullptr) return;
    if (!v->is_string()) return bad(key, "expected a string");
    out = v->get<std::string>();
  }

  void optional_string(std::string_view key, std::optional<std::string>& out) {
    const json* v = get(key, false);
    if (v == nullptr || v->is_null()) return;
    if (!v->is_string()) return bad(key, "expected a string or null");
    out = v->get<std::string>();
  }

  void boolean(std::string_view key, bool& out, bool required) {
    const json* v = get(key, required);
    if (v == nullptr) return;
    if (!v->is_boolean()) return bad(key, "expected true or false");
    out = v->get<bool>();
  }

  void number(std::string_view key, double& out, bool required) {
    const json* v = get(key, required);
    if (v == nullptr) return;
    if (!v->is_number()) return bad(key, "expected a number");
    out = v->get<double>();
  }

  void optional_int(std::string_view key, std::optional<int>& out) {
    const json* v = get(key, false);
    if (v == nullptr || v->is_null()) return;
    if (!v->is_number_integer()) return bad(key, "expected an integer or null");
    out = v->get<int>();
  }

  void strings(std::string_view key, std::vector<std::string>& out, bool required) {
    const json* v = get(key, required);
    if (v == nullptr) return;
    if (!v->is_array()) return bad(key, "expected an array of strings");
    for (std::size_t i = 0; i < v->size(); ++i) {
      const auto& item = (*v)[i];
      if (!item.is_string()) {
        bad(std::string(key) + "[" + std::to_string(i) + "]", "expected a string");
        continue;
      }
      out.push_back(item.get<std::string>());
    }
  }

  template <typename E, typename Parse>
  void enumerated(std::string_view key, E& out, bool required, Parse parse) {
    const json* v = get(key, required);
    if (v == nullptr) return;
    if (!v->is_string()) return bad(key, "expected a string");
    auto parsed = parse(v->get_ref<const std::string&>());
    if (!parsed) return bad(key, "unknown value '" + v->get<std::string>() + "'");
    out = *parsed;
  }

 private:
  const json& obj_;
  std::string path_;
  std::vector<Error>& errors_;
};

std::string item_path(std::string_view collection, std::size_t i) {
  return std::string(collection) + "[" + std::to_string(i) + "]";
}

template <typename T, typename ReadItem>
void read_collection(const json& root, std::string_view key, std::vector<T>& out,
                     std::vector<Error>& errors, ReadItem read_item) {
  auto it = root.find(key);
  if (it == root.end()) {
    errors.push_back({"E-MISSING-FIELD", std::string(key), "required field"});
    return;
  }
  if (!it->is_array()) {
    errors.push_back({"E-BAD-VALUE", std::string(key), "expected an array"});
    return;
  }
  for (std::size_t i = 0; i < it->size(); ++i) {
    const auto& obj = (*it)[i];
    if (!obj.is_object()) {
      errors.push_back({"E-BAD-VALUE", item_path(key, i), "expected an object"});
      continue;
    }
    out.push_back(read_item(obj, item_path(key, i)));
  }
}

LayerNetwork read_layer(const json& obj, const std::string& path,
                        std::vector<Error>& errors) {
  LayerNetwork l;
  ObjectReader r(obj, path, errors,
                 {"id", "name", "kind", "characteristic_info", "server_layers"});
  r.string("id", l.id, true);
  r.string("name", l.name, false);
  r.enumerated("kind", l.kind, true, parse_layer_kind);
  r.string("characteristic_info", l.characteristic_info, false);
  r.strings("server_layers", l.server_layers, false);
  return l;
}

Site read_site(const json& obj, const std::string& path, std::vector<Error>& errors) {
  Site s;
  ObjectReader r(obj, path, errors,
                 {"id", "name", "location_label", "space_class", "has_power",
                  "power_headroom_w", "has_ethernet_uplink", "space_rank"});
  r.string("id", s.id, true);
  r.string("name", s.name, false);
  r.string("location_label", s.location_label, false);
  r.enumerated("space_class", s.space_class, true, parse_space_class);
  r.boolean("has_power", s.has_power, true);
  r.number("power_headroom_w", s.power_headroom_w, false);
  r.boolean("has_ethernet_uplink", s.has_ethernet_uplink, false);
  r.optional_int("space_rank", s.space_rank);
  return s;
}

NetworkElement read_element(const json& obj, const std::string& path,
                            std::vector<Error>& errors) {
  NetworkElement e;
  ObjectReader r(obj, path, errors,
                 {"id", "name", "site_id", "operator_id", "functional_groups",
                  "powered", "power_draw_w", "present_at_layers",
                  "transparent_at_layers"});
  r.string("id", e.id, true);
  r.string("name", e.name, false);
  r.string("site_id", e.site_id, true);
  r.string("operator_id", e.operator_id, false);
  std::vector<std::string> groups;
  r.strings("functional_groups", groups, false);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (auto g = parse_functional_group(groups[i])) {
      e.functional_groups.push_back(*g);
    } else {
      r.bad("functional_groups[" + std::to_string(i) + "]",
            "unknown functional group '" + groups[i] + "'");
    }
  }
  r.boolean("powered", e.powered, true);
  r.number("power_draw_w", e.power_draw_w, false);
  r.strings("present_at_layers", e.present_at_layers, false);
  r.strings("transparent_at_layers", e.transparent_at_layers, false);
  return e;
}

Link read_link(const json& obj, const std::string& path, std::vector<Error>& errors) {
  Link l;
  ObjectReader r(obj, path, errors,
                 {"id", "layer_id", "endpoint_a", "endpoint_b", "server_layer",
                  "server_trail"});
  r.string("id", l.id, true);
  r.string("layer_id", l.layer_id, true);
  r.string("endpoint_a", l.endpoint_a, true);
  r.string("endpoint_b", l.endpoint_b, true);
  r.string("server_layer", l.server_layer, false);
  r.strings("server_trail", l.server_trail, false);
  return l;
}

ReferencePoint read_rp(const json& obj, const std::string& path,
                       std::vector<Error>& errors) {
  ReferencePoint rp;
  ObjectReader r(obj, path, errors,
                 {"id", "designator", "kind", "layer_id", "upstream_element",
                  "downstream_element", "accessibility", "subsuming_element"});
  r.string("id", rp.id, true);
  r.enumerated("designator", rp.designator, true, parse_designator);
  r.enumerated("kind", rp.kind, true, parse_rp_kind);
  r.string("layer_id", rp.layer_id, true);
  r.string("upstream_element", rp.upstream_element, true);
  r.string("downstream_element", rp.downstream_element, true);
  r.enumerated("accessibility", rp.accessibility, false, parse_accessibility);
  r.optional_string("subsuming_element", rp.subsuming_element);
  return rp;
}

Segment read_segment(const json& obj, const std::string& path,
                     std::vector<Error>& errors) {
  Segment s;
  ObjectReader r(obj, path, errors, {"id", "name", "operator_id", "bounding_rp_ids"});
  r.string("id", s.id, true);
  r.enumerated("name", s.name, true, parse_segment_name);
  r.string("operator_id", s.operator_id, false);
  r.strings("bounding_rp_ids", s.bounding_rp_ids, false);
  return s;
}

void read_metadata(const json& root, Metadata& md, std::vector<Error>& errors) {
  auto it = root.find("metadata");
  if (it == root.end()) return;
  if (!it->is_object()) {
    errors.push_back({"E-BAD-VALUE", "metadata", "expected an object"});
    return;
  }
  ObjectReader r(*it, "metadata", errors,
                 {"name", "author", "date", "comment", "assumed"});
  r.string("name", md.name, false);
  r.string("author", md.author, false);
  r.string("date", md.date, false);
  r.string("comment", md.comment, false);
  r.strings("assumed", md.assumed, false);
}

Error syntax_error(std::string_view text, std::size_t byte, const std::string& what) {
  // nlohmann reports the 1-based offset of the last byte read.
  std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {"E-SYNTAX", std::to_string(line) + ":" + std::to_string(col), what};
}

template <typename Range, typename Fn>
ordered_json array_of(const Range& range, Fn fn) {
  ordered_json out = ordered_json::array();
  for (const auto& v : range) out.push_back(fn(v));
  return out;
}

ordered_json strings_json(const std::vector<std::string>& v) {
  return array_of(v, [](const std::string& s) { return s; });
}

ordered_json to_json(const ModelDocument& doc) {
  const auto& p = doc.parts;
  ordered_json root;
  root["schema_version"] = doc.schema_version;
  ordered_json md;
  md["name"] = p.metadata.name;
  md["author"] = p.metadata.author;
  md["date"] = p.metadata.date;
  md["comment"] = p.metadata.comment;
  md["assumed"] = strings_json(p.metadata.assumed);
  root["metadata"] = std::move(md);

  root["layers"] = array_of(p.layers, [](const LayerNetwork& l) {
    ordered_json j;
    j["id"] = l.id;
    j["name"] = l.name;
    j["kind"] = to_string(l.kind);
    j["characteristic_info"] = l.characteristic_info;
    j["server_layers"] = strings_json(l.server_layers);
    return j;
  });
  root["sites"] = array_of(p.sites, [](const Site& s) {
    ordered_json j;
    j["id"] = s.id;
    j["name"] = s.name;
    j["location_label"] = s.location_label;
    j["space_class"] = to_string(s.space_class);
    j["has_power"] = s.has_power;
    j["power_headroom_w"] = s.power_headroom_w;
    j["has_ethernet_uplink"] = s.has_ethernet_uplink;
    j["space_rank"] = s.space_rank ? ordered_json(*s.space_rank) : ordered_json();
    return j;
  });
  root["elements"] = array_of(p.elements, [](const NetworkElement& e) {
    ordered_json j;
    j["id"] = e.id;
    j["name"] = e.name;
    j["site_id"] = e.site_id;
    j["operator_id"] = e.operator_id;
    j["functional_groups"] = array_of(
        e.functional_groups, [](FunctionalGroup g) { return std::string(to_string(g)); });
    j["powered"] = e.powered;
    j["power_draw_w"] = e.power_draw_w;
    j["present_at_layers"] = strings_json(e.present_at_layers);
    j["transparent_at_layers"] = strings_json(e.transparent_at_layers);
    return j;
  });
  root["links"] = array_of(p.links, [](const Link& l) {
    ordered_json j;
    j["id"] = l.id;
    j["layer_id"] = l.layer_id;
    j["endpoint_a"] = l.endpoint_a;
    j["endpoint_b"] = l.endpoint_b;
    j["server_layer"] = l.server_layer;
    j["server_trail"] = strings_json(l.server_trail);
    return j;
  });
  root["reference_points"] = array_of(p.reference_points, [](const ReferencePoint& rp) {
    ordered_json j;
    j["id"] = rp.id;
    j["designator"] = to_string(rp.designator);
    j["kind"] = to_string(rp.kind);
    j["layer_id"] = rp.layer_id;
    j["upstream_element"] = rp.upstream_element;
    j["downstream_element"] = rp.downstream_element;
    j["accessibility"] = to_string(rp.accessibility);
    j["subsuming_element"] =
        rp.subsuming_element ? ordered_json(*rp.subsuming_element) : ordered_json();
    return j;
  });
  root["segments"] = array_of(p.segments, [](const Segment& s) {
    ordered_json j;
    j["id"] = s.id;
    j["name"] = to_string(s.name);
    j["operator_id"] = s.operator_id;
    j["bounding_rp_ids"] = strings_json(s.bounding_rp_ids);
    return j;
  });
  return root;
}

}  // namespace

Result<ModelDocument> parse_model(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    return syntax_error(text, e.byte, e.what());
  }
  if (!root.is_object()) {
    return Error{"E-BAD-VALUE", "$", "document root must be an object"};
  }

  std::vector<Error> errors;
  ModelDocument doc;
  ObjectReader top(root, "", errors,
                   {"schema_version", "metadata", "layers", "sites", "elements",
                    "links", "reference_points", "segments"});
  if (const json* v = top.get("schema_version", true)) {
    if (!v->is_string() || v->get<std::string>() != kSchemaVersion) {
      errors.push_back({"E-BAD-VERSION", "schema_version",
                        "supported schema_version is \"1\""});
    }
  }
  read_metadata(root, doc.parts.metadata, errors);

  auto with = [&errors](auto read) {
    return [&errors, read](const json& obj, const std::string& path) {
      return read(obj, path, errors);
    };
  };
  read_collection(root, "layers", doc.parts.layers, errors, with(read_layer));
  read_collection(root, "sites", doc.parts.sites, errors, with(read_site));
  read_collection(root, "elements", doc.parts.elements, errors, with(read_element));
  read_collection(root, "links", doc.parts.links, errors, with(read_link));
  read_collection(root, "reference_points", doc.parts.reference_points, errors,
                  with(read_rp));
  read_collection(root, "segments", doc.parts.segments, errors, with(read_segment));

  if (!errors.empty()) {
    normalize(errors);
    return errors;
  }
  return doc;
}

std::string serialize_document(const ModelDocument& doc) {
  return to_json(doc).dump(2) + "\n";
}

std::string serialize_model(const Model& model) {
  return serialize_document(ModelDocument{std::string(kSchemaVersion), model.parts()});
}

}  // namespace metro
