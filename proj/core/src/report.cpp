// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

#include "metro/report.hpp"

#include <algorithm>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace metro {
namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string fixed(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string join(const std::vector<std::string>& parts, const char* sep = ",") {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

// Left-aligned columns separated by two spaces; numeric columns listed in
// `right` are right-aligned.
class Table {
 public:
  explicit Table(std::vector<std::string> header, std::vector<bool> right = {})
      : right_(std::move(right)) {
    rows_.push_back(std::move(header));
    right_.resize(rows_.front().size(), false);
  }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const {
    std::vector<std::size_t> w(rows_.front().size(), 0);
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    }
    std::string out;
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        std::string pad(w[i] - r[i].size(), ' ');
        std::string cell = right_[i] ? pad + r[i] : r[i] + (i + 1 < r.size() ? pad : "");
        line += (i ? "  " : "") + cell;
      }
      out += line + "\n";
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
  std::vector<bool> right_;
};

Json interval_json(Interval i) {
  return Json{{"start_utc", format_utc(i.start)}, {"end_utc", format_utc(i.end)}};
}

}  // namespace

std::string diagnostics_json(const std::vector<Diagnostic>& diagnostics) {
  Json out = Json::array();
  for (const auto& d : diagnostics) {
    out.push_back({{"code", d.code},
                   {"severity", to_string(d.severity)},
                   {"subjects", d.subjects},
                   {"message", d.message},
                   {"anchor", d.anchor}});
  }
  return dump(out);
}

std::string diagnostics_text(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const auto& d : diagnostics) out += render_text(d) + "\n";
  return out;
}

std::string coverage_json(const CoverageResult& coverage) {
  Json assignment = Json::object();
  for (const auto& [e, s] : coverage.assignment) assignment[e] = s;
  Json trace = Json::object();
  for (const auto& [seg, reasons] : coverage.rp_trace) {
    Json rows = Json::array();
    for (const auto& r : reasons) {
      rows.push_back({{"element", r.element_id}, {"layer", r.layer_id}, {"rp", r.rp_id}});
    }
    trace[seg] = std::move(rows);
  }
  return dump(Json{{"assignment", assignment},
                   {"uncaptured", coverage.uncaptured},
                   {"rp_trace", trace},
                   {"warnings", coverage.warnings}});
}

std::string coverage_text(const CoverageResult& coverage) {
  std::map<std::string, const CaptureReason*> why;
  for (const auto& [seg, reasons] : coverage.rp_trace) {
    for (const auto& r : reasons) why[r.element_id] = &r;
  }
  Table t({"element", "segment", "layer", "rp"});
  for (const auto& [e, s] : coverage.assignment) {
    const auto* r = why[e];
    t.add({e, s, r ? r->layer_id : "", r ? r->rp_id : ""});
  }
  for (const auto& e : coverage.uncaptured) t.add({e, "(uncaptured)", "", ""});
  std::string out = t.str();
  for (const auto& w : coverage.warnings) out += "warning: " + w + "\n";
  return out;
}

std::string path_trace_json(const PathTrace& trace) {
  Json elements = Json::array();
  for (std::size_t i = 0; i < trace.elements.size(); ++i) {
    elements.push_back({{"id", trace.elements[i]}, {"visible", bool(trace.visible[i])}});
  }
  return dump(Json{{"layer_id", trace.layer_id}, {"elements", elements}});
}

std::string path_trace_text(const PathTrace& trace) {
  Table t({"#", "element", "visible"}, {true, false, false});
  for (std::size_t i = 0; i < trace.elements.size(); ++i) {
    t.add({std::to_string(i), trace.elements[i], trace.visible[i] ? "yes" : "no"});
  }
  return "layer " + trace.layer_id + "\n" + t.str();
}

std::string hidden_json(const std::vector<std::string>& hidden) {
  return dump(Json(hidden));
}

std::string hidden_text(const std::vector<std::string>& hidden) {
  std::string out;
  for (const auto& h : hidden) out += h + "\n";
  return out;
}

std::string energy_json(const EnergyReport& r) {
  Json elements = Json::array();
  for (const auto& e : r.elements) {
    elements.push_back({{"element_id", e.element_id},
                        {"segment_id", e.segment_id.empty() ? Json() : Json(e.segment_id)},
                        {"operator_id", e.operator_id.empty() ? Json() : Json(e.operator_id)},
                        {"wh", e.wh},
                        {"source", to_string(e.source)}});
  }
  Json measurements = Json::array();
  for (const auto& m : r.measurements) {
    measurements.push_back({{"element_id", m.element_id},
                            {"location", m.location},
                            {"first_utc", format_utc(m.dates.start)},
                            {"last_utc", format_utc(m.dates.end)}});
  }
  return dump(Json{{"interval", interval_json(r.interval)},
                   {"per_segment_wh", r.per_segment_wh},
                   {"per_operator_wh", r.per_operator_wh},
                   {"total_wh", r.total_wh},
                   {"uncaptured_wh", r.uncaptured_wh},
                   {"elements", elements},
                   {"rated_not_measured", r.rated_not_measured},
                   {"hidden_consumer_notes", r.hidden_consumer_notes},
                   {"warnings", r.warnings},
                   {"metadata", {{"model_name", r.model_name}, {"measurements", measurements}}}});
}

std::string energy_text(const EnergyReport& r) {
  std::string out = "model     " + r.model_name + "\n";
  out += "interval  " + format_utc(r.interval.start) + " .. " + format_utc(r.interval.end) + "\n\n";

  Table seg({"segment", "wh"}, {false, true});
  for (const auto& [s, wh] : r.per_segment_wh) seg.add({s, fixed(wh)});
  seg.add({"(uncaptured)", fixed(r.uncaptured_wh)});
  seg.add({"total", fixed(r.total_wh)});
  out += seg.str() + "\n";

  Table op({"operator", "wh"}, {false, true});
  for (const auto& [o, wh] : r.per_operator_wh) op.add({o, fixed(wh)});
  out += op.str() + "\n";

  Table el({"element", "segment", "wh", "source"}, {false, false, true, false});
  for (const auto& e : r.elements) {
    el.add({e.element_id, e.segment_id.empty() ? "(uncaptured)" : e.segment_id, fixed(e.wh),
            std::string(to_string(e.source))});
  }
  out += el.str();

  if (!r.measurements.empty()) {
    out += "\n";
    Table m({"measured", "location", "first", "last"});
    for (const auto& rec : r.measurements) {
      m.add({rec.element_id, rec.location, format_utc(rec.dates.start),
             format_utc(rec.dates.end)});
    }
    out += m.str();
  }
  for (const auto& n : r.hidden_consumer_notes) out += "note: " + n + "\n";
  for (const auto& w : r.warnings) out += "warning: " + w + "\n";
  return out;
}

std::string energy_csv(const EnergyReport& r, const Model& model) {
  std::string out = "segment_id,operator_id,wh\n";
  for (const auto& [s, wh] : r.per_segment_wh) {
    const auto* seg = model.find_segment(s);
    out += s + "," + (seg ? seg->operator_id : "") + "," + fixed(wh, 6) + "\n";
  }
  out += "(uncaptured),," + fixed(r.uncaptured_wh, 6) + "\n";
  return out;
}

std::string candidacy_json(const std::vector<CandidacyReport>& reports) {
  Json out = Json::array();
  auto opt_class = [](const std::optional<SpaceClass>& c) {
    return c ? Json(to_string(*c)) : Json();
  };
  auto opt_int = [](const std::optional<int>& v) { return v ? Json(*v) : Json(); };
  for (const auto& r : reports) {
    Json upgrades = Json::array();
    for (auto u : r.upgrades) upgrades.push_back(to_string(u));
    out.push_back(
        {{"site_id", r.site_id},
         {"classification", to_string(r.classification)},
         {"eligible", r.eligible},
         {"criteria",
          {{"power",
            {{"passed", r.power.passed},
             {"has_power", r.power.has_power},
             {"measured_w", r.power.headroom_w},
             {"required_w", r.power.required_w},
             {"deficit_w", r.power.deficit_w}}},
           {"network",
            {{"passed", r.network.passed},
             {"required", r.network.required},
             {"has_ethernet_uplink", r.network.has_ethernet_uplink}}},
           {"space",
            {{"passed", r.space.passed},
             {"space_class", to_string(r.space.space_class)},
             {"rank", opt_int(r.space.rank)},
             {"required_class", opt_class(r.space.required_class)},
             {"required_rank", opt_int(r.space.required_rank)}}}}},
         {"upgrades", upgrades}});
  }
  return dump(out);
}

std::string candidacy_text(const std::vector<CandidacyReport>& reports) {
  Table t({"#", "site", "class", "eligible", "power", "network", "space", "upgrades"},
          {true, false, false, false, false, false, false, false});
  int n = 0;
  for (const auto& r : reports) {
    std::vector<std::string> ups;
    for (auto u : r.upgrades) ups.emplace_back(to_string(u));
    std::string power = (r.power.passed ? "pass " : "FAIL ") + fixed(r.power.headroom_w, 0) +
                        "/" + fixed(r.power.required_w, 0) + "W";
    t.add({std::to_string(++n), r.site_id, std::string(to_string(r.classification)),
           r.eligible ? "yes" : "no", power, r.network.passed ? "pass" : "FAIL",
           r.space.passed ? "pass" : "FAIL", ups.empty() ? "-" : join(ups)});
  }
  return t.str();
}

std::string catalog_text(const std::vector<TemplateInfo>& templates) {
  Table t({"template", "description"});
  for (const auto& info : templates) {
    t.add({std::string(info.name), std::string(info.description)});
  }
  return t.str();
}

}  // namespace metro
