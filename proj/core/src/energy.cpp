// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

#include "metro/energy.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>

namespace metro {
namespace {

constexpr double kSecondsPerHour = 3600.0;
constexpr double kFractionTolerance = 1e-9;

std::vector<Error> check_samples(const PowerProfile& p) {
  std::vector<Error> errs;
  for (std::size_t i = 0; i < p.samples.size(); ++i) {
    const auto& s = p.samples[i];
    if (s.start >= s.end || !(s.avg_power_w >= 0.0) || !std::isfinite(s.avg_power_w)) {
      errs.push_back({"E-BAD-SAMPLE", p.element_id,
                      "sample " + std::to_string(i) + " needs start < end and power >= 0"});
    }
    if (i > 0 && p.samples[i - 1].end > s.start) {
      errs.push_back({"E-SAMPLE-OVERLAP", p.element_id,
                      "sample " + std::to_string(i) + " starts before the previous one ends"});
    }
  }
  return errs;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Comma-separated fields; double quotes protect commas, "" is a literal quote.
std::optional<std::vector<std::string>> split_csv(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = was_quoted = true;
    } else if (c == ',') {
      out.push_back(was_quoted ? cur : trim(cur));
      cur.clear();
      was_quoted = false;
    } else {
      cur += c;
    }
  }
  if (quoted) return std::nullopt;
  out.push_back(was_quoted ? cur : trim(cur));
  return out;
}

std::optional<double> parse_double(std::string_view s) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

template <typename T>
std::optional<T> parse_int(std::string_view s) {
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

// The element's groups split at the downstream function of `rp`.
struct Sides {
  std::vector<FunctionalGroup> upstream;
  std::vector<FunctionalGroup> downstream;
};

std::optional<Sides> sides_of(const NetworkElement& e, const ReferencePoint& rp) {
  auto down = parse_functional_group(rp.downstream_element);
  if (!down) return std::nullopt;
  auto it = std::find(e.functional_groups.begin(), e.functional_groups.end(), *down);
  if (it == e.functional_groups.end()) return std::nullopt;
  return Sides{{e.functional_groups.begin(), it}, {it, e.functional_groups.end()}};
}

}  // namespace

std::string_view to_string(SplitMode m) {
  switch (m) {
    case SplitMode::kDeclared: return "declared";
    case SplitMode::kEqual: return "equal";
    case SplitMode::kDeny: return "deny";
  }
  return "";
}

std::optional<SplitMode> parse_split_mode(std::string_view s) {
  for (auto m : {SplitMode::kDeclared, SplitMode::kEqual, SplitMode::kDeny}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

std::string_view to_string(EnergySource s) {
  return s == EnergySource::kMeasured ? "measured" : "rated-not-measured";
}

Result<double> integrate_energy(const PowerProfile& profile, Interval interval) {
  if (interval.start > interval.end) {
    return Error{"E-BAD-INTERVAL", format_utc(interval.start) + "/" + format_utc(interval.end),
                 "start is after end"};
  }
  if (auto errs = check_samples(profile); !errs.empty()) return errs;
  double wh = 0.0;
  for (const auto& s : profile.samples) {
    auto lo = std::max(s.start, interval.start);
    auto hi = std::min(s.end, interval.end);
    if (hi > lo) wh += s.avg_power_w * static_cast<double>(hi - lo) / kSecondsPerHour;
  }
  return wh;
}

Result<GroupSplit> split_subsumed(const NetworkElement& element, const ReferencePoint& rp,
                                  const SplitPolicy& policy) {
  if (!rp.subsumed() || rp.subsuming_element != element.id || !sides_of(element, rp)) {
    return Error{"E-SUBSUMPTION", rp.id, "not subsumed by " + element.id};
  }
  const auto& groups = element.functional_groups;
  GroupSplit out;
  switch (policy.mode) {
    case SplitMode::kDeny:
      return Error{"E-SPLIT-DENIED", element.id,
                   "energy of " + element.id + " straddles subsumed " + rp.id};
    case SplitMode::kEqual: {
      for (auto g : groups) out.fractions[g] = 1.0 / static_cast<double>(groups.size());
      out.warning = "equal split of " + element.id + " across " + rp.id +
                    " is an assumption, not a measurement";
      return out;
    }
    case SplitMode::kDeclared: {
      double sum = 0.0;
      for (auto g : groups) {
        auto it = policy.declared_fractions.find(g);
        double f = it == policy.declared_fractions.end() ? 0.0 : it->second;
        if (!(f >= 0.0) || !std::isfinite(f)) {
          return Error{"E-FRACTIONS-INVALID", element.id,
                       "fraction for " + std::string(to_string(g)) + " is negative"};
        }
        out.fractions[g] = f;
        sum += f;
      }
      if (std::abs(sum - 1.0) > kFractionTolerance) {
        return Error{"E-FRACTIONS-INVALID", element.id,
                     "fractions over the element's groups sum to " + std::to_string(sum)};
      }
      return out;
    }
  }
  return out;
}

Result<EnergyReport> attribute_energy(const Model& model, const CoverageResult& coverage,
                                      const std::vector<PowerProfile>& profiles,
                                      Interval interval, const SplitPolicy& policy) {
  std::vector<Error> errs;
  if (interval.start > interval.end) {
    return Error{"E-BAD-INTERVAL", format_utc(interval.start) + "/" + format_utc(interval.end),
                 "start is after end"};
  }

  EnergyReport r;
  r.interval = interval;
  r.model_name = model.metadata().name;

  std::map<std::string, const PowerProfile*> by_element;
  for (const auto& p : profiles) {
    const auto* e = model.find_element(p.element_id);
    if (e == nullptr) {
      errs.push_back({"E-UNKNOWN-ELEMENT", p.element_id, "profile names no model element"});
    } else if (!e->powered) {
      errs.push_back({"E-UNPOWERED-PROFILE", p.element_id, "element is declared unpowered"});
    }
    if (!by_element.emplace(p.element_id, &p).second) {
      errs.push_back({"E-DUP-PROFILE", p.element_id, "more than one profile"});
    }
  }

  // Subsumed RPs on a segment boundary whose holder sits on both sides.
  std::map<std::string, const ReferencePoint*> straddles;
  for (const auto& [rid, rp] : model.reference_points()) {
    if (!rp.subsumed()) continue;
    const auto& holder = *rp.subsuming_element;
    auto it = coverage.assignment.find(holder);
    if (it == coverage.assignment.end()) continue;
    int bounding = 0;
    for (const auto& [sid, seg] : model.segments()) {
      const auto& ids = seg.bounding_rp_ids;
      if (std::find(ids.begin(), ids.end(), rid) != ids.end()) ++bounding;
    }
    if (bounding < 2) continue;
    if (!straddles.emplace(holder, &rp).second) {
      r.warnings.push_back(holder + " subsumes several boundary RPs; split only across " +
                           straddles[holder]->id);
    }
  }

  auto segment_operator = [&](const std::string& sid) {
    const auto* seg = model.find_segment(sid);
    return seg ? seg->operator_id : std::string();
  };
  auto add = [&](ElementEnergy row) {
    if (row.segment_id.empty()) {
      r.uncaptured_wh += row.wh;
    } else {
      r.per_segment_wh[row.segment_id] += row.wh;
      r.per_operator_wh[row.operator_id] += row.wh;
    }
    r.total_wh += row.wh;
    r.elements.push_back(std::move(row));
  };

  double hours = static_cast<double>(interval.end - interval.start) / kSecondsPerHour;
  for (const auto& [id, e] : model.elements()) {
    if (!e.powered) continue;
    double wh = 0.0;
    auto source = EnergySource::kMeasured;
    if (auto it = by_element.find(id); it != by_element.end()) {
      auto v = integrate_energy(*it->second, interval);
      if (!v) {
        errs.insert(errs.end(), v.errors().begin(), v.errors().end());
        continue;
      }
      wh = *v;
    } else {
      wh = e.power_draw_w * hours;
      source = EnergySource::kRatedNotMeasured;
      r.rated_not_measured.push_back(id);
    }
    if (!(wh >= 0.0) || !std::isfinite(wh)) {
      errs.push_back({"E-BAD-SAMPLE", id, "energy is negative or not finite"});
      continue;
    }

    auto assigned = coverage.assignment.find(id);
    if (assigned == coverage.assignment.end()) {
      add({id, "", "", wh, source});
      continue;
    }
    const std::string& seg_id = assigned->second;

    auto st = straddles.find(id);
    if (st == straddles.end()) {
      add({id, seg_id, segment_operator(seg_id), wh, source});
      continue;
    }
    const ReferencePoint& rp = *st->second;
    auto split = split_subsumed(e, rp, policy);
    if (!split) {
      errs.insert(errs.end(), split.errors().begin(), split.errors().end());
      continue;
    }
    if (split->warning) r.warnings.push_back(*split->warning);
    // The holder was charged to the upstream segment; every other segment on
    // the RP takes the downstream groups. With several, the first by id.
    std::string down_seg;
    for (const auto& [sid, seg] : model.segments()) {
      const auto& ids = seg.bounding_rp_ids;
      if (sid != seg_id && std::find(ids.begin(), ids.end(), rp.id) != ids.end()) {
        down_seg = sid;
        break;
      }
    }
    auto sides = *sides_of(e, rp);
    double up_f = 0.0;
    auto fractions = split->fractions;
    for (auto g : sides.upstream) up_f += fractions[g];
    double down_f = 0.0;
    for (auto g : sides.downstream) down_f += fractions[g];
    add({id, seg_id, segment_operator(seg_id), wh * up_f, source});
    add({id, down_seg, segment_operator(down_seg), wh * down_f, source});
  }

  if (!errs.empty()) {
    normalize(errs);
    return errs;
  }

  for (const auto& [id, p] : by_element) {
    r.measurements.push_back({id, p->measurement_location, p->measurement_dates});
  }
  for (const auto& [id, e] : model.elements()) {
    if (!e.powered || e.transparent_at_layers.empty()) continue;
    std::string layers;
    for (const auto& l : e.transparent_at_layers) layers += (layers.empty() ? "" : ",") + l;
    r.hidden_consumer_notes.push_back(id + " is transparent at " + layers +
                                      " and invisible to path tracing there");
  }
  return r;
}

Result<std::vector<PowerProfile>> parse_power_csv(std::string_view text, const Model& model) {
  std::vector<Error> errs;
  std::map<std::string, PowerProfile> profiles;
  std::size_t line_no = 0;
  bool header = false;
  bool has_location = false;

  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    if (trim(line).empty()) continue;
    auto where = "line " + std::to_string(line_no);
    auto fields = split_csv(line);
    if (!fields) {
      errs.push_back({"E-CSV", where, "unterminated quote"});
      continue;
    }
    if (!header) {
      std::vector<std::string> want{"element_id", "start_utc", "end_utc", "avg_power_w"};
      auto got = *fields;
      if (got.size() == 5 && got[4] == "measurement_location") {
        has_location = true;
        got.pop_back();
      }
      if (got != want) {
        return Error{"E-CSV", where,
                     "header must be element_id,start_utc,end_utc,avg_power_w"
                     "[,measurement_location]"};
      }
      header = true;
      continue;
    }
    if (fields->size() != (has_location ? 5u : 4u)) {
      errs.push_back({"E-CSV", where, "wrong number of fields"});
      continue;
    }
    const auto& f = *fields;
    auto start = parse_utc(f[1]);
    auto end = parse_utc(f[2]);
    auto watts = parse_double(f[3]);
    if (f[0].empty() || !start || !end || !watts) {
      errs.push_back({"E-CSV", where, "unreadable element id, time or power"});
      continue;
    }
    auto& p = profiles[f[0]];
    p.element_id = f[0];
    p.samples.push_back({*start, *end, *watts});
    if (has_location && p.measurement_location.empty()) p.measurement_location = f[4];
  }
  if (!header) return Error{"E-CSV", "line 1", "missing header"};

  std::vector<PowerProfile> out;
  for (auto& [id, p] : profiles) {
    std::stable_sort(p.samples.begin(), p.samples.end(),
                     [](const PowerSample& a, const PowerSample& b) { return a.start < b.start; });
    auto bad = check_samples(p);
    errs.insert(errs.end(), bad.begin(), bad.end());
    p.measurement_dates = {p.samples.front().start, p.samples.back().end};
    for (const auto& s : p.samples) {
      p.measurement_dates.end = std::max(p.measurement_dates.end, s.end);
    }
    if (p.measurement_location.empty()) {
      if (const auto* e = model.find_element(id)) {
        if (const auto* site = model.find_site(e->site_id)) {
          p.measurement_location = site->location_label;
        }
      }
    }
    out.push_back(std::move(p));
  }
  if (!errs.empty()) {
    normalize(errs);
    return errs;
  }
  return out;
}

std::optional<std::int64_t> parse_utc(std::string_view s) {
  if (auto v = parse_int<std::int64_t>(s)) return v;
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, sec = 0;
  if (s.size() == 10) {
    auto ys = parse_int<int>(s.substr(0, 4));
    auto ms = parse_int<int>(s.substr(5, 2));
    auto ds = parse_int<int>(s.substr(8, 2));
    if (!ys || !ms || !ds || s[4] != '-' || s[7] != '-') return std::nullopt;
    y = *ys, mo = *ms, d = *ds;
  } else {
    if (s.size() != 20 || s[4] != '-' || s[7] != '-' || s[10] != 'T' || s[13] != ':' ||
        s[16] != ':' || s[19] != 'Z') {
      return std::nullopt;
    }
    auto parts = {parse_int<int>(s.substr(0, 4)), parse_int<int>(s.substr(5, 2)),
                  parse_int<int>(s.substr(8, 2)), parse_int<int>(s.substr(11, 2)),
                  parse_int<int>(s.substr(14, 2)), parse_int<int>(s.substr(17, 2))};
    int* dst[] = {&y, &mo, &d, &h, &mi, &sec};
    int i = 0;
    for (const auto& p : parts) {
      if (!p) return std::nullopt;
      *dst[i++] = *p;
    }
    if (h > 23 || mi > 59 || sec > 59) return std::nullopt;
  }
  using namespace std::chrono;
  year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  auto days_since = sys_days(ymd).time_since_epoch().count();
  return static_cast<std::int64_t>(days_since) * 86400 + h * 3600 + mi * 60 + sec;
}

std::string format_utc(std::int64_t t) {
  using namespace std::chrono;
  auto secs = sys_seconds(seconds(t));
  auto day_point = floor<days>(secs);
  year_month_day ymd{day_point};
  auto rest = (secs - day_point).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02lld:%02lld:%02lldZ",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()), static_cast<long long>(rest / 3600),
                static_cast<long long>(rest / 60 % 60), static_cast<long long>(rest % 60));
  return buf;
}

}  // namespace metro
