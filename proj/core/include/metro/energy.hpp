// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

// Measured power to watt-hours, attributed to segments and operators through
// a coverage assignment.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metro/model.hpp"
#include "metro/recomposition.hpp"
#include "metro/result.hpp"

namespace metro {

// Half-open span of UTC seconds.
struct Interval {
  std::int64_t start = 0;
  std::int64_t end = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct PowerSample {
  std::int64_t start = 0;
  std::int64_t end = 0;
  double avg_power_w = 0.0;

  friend bool operator==(const PowerSample&, const PowerSample&) = default;
};

struct PowerProfile {
  std::string element_id;
  std::vector<PowerSample> samples;  // sorted by start, non-overlapping
  std::string measurement_location;
  Interval measurement_dates;  // first sample start, last sample end

  friend bool operator==(const PowerProfile&, const PowerProfile&) = default;
};

enum class SplitMode { kDeclared, kEqual, kDeny };

std::string_view to_string(SplitMode m);
std::optional<SplitMode> parse_split_mode(std::string_view s);

struct SplitPolicy {
  SplitMode mode = SplitMode::kEqual;
  std::map<FunctionalGroup, double> declared_fractions;
};

struct GroupSplit {
  std::map<FunctionalGroup, double> fractions;
  std::optional<std::string> warning;
};

enum class EnergySource { kMeasured, kRatedNotMeasured };

std::string_view to_string(EnergySource s);

// One contribution of an element to a segment. A split element yields one
// row per side of its subsumed reference point.
struct ElementEnergy {
  std::string element_id;
  std::string segment_id;  // empty when uncaptured
  std::string operator_id;
  double wh = 0.0;
  EnergySource source = EnergySource::kMeasured;
};

struct MeasurementRecord {
  std::string element_id;
  std::string location;
  Interval dates;
};

struct EnergyReport {
  Interval interval;
  std::map<std::string, double> per_segment_wh;
  std::map<std::string, double> per_operator_wh;
  double total_wh = 0.0;
  double uncaptured_wh = 0.0;
  std::vector<ElementEnergy> elements;  // by element id, then segment id
  std::vector<std::string> rated_not_measured;
  std::vector<std::string> hidden_consumer_notes;
  std::vector<std::string> warnings;
  std::string model_name;
  std::vector<MeasurementRecord> measurements;  // by element id
};

// Piecewise-constant integral of the profile over `interval`, in Wh.
// Errors: E-BAD-INTERVAL, E-BAD-SAMPLE(element), E-SAMPLE-OVERLAP(element).
Result<double> integrate_energy(const PowerProfile& profile, Interval interval);

// Fraction of the element's energy carried by each of its functional groups.
// Errors: E-SPLIT-DENIED, E-FRACTIONS-INVALID, E-SUBSUMPTION.
Result<GroupSplit> split_subsumed(const NetworkElement& element, const ReferencePoint& rp,
                                  const SplitPolicy& policy);

// Errors: E-BAD-INTERVAL, E-DUP-PROFILE(element), E-UNKNOWN-ELEMENT(element),
// E-UNPOWERED-PROFILE(element), split errors, integration errors.
Result<EnergyReport> attribute_energy(const Model& model, const CoverageResult& coverage,
                                      const std::vector<PowerProfile>& profiles,
                                      Interval interval, const SplitPolicy& policy);

// CSV with header element_id,start_utc,end_utc,avg_power_w and an optional
// trailing measurement_location column. Times are UTC seconds or ISO-8601.
// Missing locations default to the element's site location label.
// Errors: E-CSV(line), E-BAD-SAMPLE(element), E-SAMPLE-OVERLAP(element).
Result<std::vector<PowerProfile>> parse_power_csv(std::string_view text, const Model& model);

// Integer seconds or "YYYY-MM-DDTHH:MM:SSZ" / "YYYY-MM-DD".
std::optional<std::int64_t> parse_utc(std::string_view s);
std::string format_utc(std::int64_t t);  // "YYYY-MM-DDTHH:MM:SSZ"

}  // namespace metro
