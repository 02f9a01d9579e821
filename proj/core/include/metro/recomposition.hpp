// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

// Layer-by-layer capture of energy consumers into segments, and expansion
// of client-layer paths down to the transmission media.

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "metro/model.hpp"
#include "metro/result.hpp"

namespace metro {

// Why an element landed in a segment: the bounding RP nearest to it at the
// layer where it was captured.
struct CaptureReason {
  std::string element_id;
  std::string layer_id;
  std::string rp_id;

  friend bool operator==(const CaptureReason&, const CaptureReason&) = default;
};

struct CoverageResult {
  std::map<std::string, std::string> assignment;  // powered element -> segment
  std::vector<std::string> uncaptured;             // sorted
  std::map<std::string, std::vector<CaptureReason>> rp_trace;  // segment -> captures
  std::vector<std::string> warnings;

  friend bool operator==(const CoverageResult&, const CoverageResult&) = default;
};

CoverageResult serial_recomposition(const Model& model);

struct PathTrace {
  std::string layer_id;  // transmission-media layer the trace runs on
  std::vector<std::string> elements;
  // visible[i]: elements[i] was named in the requested path.
  std::vector<bool> visible;

  friend bool operator==(const PathTrace&, const PathTrace&) = default;
};

// Recursively substitutes each hop by its server trail down to the media
// layer. Errors: E-NO-SUCH-LAYER, E-NOT-A-PATH(position).
Result<PathTrace> expand_path(const Model& model, std::string_view layer_id,
                              const std::vector<std::string>& path);

// Powered elements in the expansion that the requested path does not name.
Result<std::vector<std::string>> detect_hidden_consumers(
    const Model& model, std::string_view layer_id, const std::vector<std::string>& path);

}  // namespace metro
