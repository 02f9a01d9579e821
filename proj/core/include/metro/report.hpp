// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

// Machine (JSON) and human (aligned text) renderings of analysis results.
// Every function is deterministic: equal inputs give identical bytes.

#pragma once

#include <string>
#include <vector>

#include "metro/catalog.hpp"
#include "metro/energy.hpp"
#include "metro/mec.hpp"
#include "metro/recomposition.hpp"
#include "metro/validation.hpp"

namespace metro {

std::string diagnostics_json(const std::vector<Diagnostic>& diagnostics);
std::string diagnostics_text(const std::vector<Diagnostic>& diagnostics);

std::string coverage_json(const CoverageResult& coverage);
std::string coverage_text(const CoverageResult& coverage);

std::string path_trace_json(const PathTrace& trace);
std::string path_trace_text(const PathTrace& trace);
std::string hidden_json(const std::vector<std::string>& hidden);
std::string hidden_text(const std::vector<std::string>& hidden);

std::string energy_json(const EnergyReport& report);
std::string energy_text(const EnergyReport& report);
// segment_id,operator_id,wh rows, then an "(uncaptured)" row.
std::string energy_csv(const EnergyReport& report, const Model& model);

std::string candidacy_json(const std::vector<CandidacyReport>& reports);
std::string candidacy_text(const std::vector<CandidacyReport>& reports);

std::string catalog_text(const std::vector<TemplateInfo>& templates);

}  // namespace metro
