// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

// Reference-configuration lint. Rules are local to the reference points and
// segments they name; the analyst fixes the model, the rules never do.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "metro/model.hpp"

namespace metro {

enum class Severity { kError, kWarning };

std::string_view to_string(Severity s);

struct Diagnostic {
  std::string code;  // "R1" .. "R10"
  Severity severity = Severity::kError;
  std::vector<std::string> subjects;  // offending RP or segment first
  std::string message;
  std::string anchor;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// All rules, ordered by rule number then first subject.
std::vector<Diagnostic> validate_reference_configuration(const Model& model);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

struct SubsumedPoint {
  std::string rp_id;
  std::string subsuming_element;
  bool externally_accessible = false;

  friend bool operator==(const SubsumedPoint&, const SubsumedPoint&) = default;
};

// Every subsumed RP, sorted by id.
std::vector<SubsumedPoint> subsumption_report(const Model& model);

// "R9 warning s,rg,te: message (anchor)"
std::string render_text(const Diagnostic& d);

}  // namespace metro
