// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "metro/model.hpp"
#include "metro/result.hpp"

namespace metro {

inline constexpr std::string_view kSchemaVersion = "1";
inline constexpr std::string_view kModelExtension = ".metromodel.json";

// A shape-checked model document. Semantic checks belong to build_model.
struct ModelDocument {
  std::string schema_version{kSchemaVersion};
  ModelParts parts;

  friend bool operator==(const ModelDocument&, const ModelDocument&) = default;
};

// Parses a UTF-8 JSON model document against the closed schema. Errors:
// E-SYNTAX(line:col), E-MISSING-FIELD(path), E-UNKNOWN-KEY(path),
// E-BAD-VALUE(path), E-BAD-VERSION.
Result<ModelDocument> parse_model(std::string_view text);

// Canonical form: fixed key order, collections sorted by id, empty lists
// written as [], two-space indent, trailing newline.
std::string serialize_model(const Model& model);
std::string serialize_document(const ModelDocument& doc);

}  // namespace metro
