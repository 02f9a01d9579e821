// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

#include "fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "metro/schema_io.hpp"

namespace metro::testing {

std::string fixture_path(const std::string& name) {
  return std::string(METRO_FIXTURE_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(METRO_FIXTURE_DIR)) {
    auto name = entry.path().filename().string();
    if (name.size() > kModelExtension.size() && name.ends_with(kModelExtension)) {
      out.push_back(name);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Model build_or_throw(ModelParts parts) {
  auto model = build_model(std::move(parts));
  if (!model) throw std::runtime_error("build failed: " + to_string(model.error()));
  return std::move(model).value();
}

Model load_fixture(const std::string& name) {
  auto doc = parse_model(read_file(fixture_path(name)));
  if (!doc) throw std::runtime_error(name + ": " + to_string(doc.error()));
  return build_or_throw(doc->parts);
}

}  // namespace metro::testing
