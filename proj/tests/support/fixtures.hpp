// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "metro/model.hpp"

namespace metro::testing {

std::string fixture_path(const std::string& name);
std::string read_file(const std::string& path);
// Every *.metromodel.json under the fixture directory, sorted.
std::vector<std::string> fixture_names();
// Parses and builds a fixture; throws std::runtime_error on failure.
Model load_fixture(const std::string& name);
Model build_or_throw(ModelParts parts);

}  // namespace metro::testing
