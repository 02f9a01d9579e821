// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

// Seeded random model families for property tests and the acceptance run.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "metro/energy.hpp"
#include "metro/model.hpp"

namespace metro::testing {

using Rng = std::mt19937_64;

struct RandomPath {
  std::string layer_id;
  std::vector<std::string> elements;
};

struct LayeredCase {
  ModelParts parts;
  std::vector<RandomPath> paths;  // random walks over existing links
};

// Up to 4 stacked layers (media at the bottom, optional second server for
// the third layer), up to 12 elements, at most 3 transparency declarations,
// random RPI-N/RPI-S bounded segments. Always builds.
LayeredCase random_layered(Rng& rng);

// A line of elements on one media layer, cut into consecutive segments by
// RPI-N reference points with random orientation.
struct ChainCase {
  ModelParts parts;
  std::vector<std::string> order;  // elements along the line
  std::vector<std::size_t> cuts;   // link i joins order[i] and order[i+1]
};
ChainCase random_chain(Rng& rng);

// Profiles for a random subset of powered elements, samples with gaps,
// spread over [0, horizon).
std::vector<PowerProfile> random_profiles(Rng& rng, const ModelParts& parts,
                                          std::int64_t horizon);

}  // namespace metro::testing
