// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

// Deliberately naive reference computations. They read raw ModelParts and
// share no code with the library beyond the data types.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "generators.hpp"
#include "metro/energy.hpp"
#include "metro/model.hpp"

namespace metro::testing {

// Depth-first substitution of every hop by the declared server trail of the
// lowest-id link joining it, until hops are media links. nullopt when some
// hop has no link.
std::optional<std::vector<std::string>> substitute_path(const ModelParts& parts,
                                                        const std::string& layer,
                                                        const std::vector<std::string>& path);

// Powered elements of the substituted path minus the elements of `path`.
std::optional<std::set<std::string>> hidden_oracle(const ModelParts& parts,
                                                   const std::string& layer,
                                                   const std::vector<std::string>& path);

// Flood fill of the media graph from each segment's interior side, never
// crossing a bounding RP link. Interior sides come from the layout of the
// line: the elements between two cuts belong to the segment bounded by both.
std::map<std::string, std::string> chain_assignment_oracle(const ChainCase& c);

// Flood fill for single-media-layer models whose segments declare their
// interior endpoints explicitly: segment -> seed elements.
std::map<std::string, std::string> flood_fill_oracle(
    const ModelParts& parts, const std::string& media_layer,
    const std::map<std::string, std::vector<std::string>>& seeds);

// Sum over 1 s steps of the power in force at each second of `interval`.
double riemann_energy_wh(const PowerProfile& profile, Interval interval);

}  // namespace metro::testing
