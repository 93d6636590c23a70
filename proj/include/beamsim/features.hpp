// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 beamsim contributors

#pragma once

#include <string>
#include <vector>

#include "beamsim/scene.hpp"

namespace beamsim {

/// Fixed-length ordered location encoding. The group layout is
/// [rsu, lane-1 trucks, lane-2 trucks, lane-1 cars, lane-2 cars]; each vehicle
/// contributes an (x, y) pair in the receiver-centered frame, nearest first by
/// |x|. Groups are truncated/padded to max_per_group entries; padding sits at
/// x = virtual_x on the group's lane. awareness_level keeps the first k groups
/// (1 = RSU only .. 5 = all), so lower levels are exact prefixes of higher
/// ones.
struct EncoderConfig {
    int max_per_group{2};   // N
    double virtual_x{1e4};  // padding x for absent vehicles
    int awareness_level{5}; // 1..5

    void validate() const;
};

using FeatureVector = std::vector<double>;

/// 2 + (awareness_level - 1) * N * 2.
int feature_length(const EncoderConfig& cfg);

FeatureVector encode(const Scene& scene, const EncoderConfig& cfg);

/// Column names matching encode()'s layout, e.g. rsu_x, t1_1_x, t1_1_y, ...
std::vector<std::string> feature_names(const EncoderConfig& cfg);

} // namespace beamsim
