// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 beamsim contributors

#include "beamsim/features.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace beamsim {

void EncoderConfig::validate() const {
    if (max_per_group < 1)
        throw std::invalid_argument("features: max_per_group must be >= 1");
    if (awareness_level < 1 || awareness_level > 5)
        throw std::invalid_argument("features: awareness_level must be in [1, 5]");
    if (!std::isfinite(virtual_x))
        throw std::invalid_argument("features: virtual_x must be finite");
}

int feature_length(const EncoderConfig& cfg) {
    cfg.validate();
    return 2 + (cfg.awareness_level - 1) * cfg.max_per_group * 2;
}

namespace {

struct Group {
    VehicleKind kind;
    int lane;
    const char* tag;
};

constexpr Group kGroups[4] = {{VehicleKind::Truck, 1, "t1"},
                              {VehicleKind::Truck, 2, "t2"},
                              {VehicleKind::Car, 1, "c1"},
                              {VehicleKind::Car, 2, "c2"}};

} // namespace

FeatureVector encode(const Scene& scene, const EncoderConfig& cfg) {
    cfg.validate();
    const Vec3 antenna = receiver_antenna(scene);
    const double ox = antenna.x;
    const double oy = antenna.y;

    FeatureVector out;
    out.reserve(feature_length(cfg));
    out.push_back(scene.rsu.x - ox);
    out.push_back(scene.rsu.y - oy);

    for (int g = 0; g < cfg.awareness_level - 1; ++g) {
        const Group& group = kGroups[g];
        std::vector<std::pair<double, double>> entries;
        for (const Vehicle& v : scene.vehicles) {
            if (v.kind == group.kind && v.lane == group.lane)
                entries.emplace_back(v.center.x - ox, v.center.y - oy);
        }
        // Nearest first along x; ties broken by signed x for determinism.
        std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
            const double aa = std::abs(a.first), ab = std::abs(b.first);
            if (aa != ab)
                return aa < ab;
            return a.first < b.first;
        });
        if (static_cast<int>(entries.size()) > cfg.max_per_group)
            entries.resize(cfg.max_per_group);
        const double pad_y = scene.lane_y[group.lane - 1] - oy;
        while (static_cast<int>(entries.size()) < cfg.max_per_group)
            entries.emplace_back(cfg.virtual_x, pad_y);
        for (const auto& [x, y] : entries) {
            out.push_back(x);
            out.push_back(y);
        }
    }
    return out;
}

std::vector<std::string> feature_names(const EncoderConfig& cfg) {
    cfg.validate();
    std::vector<std::string> names{"rsu_x", "rsu_y"};
    for (int g = 0; g < cfg.awareness_level - 1; ++g) {
        for (int i = 1; i <= cfg.max_per_group; ++i) {
            const std::string base = std::string(kGroups[g].tag) + "_" + std::to_string(i);
            names.push_back(base + "_x");
            names.push_back(base + "_y");
        }
    }
    return names;
}

} // namespace beamsim
