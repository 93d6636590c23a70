// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 beamsim contributors

#pragma once

#include <complex>
#include <vector>

#include "json.hpp"

#include "beamsim/scene.hpp"

namespace beamsim {

/// Speed of light in vacuum [m/s].
inline constexpr double kSpeedOfLight = 299792458.0;

/// One propagation path. Azimuth is measured in the x-y plane from +x,
/// elevation from the x-y plane toward +z. Departure angles are taken at the
/// RSU, arrival angles at the receiver antenna, both pointing along the path
/// toward the nearest path vertex.
struct PathRecord {
    double aoa_az{0.0};
    double aoa_el{0.0};
    double aod_az{0.0};
    double aod_el{0.0};
    double delay{0.0};              // seconds
    std::complex<double> gain{0.0}; // |gain|^2 is received power in mW
};

struct RaytraceConfig {
    double carrier_freq{28e9};      // Hz
    int max_paths{10};              // keep the strongest L candidates
    double reflection_loss_db{6.0}; // per bounce
    bool include_ground{true};
    double tx_power_dbm{30.0};

    void validate() const;
};

/// Closed-segment vs closed-box intersection (slab method). An endpoint lying
/// on a box face counts as a hit.
bool segment_hits_box(const Vec3& p0, const Vec3& p1, const Vehicle& box);

/// Image-method tracer. Candidates: LOS, first-order reflections off the two
/// wall planes, the ground plane (optional), and both long side faces of every
/// truck. A candidate survives when its specular point lies on the reflecting
/// face and no vehicle box occludes either sub-segment (the receiver's own box
/// and the reflecting truck itself excluded). Result sorted by |gain|
/// descending, at most cfg.max_paths entries; empty list means outage.
std::vector<PathRecord> trace(const Scene& scene, const RaytraceConfig& cfg);

void to_json(nlohmann::json& j, const PathRecord& p);
void from_json(const nlohmann::json& j, PathRecord& p);

} // namespace beamsim
