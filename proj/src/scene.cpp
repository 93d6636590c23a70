// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 beamsim contributors

#include "beamsim/scene.hpp"

#include <algorithm>
#include <stdexcept>

#include "beamsim/rng.hpp"

namespace beamsim {

void SceneConfig::validate() const {
    if (!(canyon_length > 0.0))
        throw std::invalid_argument("scene: canyon_length must be positive");
    if (!(density > 0.0))
        throw std::invalid_argument("scene: density must be positive");
    if (truck_ratio < 0.0 || truck_ratio > 1.0)
        throw std::invalid_argument("scene: truck_ratio must be in [0, 1]");
    if (min_gap < 0.0)
        throw std::invalid_argument("scene: min_gap must be non-negative");
    if (!(wall_y[0] < wall_y[1]))
        throw std::invalid_argument("scene: wall_y must be ordered");
    for (const VehicleDims& d : {truck_dims, car_dims}) {
        if (!(d.length > 0.0) || !(d.height > 0.0) || !(d.width > 0.0))
            throw std::invalid_argument("scene: vehicle dims must be positive");
    }
    const double half_width = std::max(truck_dims.width, car_dims.width) / 2.0;
    for (double ly : lane_y) {
        if (ly - half_width < wall_y[0] || ly + half_width > wall_y[1])
            throw std::invalid_argument("scene: lane centerline does not fit between the walls");
    }
}

namespace {

// Drops a Poisson-distributed number of vehicles on one lane as a uniform
// non-overlapping configuration: draw the kinds, trim the tail until the
// total length (with gaps) fits the canyon, then distribute the remaining
// free space via sorted uniform offsets. Always succeeds and keeps the mean
// count at the configured density except near full occupancy.
std::vector<Vehicle> drop_lane(const SceneConfig& cfg, int lane, Rng& rng) {
    const double mean = cfg.density * cfg.canyon_length / 100.0;
    int n = rng.poisson(mean);

    std::vector<VehicleKind> kinds;
    kinds.reserve(n);
    for (int i = 0; i < n; ++i)
        kinds.push_back(rng.bernoulli(cfg.truck_ratio) ? VehicleKind::Truck : VehicleKind::Car);

    auto vehicle_len = [&](VehicleKind k) {
        return k == VehicleKind::Truck ? cfg.truck_dims.length : cfg.car_dims.length;
    };

    double total = 0.0;
    for (VehicleKind k : kinds)
        total += vehicle_len(k);
    while (!kinds.empty() && total + (static_cast<double>(kinds.size()) - 1.0) * cfg.min_gap >
                                 cfg.canyon_length) {
        total -= vehicle_len(kinds.back());
        kinds.pop_back();
    }
    n = static_cast<int>(kinds.size());
    if (n == 0)
        return {};

    const double free_space = cfg.canyon_length - total - (n - 1) * cfg.min_gap;
    std::vector<double> offsets(n);
    for (double& u : offsets)
        u = rng.uniform(0.0, free_space);
    std::sort(offsets.begin(), offsets.end());

    std::vector<Vehicle> out;
    out.reserve(n);
    double cursor = -cfg.canyon_length / 2.0; // left edge of the next slot
    for (int i = 0; i < n; ++i) {
        const VehicleDims& dims =
            kinds[i] == VehicleKind::Truck ? cfg.truck_dims : cfg.car_dims;
        Vehicle v;
        v.kind = kinds[i];
        v.lane = lane;
        v.dims = dims;
        v.center = {cursor + offsets[i] + dims.length / 2.0, cfg.lane_y[lane - 1],
                    dims.height / 2.0};
        out.push_back(v);
        cursor += dims.length + cfg.min_gap;
    }
    return out;
}

} // namespace

Scene generate_scene(const SceneConfig& cfg, std::uint64_t seed) {
    cfg.validate();

    constexpr int kMaxAttempts = 1000; // scenes without a single car are re-rolled
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Rng rng(substream_seed(seed, static_cast<std::uint64_t>(attempt)));

        std::vector<Vehicle> vehicles;
        for (int lane : {1, 2}) {
            std::vector<Vehicle> lane_vehicles = drop_lane(cfg, lane, rng);
            vehicles.insert(vehicles.end(), lane_vehicles.begin(), lane_vehicles.end());
        }

        std::vector<std::size_t> car_indices;
        for (std::size_t i = 0; i < vehicles.size(); ++i)
            if (vehicles[i].kind == VehicleKind::Car)
                car_indices.push_back(i);
        if (car_indices.empty())
            continue;

        const std::size_t pick = car_indices[rng.uniform_index(car_indices.size())];

        Scene scene;
        scene.rsu = cfg.rsu;
        scene.receiver = vehicles[pick];
        vehicles.erase(vehicles.begin() + static_cast<std::ptrdiff_t>(pick));
        scene.vehicles = std::move(vehicles);
        scene.wall_y = cfg.wall_y;
        scene.lane_y = cfg.lane_y;
        scene.rng_seed = seed;
        return scene;
    }
    throw std::invalid_argument(
        "scene: could not generate a car receiver; check density and truck_ratio");
}

Vec3 receiver_antenna(const Scene& scene) {
    return {scene.receiver.center.x, scene.receiver.center.y, scene.receiver.dims.height};
}

void to_json(nlohmann::json& j, const Vec3& v) { j = nlohmann::json::array({v.x, v.y, v.z}); }

void from_json(const nlohmann::json& j, Vec3& v) {
    v.x = j.at(0).get<double>();
    v.y = j.at(1).get<double>();
    v.z = j.at(2).get<double>();
}

void to_json(nlohmann::json& j, const Vehicle& v) {
    j = nlohmann::json{{"kind", v.kind == VehicleKind::Truck ? "truck" : "car"},
                       {"lane", v.lane},
                       {"center", v.center},
                       {"dims",
                        {{"length", v.dims.length},
                         {"height", v.dims.height},
                         {"width", v.dims.width}}}};
}

void from_json(const nlohmann::json& j, Vehicle& v) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "truck")
        v.kind = VehicleKind::Truck;
    else if (kind == "car")
        v.kind = VehicleKind::Car;
    else
        throw std::invalid_argument("vehicle: unknown kind '" + kind + "'");
    v.lane = j.at("lane").get<int>();
    v.center = j.at("center").get<Vec3>();
    v.dims.length = j.at("dims").at("length").get<double>();
    v.dims.height = j.at("dims").at("height").get<double>();
    v.dims.width = j.at("dims").at("width").get<double>();
}

void to_json(nlohmann::json& j, const Scene& s) {
    j = nlohmann::json{{"rsu", s.rsu},
                       {"receiver", s.receiver},
                       {"vehicles", s.vehicles},
                       {"walls", {{"y", s.wall_y}}},
                       {"lanes", {{"y", s.lane_y}}},
                       {"seed", s.rng_seed}};
}

void from_json(const nlohmann::json& j, Scene& s) {
    s.rsu = j.at("rsu").get<Vec3>();
    s.receiver = j.at("receiver").get<Vehicle>();
    s.vehicles = j.at("vehicles").get<std::vector<Vehicle>>();
    s.wall_y = j.at("walls").at("y").get<std::array<double, 2>>();
    s.lane_y = j.at("lanes").at("y").get<std::array<double, 2>>();
    s.rng_seed = j.at("seed").get<std::uint64_t>();
}

} // namespace beamsim
