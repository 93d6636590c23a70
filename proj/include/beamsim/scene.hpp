// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 beamsim contributors

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace beamsim {

struct Vec3 {
    double x{0.0};
    double y{0.0};
    double z{0.0};
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double c, const Vec3& v) { return {c * v.x, c * v.y, c * v.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

enum class VehicleKind { Truck, Car };

/// length along x, height along z, width along y. All in meters, positive.
struct VehicleDims {
    double length{0.0};
    double height{0.0};
    double width{0.0};
};

/// Axis-aligned box standing on the ground plane: center.z == dims.height / 2.
struct Vehicle {
    VehicleKind kind{VehicleKind::Car};
    int lane{1}; // 1 is the lane nearer the RSU
    Vec3 center;
    VehicleDims dims;

    Vec3 box_min() const {
        return {center.x - dims.length / 2.0, center.y - dims.width / 2.0, 0.0};
    }
    Vec3 box_max() const {
        return {center.x + dims.length / 2.0, center.y + dims.width / 2.0, dims.height};
    }
};

struct SceneConfig {
    double canyon_length{200.0};             // x spans [-canyon_length/2, canyon_length/2]
    std::array<double, 2> lane_y{6.0, 10.0}; // lane 1 first
    std::array<double, 2> wall_y{0.0, 20.0}; // building facades
    Vec3 rsu{0.0, 1.0, 5.0};
    VehicleDims truck_dims{12.0, 3.5, 2.6};
    VehicleDims car_dims{5.0, 1.5, 1.9};
    double density{8.0}; // vehicles per lane per 100 m (mean)
    double truck_ratio{0.4};
    double min_gap{2.0}; // bumper-to-bumper clearance along x

    /// Throws std::invalid_argument on inconsistent values (lanes outside the
    /// walls, non-positive dims/density, ratio outside [0,1], ...).
    void validate() const;
};

struct Scene {
    Vec3 rsu;
    Vehicle receiver; // always a car; not repeated in `vehicles`
    std::vector<Vehicle> vehicles;
    std::array<double, 2> wall_y{0.0, 20.0};
    std::array<double, 2> lane_y{6.0, 10.0};
    std::uint64_t rng_seed{0};
};

/// Drop vehicles on both lanes and pick the receiver uniformly among the cars.
/// Pure function of (cfg, seed). Throws if cfg is invalid or no car can be
/// generated (truck_ratio too close to 1 with the given density).
Scene generate_scene(const SceneConfig& cfg, std::uint64_t seed);

/// Antenna point: center of the receiver's roof.
Vec3 receiver_antenna(const Scene& scene);

void to_json(nlohmann::json& j, const Vec3& v);
void from_json(const nlohmann::json& j, Vec3& v);
void to_json(nlohmann::json& j, const Vehicle& v);
void from_json(const nlohmann::json& j, Vehicle& v);
void to_json(nlohmann::json& j, const Scene& s);
void from_json(const nlohmann::json& j, Scene& s);

} // namespace beamsim
