// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 beamsim contributors

#include "beamsim/raytracer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace beamsim {

void RaytraceConfig::validate() const {
    if (!(carrier_freq > 0.0))
        throw std::invalid_argument("raytracer: carrier_freq must be positive");
    if (max_paths < 1)
        throw std::invalid_argument("raytracer: max_paths must be >= 1");
    if (reflection_loss_db < 0.0)
        throw std::invalid_argument("raytracer: reflection_loss_db must be non-negative");
}

bool segment_hits_box(const Vec3& p0, const Vec3& p1, const Vehicle& box) {
    const Vec3 lo = box.box_min();
    const Vec3 hi = box.box_max();
    const double p0c[3] = {p0.x, p0.y, p0.z};
    const double p1c[3] = {p1.x, p1.y, p1.z};
    const double loc[3] = {lo.x, lo.y, lo.z};
    const double hic[3] = {hi.x, hi.y, hi.z};

    double t0 = 0.0, t1 = 1.0;
    for (int a = 0; a < 3; ++a) {
        const double d = p1c[a] - p0c[a];
        if (d == 0.0) {
            if (p0c[a] < loc[a] || p0c[a] > hic[a])
                return false;
            continue;
        }
        double ta = (loc[a] - p0c[a]) / d;
        double tb = (hic[a] - p0c[a]) / d;
        if (ta > tb)
            std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
        if (t0 > t1)
            return false;
    }
    return true;
}

namespace {

struct Candidate {
    bool has_reflection{false};
    Vec3 specular; // valid when has_reflection
    double length{0.0};
    int bounces{0};
};

// Occlusion test for one sub-segment against every vehicle box except the
// receiver (not part of scene.vehicles) and, for truck reflections, the
// reflecting truck itself (the sub-segment ends on its face).
bool blocked(const Scene& scene, const Vec3& a, const Vec3& b, const Vehicle* skip) {
    for (const Vehicle& v : scene.vehicles) {
        if (&v == skip)
            continue;
        if (segment_hits_box(a, b, v))
            return true;
    }
    return false;
}

void append_angles(PathRecord& rec, const Vec3& rsu, const Vec3& antenna, const Candidate& c) {
    const Vec3 first_vertex = c.has_reflection ? c.specular : antenna;
    const Vec3 last_vertex = c.has_reflection ? c.specular : rsu;
    const Vec3 dep = first_vertex - rsu;
    const Vec3 arr = last_vertex - antenna;
    rec.aod_az = std::atan2(dep.y, dep.x);
    rec.aod_el = std::atan2(dep.z, std::hypot(dep.x, dep.y));
    rec.aoa_az = std::atan2(arr.y, arr.x);
    rec.aoa_el = std::atan2(arr.z, std::hypot(arr.x, arr.y));
}

} // namespace

std::vector<PathRecord> trace(const Scene& scene, const RaytraceConfig& cfg) {
    cfg.validate();

    const Vec3 rsu = scene.rsu;
    const Vec3 antenna = receiver_antenna(scene);
    const double wavelength = kSpeedOfLight / cfg.carrier_freq;
    const double tx_mw = std::pow(10.0, cfg.tx_power_dbm / 10.0);

    std::vector<Candidate> kept;

    // LOS
    if (!blocked(scene, rsu, antenna, nullptr)) {
        Candidate c;
        c.length = norm(antenna - rsu);
        kept.push_back(c);
    }

    // Reflection across a horizontal-normal plane y = plane_y (walls) or the
    // ground z = 0, both infinite. The image segment crosses the plane once
    // because source and destination sit on the same side.
    auto plane_reflection = [&](bool is_ground, double plane_y) {
        Vec3 image = rsu;
        double t;
        if (is_ground) {
            image.z = -rsu.z;
            t = image.z / (image.z - antenna.z);
        } else {
            image.y = 2.0 * plane_y - rsu.y;
            const double denom = antenna.y - image.y;
            if (denom == 0.0)
                return;
            t = (plane_y - image.y) / denom;
        }
        if (!(t > 0.0 && t < 1.0))
            return;
        Candidate c;
        c.has_reflection = true;
        c.specular = image + t * (antenna - image);
        if (is_ground)
            c.specular.z = 0.0;
        else if (c.specular.z < 0.0)
            return;
        c.length = norm(antenna - image);
        c.bounces = 1;
        if (blocked(scene, rsu, c.specular, nullptr) ||
            blocked(scene, c.specular, antenna, nullptr))
            return;
        kept.push_back(c);
    };

    plane_reflection(false, scene.wall_y[0]);
    plane_reflection(false, scene.wall_y[1]);
    if (cfg.include_ground)
        plane_reflection(true, 0.0);

    // Truck side faces. A face reflects only when both endpoints are strictly
    // on its outward side and the specular point lies within the face
    // rectangle (closed).
    for (const Vehicle& truck : scene.vehicles) {
        if (truck.kind != VehicleKind::Truck)
            continue;
        for (int side : {-1, +1}) {
            const double face_y = truck.center.y + side * truck.dims.width / 2.0;
            const double s_rsu = (rsu.y - face_y) * side;
            const double s_ant = (antenna.y - face_y) * side;
            if (!(s_rsu > 0.0 && s_ant > 0.0))
                continue;
            Vec3 image = rsu;
            image.y = 2.0 * face_y - rsu.y;
            const double t = (face_y - image.y) / (antenna.y - image.y);
            if (!(t > 0.0 && t < 1.0))
                continue;
            Candidate c;
            c.has_reflection = true;
            c.specular = image + t * (antenna - image);
            if (std::abs(c.specular.x - truck.center.x) > truck.dims.length / 2.0)
                continue;
            if (c.specular.z < 0.0 || c.specular.z > truck.dims.height)
                continue;
            c.length = norm(antenna - image);
            c.bounces = 1;
            if (blocked(scene, rsu, c.specular, &truck) ||
                blocked(scene, c.specular, antenna, &truck))
                continue;
            kept.push_back(c);
        }
    }

    std::vector<PathRecord> paths;
    paths.reserve(kept.size());
    for (const Candidate& c : kept) {
        PathRecord rec;
        rec.delay = c.length / kSpeedOfLight;
        const double friis = wavelength / (4.0 * std::numbers::pi * c.length);
        const double amp = std::sqrt(tx_mw) * friis *
                           std::pow(10.0, -cfg.reflection_loss_db * c.bounces / 20.0);
        const double phase = -2.0 * std::numbers::pi * cfg.carrier_freq * rec.delay;
        rec.gain = std::polar(amp, phase);
        append_angles(rec, rsu, antenna, c);
        paths.push_back(rec);
    }

    std::sort(paths.begin(), paths.end(), [](const PathRecord& a, const PathRecord& b) {
        const double ga = std::abs(a.gain), gb = std::abs(b.gain);
        if (ga != gb)
            return ga > gb;
        return a.delay < b.delay;
    });
    if (static_cast<int>(paths.size()) > cfg.max_paths)
        paths.resize(cfg.max_paths);
    return paths;
}

void to_json(nlohmann::json& j, const PathRecord& p) {
    j = nlohmann::json{{"aoa_az", p.aoa_az},     {"aoa_el", p.aoa_el},
                       {"aod_az", p.aod_az},     {"aod_el", p.aod_el},
                       {"delay_s", p.delay},     {"gain_re", p.gain.real()},
                       {"gain_im", p.gain.imag()}};
}

void from_json(const nlohmann::json& j, PathRecord& p) {
    p.aoa_az = j.at("aoa_az").get<double>();
    p.aoa_el = j.at("aoa_el").get<double>();
    p.aod_az = j.at("aod_az").get<double>();
    p.aod_el = j.at("aod_el").get<double>();
    p.delay = j.at("delay_s").get<double>();
    p.gain = {j.at("gain_re").get<double>(), j.at("gain_im").get<double>()};
}

} // namespace beamsim
