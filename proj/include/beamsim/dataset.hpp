// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 beamsim contributors

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "beamsim/channel.hpp"
#include "beamsim/features.hpp"
#include "beamsim/quantizer.hpp"
#include "beamsim/scene.hpp"

namespace beamsim {

/// Stored in place of 10*log10(0) for beams with no received power.
inline constexpr double kOutageDbm = -250.0;

/// Linear mW to dBm, mapping non-positive power to the outage sentinel.
double linear_to_dbm(double mw);

struct Sample {
    std::int64_t scene_id{0};
    std::uint64_t seed{0};
    FeatureVector features;
    std::vector<double> y_dbm; // per-beam received power, s = 1-based argmax
    int s{1};

    bool operator==(const Sample&) const = default;
};

struct LabelKind {
    enum class Type { Original, Cqi, Reconstructed, OrderedTopM };
    Type type{Type::Original};
    CqiParams params{};
    int top_m{1}; // OrderedTopM only
};

struct LabelVariant {
    LabelKind kind;
    std::vector<double> values;
};

struct Dataset {
    std::vector<Sample> samples;
    int schema_version{1};
    nlohmann::json config_snapshot = nlohmann::json::object();
};

/// Everything needed to produce one labeled sample from a seed.
struct GenerationConfig {
    SceneConfig scene{};
    RaytraceConfig raytracer{};
    ArrayConfig array{};
    ChannelConfig channel{};
    EncoderConfig encoder{};
};

/// Label post-processing per the dataset table: raw powers, their CQIs, the
/// reconstructed powers, or the top-M reconstructed powers sorted descending
/// (ties by original beam index).
LabelVariant make_label(const Sample& sample, const LabelKind& kind);

/// Deterministic shuffle-split into (train, test); both parts non-empty.
std::pair<Dataset, Dataset> split(const Dataset& ds, double train_frac, std::uint64_t seed);

/// JSON-Lines persistence: a header line with schema version and config
/// snapshot, then one sample per line. load() rejects version mismatches and
/// malformed lines with the offending line number.
void save(const Dataset& ds, const std::string& path);
Dataset load(const std::string& path);

/// Flat CSV companion (one column per feature and per beam).
void export_csv(const Dataset& ds, const std::string& path, const EncoderConfig& encoder);

/// Scene -> paths -> channel -> sweep -> features for one sample.
Sample make_sample(const GenerationConfig& cfg, const Codebook& cb, std::int64_t scene_id,
                   std::uint64_t sample_seed);

/// Generate n samples from per-sample seeds derived from `seed`. The parallel
/// version distributes samples across OpenMP threads and produces exactly the
/// serial result.
Dataset generate_dataset(const GenerationConfig& cfg, int n, std::uint64_t seed);
Dataset generate_dataset_serial(const GenerationConfig& cfg, int n, std::uint64_t seed);

void to_json(nlohmann::json& j, const Sample& s);
void from_json(const nlohmann::json& j, Sample& s);
nlohmann::json generation_config_to_json(const GenerationConfig& cfg);

} // namespace beamsim
