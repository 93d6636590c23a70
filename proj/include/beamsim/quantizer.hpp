// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 beamsim contributors

#pragma once

#include <optional>

namespace beamsim {

/// Uniform CQI quantizer parameters. A missing granularity means "no
/// quantization": reconstruct() passes powers through unchanged.
struct CqiParams {
    double p_upper{0.0};    // dBm
    double p_lower{-150.0}; // dBm
    std::optional<double> granularity{}; // dB per CQI step

    void validate() const;
    bool enabled() const { return granularity.has_value(); }
};

/// q = ceil(min(max((p - P_l)/r, 0), (P_u - P_l)/r)). Requires granularity.
int quantize(double p_dbm, const CqiParams& params);

/// Reconstructed power r*q + P_l.
double dequantize(int q, const CqiParams& params);

/// Largest CQI index, ceil((P_u - P_l)/r).
int max_cqi(const CqiParams& params);

/// dequantize(quantize(p)) when quantization is enabled, else p.
double reconstruct(double p_dbm, const CqiParams& params);

} // namespace beamsim
