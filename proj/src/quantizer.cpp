// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 beamsim contributors

#include "beamsim/quantizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace beamsim {

void CqiParams::validate() const {
    if (!(p_upper > p_lower))
        throw std::invalid_argument("cqi: p_upper must exceed p_lower");
    if (granularity.has_value() && !(*granularity > 0.0))
        throw std::invalid_argument("cqi: granularity must be positive");
}

namespace {

double require_granularity(const CqiParams& params) {
    params.validate();
    if (!params.granularity.has_value())
        throw std::invalid_argument("cqi: quantize/dequantize need a granularity");
    return *params.granularity;
}

} // namespace

int quantize(double p_dbm, const CqiParams& params) {
    const double r = require_granularity(params);
    const double cap = (params.p_upper - params.p_lower) / r;
    double x = (p_dbm - params.p_lower) / r;
    x = std::min(std::max(x, 0.0), cap);
    return static_cast<int>(std::ceil(x));
}

double dequantize(int q, const CqiParams& params) {
    const double r = require_granularity(params);
    return r * q + params.p_lower;
}

int max_cqi(const CqiParams& params) {
    const double r = require_granularity(params);
    return static_cast<int>(std::ceil((params.p_upper - params.p_lower) / r));
}

double reconstruct(double p_dbm, const CqiParams& params) {
    params.validate();
    if (!params.enabled())
        return p_dbm;
    return dequantize(quantize(p_dbm, params), params);
}

} // namespace beamsim
