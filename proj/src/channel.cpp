// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 beamsim contributors

#include "beamsim/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace beamsim {

void ArrayConfig::validate() const {
    if (nt_rows < 1 || nt_cols < 1 || nr_rows < 1 || nr_cols < 1)
        throw std::invalid_argument("array: element counts must be positive");
    if (!(spacing > 0.0))
        throw std::invalid_argument("array: spacing must be positive");
}

void ChannelConfig::validate() const {
    if (!(symbol_period > 0.0))
        throw std::invalid_argument("channel: symbol_period must be positive");
    if (num_taps < 1)
        throw std::invalid_argument("channel: num_taps must be >= 1");
    if (rolloff < 0.0 || rolloff > 1.0)
        throw std::invalid_argument("channel: rolloff must be in [0, 1]");
}

arma::cx_vec steering_vector(double az, double el, int rows, int cols, double spacing) {
    const int n = rows * cols;
    arma::cx_vec v(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    const double u_row = spacing * std::sin(el);
    const double u_col = spacing * std::cos(el) * std::sin(az);
    for (int q = 0; q < cols; ++q) {
        for (int p = 0; p < rows; ++p) {
            const double phase = 2.0 * std::numbers::pi * (p * u_row + q * u_col);
            v(q * rows + p) = std::polar(scale, phase);
        }
    }
    return v;
}

namespace {

// 2-D DFT matrix with p fastest, matching the steering-vector layout.
// Column (kr, kc) has element (p, q) = exp(-2i*pi*(kr*p/rows + kc*q/cols)).
arma::cx_mat dft_beams(int rows, int cols) {
    const int n = rows * cols;
    arma::cx_mat beams(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int kc = 0; kc < cols; ++kc) {
        for (int kr = 0; kr < rows; ++kr) {
            const int beam = kc * rows + kr;
            for (int q = 0; q < cols; ++q) {
                for (int p = 0; p < rows; ++p) {
                    const double phase =
                        -2.0 * std::numbers::pi *
                        (static_cast<double>(kr) * p / rows + static_cast<double>(kc) * q / cols);
                    beams(q * rows + p, beam) = std::polar(scale, phase);
                }
            }
        }
    }
    return beams;
}

} // namespace

Codebook build_dft_codebook(const ArrayConfig& arr) {
    arr.validate();
    Codebook cb;
    cb.rx_beams = dft_beams(arr.nr_rows, arr.nr_cols);
    cb.tx_beams = dft_beams(arr.nt_rows, arr.nt_cols);
    return cb;
}

double raised_cosine(double t, double symbol_period, double rolloff) {
    const double x = t / symbol_period;
    const double px = std::numbers::pi * x;
    const double sinc = x == 0.0 ? 1.0 : std::sin(px) / px;
    if (rolloff == 0.0)
        return sinc;
    const double denom = 1.0 - (2.0 * rolloff * x) * (2.0 * rolloff * x);
    if (std::abs(denom) < 1e-10) {
        // t = +-T/(2*rolloff): take the analytic limit.
        const double a = 1.0 / (2.0 * rolloff);
        const double pa = std::numbers::pi * a;
        const double sinc_a = std::sin(pa) / pa;
        return sinc_a * std::numbers::pi / 4.0;
    }
    return sinc * std::cos(rolloff * px) / denom;
}

ChannelTaps build_channel(const std::vector<PathRecord>& paths, const ArrayConfig& arr,
                          const ChannelConfig& ch) {
    arr.validate();
    ch.validate();

    ChannelTaps out;
    out.taps.assign(ch.num_taps, arma::cx_mat(arr.num_rx(), arr.num_tx(), arma::fill::zeros));
    if (paths.empty())
        return out;

    double tau_min = paths.front().delay;
    for (const PathRecord& p : paths)
        tau_min = std::min(tau_min, p.delay);
    const double origin = (ch.num_taps / 4) * ch.symbol_period;
    const double scale = std::sqrt(static_cast<double>(arr.num_tx() * arr.num_rx()));

    for (const PathRecord& p : paths) {
        const arma::cx_vec ar =
            steering_vector(p.aoa_az, p.aoa_el, arr.nr_rows, arr.nr_cols, arr.spacing);
        const arma::cx_vec at =
            steering_vector(p.aod_az, p.aod_el, arr.nt_rows, arr.nt_cols, arr.spacing);
        const arma::cx_mat outer = ar * at.t(); // a_r a_t^H
        const double shifted = p.delay - tau_min + origin;
        for (int n = 0; n < ch.num_taps; ++n) {
            const double g = raised_cosine(n * ch.symbol_period - shifted, ch.symbol_period,
                                           ch.rolloff);
            if (g != 0.0)
                out.taps[n] += (scale * g) * p.gain * outer;
        }
    }
    return out;
}

int argmax_one_based(const std::vector<double>& values) {
    if (values.empty())
        throw std::invalid_argument("argmax of empty vector");
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] > values[best])
            best = i;
    return static_cast<int>(best) + 1;
}

BeamPowerLabel beam_sweep(const ChannelTaps& h, const Codebook& cb) {
    const int nr = static_cast<int>(cb.rx_beams.n_cols);
    const int nt = static_cast<int>(cb.tx_beams.n_cols);
    BeamPowerLabel label;
    label.y.assign(static_cast<std::size_t>(nr) * nt, 0.0);
    for (const arma::cx_mat& tap : h.taps) {
        if (static_cast<int>(tap.n_rows) != static_cast<int>(cb.rx_beams.n_rows) ||
            static_cast<int>(tap.n_cols) != static_cast<int>(cb.tx_beams.n_rows))
            throw std::invalid_argument("beam_sweep: tap dimensions do not match codebook");
        const arma::cx_mat projected = cb.rx_beams.t() * tap * cb.tx_beams;
        for (int r = 0; r < nr; ++r)
            for (int t = 0; t < nt; ++t)
                label.y[cb.pair_index(r, t)] += std::norm(projected(r, t));
    }
    label.s = argmax_one_based(label.y);
    return label;
}

BeamPowerLabel beam_sweep_reference(const ChannelTaps& h, const Codebook& cb) {
    const int nr = static_cast<int>(cb.rx_beams.n_cols);
    const int nt = static_cast<int>(cb.tx_beams.n_cols);
    BeamPowerLabel label;
    label.y.assign(static_cast<std::size_t>(nr) * nt, 0.0);
    for (int r = 0; r < nr; ++r) {
        for (int t = 0; t < nt; ++t) {
            double acc = 0.0;
            for (const arma::cx_mat& tap : h.taps) {
                const arma::cx_double val =
                    arma::cdot(cb.rx_beams.col(r), tap * cb.tx_beams.col(t));
                acc += std::norm(val);
            }
            label.y[cb.pair_index(r, t)] = acc;
        }
    }
    label.s = argmax_one_based(label.y);
    return label;
}

} // namespace beamsim
