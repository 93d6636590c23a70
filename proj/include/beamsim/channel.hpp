// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 beamsim contributors

#pragma once

#include <armadillo>
#include <utility>
#include <vector>

#include "beamsim/raytracer.hpp"

namespace beamsim {

/// Uniform planar arrays at both ends. Rows stack along z, columns along the
/// array's horizontal axis; spacing in wavelengths.
struct ArrayConfig {
    int nt_rows{4};
    int nt_cols{2};
    int nr_rows{4};
    int nr_cols{2};
    double spacing{0.5};

    int num_tx() const { return nt_rows * nt_cols; }
    int num_rx() const { return nr_rows * nr_cols; }
    int num_pairs() const { return num_tx() * num_rx(); }
    void validate() const;
};

struct ChannelConfig {
    double symbol_period{10e-9}; // seconds
    int num_taps{16};
    double rolloff{1.0}; // raised-cosine pulse

    void validate() const;
};

/// Tap-domain MIMO channel: taps[n] is num_rx x num_tx.
struct ChannelTaps {
    std::vector<arma::cx_mat> taps;
};

/// DFT codebooks for both sides. Column i of each matrix is one unit-norm
/// beam; each matrix is unitary. Beam-pair index (0-based) is rx-major:
/// pair = rx * num_tx + tx.
struct Codebook {
    arma::cx_mat rx_beams; // num_rx x num_rx
    arma::cx_mat tx_beams; // num_tx x num_tx

    int num_pairs() const {
        return static_cast<int>(rx_beams.n_cols * tx_beams.n_cols);
    }
    int pair_index(int rx, int tx) const {
        return rx * static_cast<int>(tx_beams.n_cols) + tx;
    }
    std::pair<int, int> rx_tx(int pair) const {
        const int nt = static_cast<int>(tx_beams.n_cols);
        return {pair / nt, pair % nt};
    }
};

/// Received power per beam pair (linear) and the 1-based optimal index
/// (lowest index on exact ties).
struct BeamPowerLabel {
    std::vector<double> y;
    int s{1};
};

/// UPA array response. Element (p, q) carries phase
/// 2*pi*spacing*(p*sin(el) + q*cos(el)*sin(az)), p fastest in the output
/// vector, normalized to unit norm.
arma::cx_vec steering_vector(double az, double el, int rows, int cols, double spacing);

/// Kronecker 2-D DFT codebook per side.
Codebook build_dft_codebook(const ArrayConfig& arr);

/// Raised-cosine pulse, g(0) = 1, zeros at nonzero integer multiples of T.
double raised_cosine(double t, double symbol_period, double rolloff);

/// Tap-domain channel from the traced paths. Delays are shifted so the
/// earliest path lands on tap num_taps/4, keeping pulse tails inside the
/// window. Empty path list gives all-zero taps.
ChannelTaps build_channel(const std::vector<PathRecord>& paths, const ArrayConfig& arr,
                          const ChannelConfig& ch);

/// Sweep all beam pairs: y_i = sum_n |w_i^H H[n] f_i|^2.
BeamPowerLabel beam_sweep(const ChannelTaps& h, const Codebook& cb);

/// Naive per-pair reference for the sweep; kept for testing the fast path.
BeamPowerLabel beam_sweep_reference(const ChannelTaps& h, const Codebook& cb);

/// Lowest-index argmax as a 1-based label.
int argmax_one_based(const std::vector<double>& values);

} // namespace beamsim
