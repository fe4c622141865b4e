// SPDX-License-Identifier: Apache-2.0
//
// risradar: RIS-assisted OFDM radar interference mitigation toolkit
// Copyright (C) 2026 The risradar authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "risradar/radar_sim.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "risradar/error.hpp"
#include "risradar/seed.hpp"

namespace risradar {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// RIS gain C_m^T b_n(theta) for every (n, m); collapses to one row/column
// when the config is static or the carrier approximation is in force.
ComplexGrid ris_gains(const SimulationInput& in, double theta) {
    const std::size_t N = in.params.num_subcarriers, M = in.params.num_symbols;
    const std::size_t bands = in.mode == SubcarrierMode::CarrierOnly ? 1 : N;
    const std::size_t slots = in.config.num_slots();
    ComplexGrid g(static_cast<Eigen::Index>(bands), static_cast<Eigen::Index>(slots));
    for (std::size_t n = 0; n < bands; ++n) {
        const auto sv = steering_vector(in.geometry, in.params, n, theta, in.mode);
        g.row(static_cast<Eigen::Index>(n)) = (in.config.coefficients().transpose() * sv.values).transpose();
    }
    ComplexGrid full(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(M));
    for (std::size_t m = 0; m < M; ++m)
        for (std::size_t n = 0; n < N; ++n)
            full(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m)) =
                g(static_cast<Eigen::Index>(bands == 1 ? 0 : n), static_cast<Eigen::Index>(slots == 1 ? 0 : m));
    return full;
}

void validate(const SimulationInput& in) {
    in.params.validate();
    if (in.config.empty())
        throw Error(ErrorCode::Shape, "simulate_received: empty RIS configuration");
    if (in.config.num_elements() != in.geometry.num_elements)
        throw Error(ErrorCode::Shape, "simulate_received: configuration has " +
                                          std::to_string(in.config.num_elements()) + " elements, geometry has " +
                                          std::to_string(in.geometry.num_elements));
    if (in.config.num_slots() != 1 && in.config.num_slots() != in.params.num_symbols)
        throw Error(ErrorCode::Shape, "simulate_received: configuration must be static or have one slot per symbol");
    if (static_cast<std::size_t>(in.symbols.symbols.rows()) != in.params.num_subcarriers ||
        static_cast<std::size_t>(in.symbols.symbols.cols()) != in.params.num_symbols)
        throw Error(ErrorCode::Shape, "simulate_received: symbol grid does not match N x M");
    if (!(in.target.range_m >= 0.0) || !(in.target.range_m < in.params.unambiguous_range()))
        throw Error(ErrorCode::InputDomain, "simulate_received: target range outside [0, unambiguous range)");
    if (!(in.noise.variance >= 0.0))
        throw Error(ErrorCode::InputDomain, "simulate_received: noise variance must be >= 0");
}

} // namespace

SymbolGrid generate_symbols(const OfdmParams& params, std::uint64_t seed) {
    SplitMix64 rng(seed);
    SymbolGrid out;
    out.seed = seed;
    out.symbols.resize(static_cast<Eigen::Index>(params.num_subcarriers), static_cast<Eigen::Index>(params.num_symbols));
    for (Eigen::Index m = 0; m < out.symbols.cols(); ++m)
        for (Eigen::Index n = 0; n < out.symbols.rows(); ++n) {
            const std::uint64_t bits = rng.next() >> 62;
            const double re = (bits & 1U) ? -kInvSqrt2 : kInvSqrt2;
            const double im = (bits & 2U) ? -kInvSqrt2 : kInvSqrt2;
            out.symbols(n, m) = cd{re, im};
        }
    return out;
}

ComplexGrid simulate_received(const SimulationInput& in) {
    validate(in);
    const auto& p = in.params;
    const Eigen::Index N = static_cast<Eigen::Index>(p.num_subcarriers);
    const Eigen::Index M = static_cast<Eigen::Index>(p.num_symbols);
    const double df = p.subcarrier_spacing();
    const double T = p.total_symbol_time();

    const ComplexGrid gt = ris_gains(in, in.target.angle_rad);
    const double tau = in.target.delay_s();
    const double nu = in.target.doppler_scale();

    ComplexGrid y(N, M);
    for (Eigen::Index m = 0; m < M; ++m) {
        const cd doppler = std::polar(1.0, 2.0 * kPi * p.carrier_freq_hz * nu * static_cast<double>(m) * T);
        for (Eigen::Index n = 0; n < N; ++n) {
            const cd delay = std::polar(1.0, -2.0 * kPi * static_cast<double>(n) * df * tau);
            y(n, m) = in.target.amplitude * gt(n, m) * delay * doppler;
        }
    }

    if (in.interference) {
        const auto& itf = *in.interference;
        const ComplexGrid gi = ris_gains(in, itf.angle_rad);
        const SymbolGrid di = generate_symbols(p, itf.symbol_seed);
        for (Eigen::Index m = 0; m < M; ++m) {
            const cd doppler =
                std::polar(1.0, 2.0 * kPi * p.carrier_freq_hz * itf.doppler_scale * static_cast<double>(m) * T);
            for (Eigen::Index n = 0; n < N; ++n) {
                const cd delay = std::polar(1.0, -2.0 * kPi * static_cast<double>(n) * df * itf.delay_s);
                const cd ratio = di.symbols(n, m) / in.symbols.symbols(n, m);
                y(n, m) += itf.amplitude * gi(n, m) * ratio * delay * doppler;
            }
        }
    }

    if (in.noise.variance > 0.0) {
        SplitMix64 rng(in.noise.seed);
        const double sd = std::sqrt(0.5 * in.noise.variance);
        for (Eigen::Index m = 0; m < M; ++m)
            for (Eigen::Index n = 0; n < N; ++n) {
                const double re = rng.normal();
                const double im = rng.normal();
                y(n, m) += cd{sd * re, sd * im};
            }
    }
    return y;
}

ComplexGrid frame_difference(const ComplexGrid& y_a, const ComplexGrid& y_b) {
    if (y_a.rows() != y_b.rows() || y_a.cols() != y_b.cols())
        throw Error(ErrorCode::Shape, "frame_difference: frames have different shapes");
    return 0.5 * (y_a - y_b);
}

ComplexGrid simulate_frame_pair(const SimulationInput& input, const ComplexGrid& static_term) {
    const Eigen::Index N = static_cast<Eigen::Index>(input.params.num_subcarriers);
    const Eigen::Index M = static_cast<Eigen::Index>(input.params.num_symbols);
    if (static_term.rows() != N || static_term.cols() != M)
        throw Error(ErrorCode::Shape, "simulate_frame_pair: static term does not match N x M");
    SimulationInput second = input;
    second.config = input.config.negated();
    second.noise.seed = derive_seed(input.noise.seed, {1});
    const ComplexGrid y_a = simulate_received(input) + static_term;
    const ComplexGrid y_b = simulate_received(second) + static_term;
    return frame_difference(y_a, y_b);
}

double RvMap::velocity_of_bin(std::size_t q) const {
    const std::size_t bins = velocity_bins();
    const double signed_bin =
        q < (bins + 1) / 2 ? static_cast<double>(q) : static_cast<double>(q) - static_cast<double>(bins);
    return signed_bin * velocity_bin_mps;
}

RvMap rv_map(const ComplexGrid& y, const OfdmParams& params, std::size_t pad_range, std::size_t pad_velocity) {
    if (pad_range == 0 || pad_velocity == 0)
        throw Error(ErrorCode::InputDomain, "rv_map: padding factors must be positive");
    if (static_cast<std::size_t>(y.rows()) != params.num_subcarriers ||
        static_cast<std::size_t>(y.cols()) != params.num_symbols)
        throw Error(ErrorCode::Shape, "rv_map: grid does not match N x M");

    const std::size_t N = params.num_subcarriers, M = params.num_symbols;
    const std::size_t R = pad_range * N, V = pad_velocity * M;

    Eigen::FFT<double> fft;
    fft.SetFlag(Eigen::FFT<double>::Unscaled);

    // inverse transform along subcarriers, one symbol column at a time
    ComplexGrid range_profiles(static_cast<Eigen::Index>(R), static_cast<Eigen::Index>(M));
    std::vector<cd> src(R), dst(R);
    for (std::size_t m = 0; m < M; ++m) {
        std::fill(src.begin(), src.end(), cd{0.0, 0.0});
        for (std::size_t n = 0; n < N; ++n)
            src[n] = y(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
        fft.inv(dst, src);
        for (std::size_t k = 0; k < R; ++k)
            range_profiles(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(m)) = dst[k];
    }

    RvMap map;
    map.values.resize(static_cast<Eigen::Index>(R), static_cast<Eigen::Index>(V));
    std::vector<cd> row(V), spec(V);
    for (std::size_t k = 0; k < R; ++k) {
        std::fill(row.begin(), row.end(), cd{0.0, 0.0});
        for (std::size_t m = 0; m < M; ++m)
            row[m] = range_profiles(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(m));
        fft.fwd(spec, row);
        for (std::size_t q = 0; q < V; ++q)
            map.values(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(q)) = spec[q];
    }
    map.range_bin_m = params.range_bin_size() / static_cast<double>(pad_range);
    map.velocity_bin_mps = params.velocity_bin_size() / static_cast<double>(pad_velocity);
    map.pad_range = pad_range;
    map.pad_velocity = pad_velocity;
    return map;
}

TargetEstimate estimate_target(const RvMap& map) {
    if (map.values.size() == 0)
        throw Error(ErrorCode::Shape, "estimate_target: empty rv-map");
    TargetEstimate est;
    double best = -1.0;
    for (Eigen::Index k = 0; k < map.values.rows(); ++k)
        for (Eigen::Index q = 0; q < map.values.cols(); ++q) {
            const double p = std::norm(map.values(k, q));
            if (p > best) {
                best = p;
                est.range_bin = static_cast<std::size_t>(k);
                est.velocity_bin = static_cast<std::size_t>(q);
            }
        }
    est.peak_power = best;
    est.range_m = map.range_of_bin(est.range_bin);
    est.velocity_mps = map.velocity_of_bin(est.velocity_bin);
    return est;
}

double range_error(double true_range_m, double estimated_range_m) {
    return std::abs(true_range_m - estimated_range_m);
}

} // namespace risradar
