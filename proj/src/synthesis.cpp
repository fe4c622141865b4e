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

#include "risradar/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "risradar/error.hpp"

namespace risradar {

namespace {

void require_angle(double theta, const char* what) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > kPi)
        throw Error(ErrorCode::InputDomain,
                    std::string(what) + ": angle " + std::to_string(theta) + " rad outside [0, pi]");
}

Eigen::VectorXcd convolve(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(a.size() + b.size() - 1);
    for (Eigen::Index i = 0; i < a.size(); ++i)
        for (Eigen::Index k = 0; k < b.size(); ++k)
            out(i + k) += a(i) * b(k);
    return out;
}

double normalized_db(std::span<const cd> column, double theta, double peak, double floor_db) {
    const double p = std::norm(carrier_pattern(column, theta));
    if (p == 0.0)
        return floor_db;
    return std::max(floor_db, 10.0 * std::log10(p / peak));
}

} // namespace

RisConfig analytic_peak(double theta_t, std::size_t num_elements) {
    require_angle(theta_t, "analytic_peak");
    if (num_elements == 0)
        throw Error(ErrorCode::InputDomain, "analytic_peak: need at least one element");
    const double step = kPi * std::cos(theta_t);
    std::vector<cd> c(num_elements);
    for (std::size_t l = 0; l < num_elements; ++l)
        c[l] = std::polar(1.0, step * static_cast<double>(l));
    return RisConfig::from_vector(c);
}

RisConfig notch_config(double theta_n) {
    require_angle(theta_n, "notch_config");
    const cd c[2] = {cd{1.0, 0.0}, -std::polar(1.0, kPi * std::cos(theta_n))};
    return RisConfig::from_vector(c);
}

std::vector<double> notch_angles(const NotchSpec& spec) {
    if (spec.count == 0)
        throw Error(ErrorCode::InputDomain, "multi_notch: notch count must be at least 1");
    if (!std::isfinite(spec.spacing_rad) || spec.spacing_rad < 0.0)
        throw Error(ErrorCode::InputDomain, "multi_notch: notch spacing must be >= 0");
    require_angle(spec.angle_rad, "multi_notch");
    std::vector<double> angles(spec.count);
    const double center = 0.5 * static_cast<double>(spec.count - 1);
    for (std::size_t k = 0; k < spec.count; ++k) {
        angles[k] = spec.angle_rad + (static_cast<double>(k) - center) * spec.spacing_rad;
        require_angle(angles[k], "multi_notch (shifted notch)");
    }
    return angles;
}

RisConfig multi_notch(const NotchSpec& spec) {
    const auto angles = notch_angles(spec);
    RisConfig out = notch_config(angles.front());
    for (std::size_t k = 1; k < angles.size(); ++k)
        out = combine_convolve(out, notch_config(angles[k]));
    return out;
}

RisConfig combine_convolve(const RisConfig& a, const RisConfig& b) {
    if (a.empty() || b.empty())
        throw Error(ErrorCode::Shape, "combine_convolve: empty configuration");
    const std::size_t sa = a.num_slots(), sb = b.num_slots();
    if (sa != sb && sa != 1 && sb != 1)
        throw Error(ErrorCode::Shape, "combine_convolve: time-slot counts " + std::to_string(sa) + " and " +
                                          std::to_string(sb) + " are incompatible");
    const std::size_t slots = std::max(sa, sb);
    Eigen::MatrixXcd out(static_cast<Eigen::Index>(a.num_elements() + b.num_elements() - 1),
                         static_cast<Eigen::Index>(slots));
    for (std::size_t m = 0; m < slots; ++m)
        out.col(static_cast<Eigen::Index>(m)) = convolve(a.column(sa == 1 ? 0 : m), b.column(sb == 1 ? 0 : m));
    return RisConfig(std::move(out));
}

RisConfig renormalize(const RisConfig& config) {
    const double peak = config.coefficients().cwiseAbs().maxCoeff();
    if (!(peak > 0.0))
        throw Error(ErrorCode::DegenerateInput, "renormalize: configuration is identically zero");
    return config.scaled(cd{1.0 / peak, 0.0});
}

RisConfig combine_normalized(const RisConfig& a, const RisConfig& b) {
    return renormalize(combine_convolve(a, b));
}

double peak_gain_ratio(const RisConfig& config, double theta_t) {
    const auto col = config.column_vector(0);
    double mag = 0.0;
    for (const cd& c : col)
        mag += std::abs(c);
    if (!(mag > 0.0))
        return 0.0;
    return std::abs(carrier_pattern(col, theta_t)) / mag;
}

SinrReport sinr(const ArrayGeometry& geometry, const RisConfig& config, const OfdmParams& params, double theta,
                double theta_i, double sigma2, SubcarrierMode mode) {
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
        throw Error(ErrorCode::InputDomain, "sinr: noise power must be positive");
    const double angles[2] = {theta, theta_i};
    const auto powers = power_pattern(geometry, config, params, angles, mode);
    SinrReport r;
    r.signal_power = powers[0];
    r.interference_power = powers[1];
    r.noise_power = sigma2;
    r.sinr_linear = r.signal_power / (r.interference_power + sigma2);
    r.sinr_db = 10.0 * std::log10(r.sinr_linear);
    return r;
}

double carrier_pattern_peak_power(std::span<const cd> column) {
    constexpr std::size_t kGrid = 4097;
    const auto grid = angle_grid(kGrid);
    std::size_t best = 0;
    double best_p = -1.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double p = std::norm(carrier_pattern(column, grid[k]));
        if (p > best_p) {
            best_p = p;
            best = k;
        }
    }
    // golden-section refinement on the neighbouring bracket
    double lo = grid[best == 0 ? 0 : best - 1];
    double hi = grid[std::min(best + 1, grid.size() - 1)];
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    auto f = [&](double t) { return std::norm(carrier_pattern(column, t)); };
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        }
    }
    return std::max({best_p, f1, f2});
}

SuppressionMetrics suppression_metrics(const RisConfig& notch, const NotchSpec& spec, double threshold_db,
                                       double floor_db) {
    const auto angles = notch_angles(spec);
    const auto col = notch.column_vector(0);
    const double peak = carrier_pattern_peak_power(col);
    if (!(peak > 0.0))
        throw Error(ErrorCode::DegenerateInput, "suppression_metrics: notch pattern is identically zero");
    auto db = [&](double t) { return normalized_db(col, t, peak, floor_db); };

    SuppressionMetrics m;
    m.threshold_db = threshold_db;
    const double center = spec.angle_rad;
    m.depth_at_center_db = db(center);

    // in-band: the span covered by the notch angles
    const double band_lo = angles.front(), band_hi = angles.back();
    double worst = db(band_lo);
    if (band_hi > band_lo) {
        constexpr int kSamples = 2001;
        for (int i = 0; i < kSamples; ++i) {
            const double t = band_lo + (band_hi - band_lo) * static_cast<double>(i) / (kSamples - 1);
            worst = std::max(worst, db(t));
        }
    }
    m.min_inband_suppression_db = -worst;

    if (!(m.depth_at_center_db < threshold_db)) {
        m.lower_edge_rad = m.upper_edge_rad = center;
        return m;
    }

    // walk outwards until the threshold is crossed, then bisect the crossing
    auto edge = [&](double direction) {
        constexpr double kStep = 1e-4;
        double inside = center;
        for (;;) {
            double next = inside + direction * kStep;
            if (next <= 0.0 || next >= kPi) {
                const double bound = direction < 0.0 ? 0.0 : kPi;
                if (db(bound) < threshold_db)
                    return bound;
                next = bound;
            }
            if (db(next) >= threshold_db) {
                double a = inside, b = next;
                for (int it = 0; it < 200 && a != b; ++it) {
                    const double mid = 0.5 * (a + b);
                    if (mid == a || mid == b)
                        break;
                    (db(mid) < threshold_db ? a : b) = mid;
                }
                return 0.5 * (a + b);
            }
            inside = next;
        }
    };
    m.lower_edge_rad = edge(-1.0);
    m.upper_edge_rad = edge(+1.0);
    m.bandwidth_rad = m.upper_edge_rad - m.lower_edge_rad;
    return m;
}

} // namespace risradar
