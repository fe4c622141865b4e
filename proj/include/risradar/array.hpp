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

// Array geometry, steering vectors and beampattern evaluation for a linear
// RIS co-located with an OFDM radar receiver.
//
// Phase convention: with half-wavelength spacing the element-l steering phase
// at subcarrier n is exp(-j * 2*pi * spacing * (lambda / lambda_n) * l * cos(theta)),
// i.e. exp(-j * pi * l * cos(theta)) at the carrier. The same convention is used
// by the pattern, synthesis and simulation code.

#ifndef RISRADAR_ARRAY_HPP
#define RISRADAR_ARRAY_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace risradar {

using cd = std::complex<double>;

// Model value of the propagation speed. 3e8 keeps range bins on round numbers
// (c / 2B = 0.75 m at 200 MHz).
inline constexpr double kSpeedOfLight = 3.0e8;
inline constexpr double kPi = 3.14159265358979323846;

struct OfdmParams {
    double carrier_freq_hz = 77.0e9;
    double bandwidth_hz = 200.0e6;
    std::size_t num_subcarriers = 100;
    std::size_t num_symbols = 50;
    double cp_ratio = 0.125;

    /// Throws Error(InvalidScenario) when any field is out of range.
    void validate() const;

    double subcarrier_spacing() const { return bandwidth_hz / static_cast<double>(num_subcarriers); }
    double symbol_time() const { return 1.0 / subcarrier_spacing(); }
    /// Symbol duration including the cyclic prefix.
    double total_symbol_time() const { return symbol_time() * (1.0 + cp_ratio); }
    double wavelength() const { return kSpeedOfLight / carrier_freq_hz; }
    double subcarrier_wavelength(std::size_t n) const;
    double range_bin_size() const { return kSpeedOfLight / (2.0 * bandwidth_hz); }
    double unambiguous_range() const { return kSpeedOfLight / (2.0 * subcarrier_spacing()); }
    double velocity_bin_size() const;
};

struct ArrayGeometry {
    std::size_t num_elements = 1;
    double element_spacing_wavelengths = 0.5;
    /// Element-to-antenna distances d_l in meters; empty means all zero.
    std::vector<double> element_offsets_m;

    static ArrayGeometry colocated(std::size_t num_elements) { return ArrayGeometry{num_elements, 0.5, {}}; }
    double offset(std::size_t l) const { return element_offsets_m.empty() ? 0.0 : element_offsets_m[l]; }
};

/// Which wavelengths enter the steering vector. CarrierOnly uses lambda_n = lambda
/// and a single (carrier) term in power sums; AllSubcarriers uses exact lambda_n
/// and sums over every subcarrier.
enum class SubcarrierMode { CarrierOnly, AllSubcarriers };

/// RIS reflection coefficients, elements x time slots. Each column is the
/// coefficient vector for one time slot.
class RisConfig {
public:
    RisConfig() = default;
    explicit RisConfig(Eigen::MatrixXcd coefficients);
    /// Static single-slot configuration.
    static RisConfig from_vector(std::span<const cd> values);

    std::size_t num_elements() const { return static_cast<std::size_t>(coeffs_.rows()); }
    std::size_t num_slots() const { return static_cast<std::size_t>(coeffs_.cols()); }
    bool is_static() const;
    bool empty() const { return coeffs_.size() == 0; }

    const Eigen::MatrixXcd& coefficients() const { return coeffs_; }
    Eigen::VectorXcd column(std::size_t slot) const { return coeffs_.col(static_cast<Eigen::Index>(slot)); }
    std::vector<cd> column_vector(std::size_t slot = 0) const;

    RisConfig negated() const { return RisConfig(-coeffs_); }
    RisConfig scaled(cd factor) const { return RisConfig(coeffs_ * factor); }

private:
    Eigen::MatrixXcd coeffs_;
};

struct SteeringVector {
    Eigen::VectorXcd values;
    std::size_t subcarrier = 0;
    double angle_rad = 0.0;
};

SteeringVector steering_vector(const ArrayGeometry& geometry, const OfdmParams& params, std::size_t n,
                               double theta, SubcarrierMode mode = SubcarrierMode::AllSubcarriers);

/// Sum_l c_l * b_n(theta)[l] for one configuration column.
cd pattern_value(const ArrayGeometry& geometry, std::span<const cd> column, const OfdmParams& params,
                 std::size_t n, double theta, SubcarrierMode mode = SubcarrierMode::CarrierOnly);

/// Carrier-approximation pattern of a co-located half-wavelength array:
/// Sum_l c_l exp(-j pi l cos(theta)).
cd carrier_pattern(std::span<const cd> column, double theta);

/// Power received from angle phi summed over time slots, for one subcarrier.
double subcarrier_power(const ArrayGeometry& geometry, const RisConfig& config, const OfdmParams& params,
                        std::size_t n, double phi);

/// Sum_n ||C^T b_n(phi)||^2 per angle (or the carrier term alone in CarrierOnly mode).
std::vector<double> power_pattern(const ArrayGeometry& geometry, const RisConfig& config,
                                  const OfdmParams& params, std::span<const double> angles,
                                  SubcarrierMode mode);

/// Carrier-only power pattern of a co-located half-wavelength array.
std::vector<double> power_pattern(const RisConfig& config, std::span<const double> angles);

inline constexpr double kDefaultDbFloor = -300.0;

/// 10 log10(p / max p); values that would fall below floor_db (including exact
/// zeros) are clamped to floor_db.
std::vector<double> normalize_pattern_db(std::span<const double> pattern, double floor_db = kDefaultDbFloor);

/// Inclusive evenly spaced grid over [0, pi].
std::vector<double> angle_grid(std::size_t points = 721);

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

} // namespace risradar

#endif
