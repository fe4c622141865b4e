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

#include "risradar/risradar.h"

#include <cstring>
#include <new>
#include <string>

#include "risradar/error.hpp"
#include "risradar/experiment.hpp"

// The opaque handles are thin wrappers over the C++ value types.
struct ris_scenario {
    risradar::Scenario value;
};

struct ris_config {
    risradar::RisConfig value;
};

namespace {

thread_local std::string g_last_error;

ris_status to_status(risradar::ErrorCode code) {
    using risradar::ErrorCode;
    switch (code) {
    case ErrorCode::InputDomain: return RIS_ERR_DOMAIN;
    case ErrorCode::Shape: return RIS_ERR_SHAPE;
    case ErrorCode::DegenerateInput: return RIS_ERR_DEGENERATE;
    case ErrorCode::TrainingFailure: return RIS_ERR_TRAINING;
    case ErrorCode::Parse: return RIS_ERR_PARSE;
    case ErrorCode::Io: return RIS_ERR_IO;
    case ErrorCode::InvalidScenario: return RIS_ERR_SCENARIO;
    }
    return RIS_ERR_INTERNAL;
}

ris_status fail(ris_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
ris_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const risradar::Error& e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(RIS_ERR_INTERNAL, "out of memory");
    } catch (const std::filesystem::filesystem_error& e) {
        return fail(RIS_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(RIS_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(RIS_ERR_INTERNAL, "unknown error");
    }
}

ris_status null_arg(const char* name) { return fail(RIS_ERR_INVALID_ARGUMENT, std::string(name) + " is NULL"); }

risradar::SubcarrierMode to_mode(ris_subcarrier_mode mode) {
    return mode == RIS_ALL_SUBCARRIERS ? risradar::SubcarrierMode::AllSubcarriers
                                       : risradar::SubcarrierMode::CarrierOnly;
}

ris_status emit_config(risradar::RisConfig config, ris_config** out) {
    *out = new ris_config{std::move(config)};
    return RIS_OK;
}

risradar::RisConfig peak_or_train(const ris_scenario* scenario, const ris_config* peak) {
    if (peak)
        return peak->value;
    return risradar::obtain_peak_config(scenario->value, {});
}

} // namespace

extern "C" {

const char* ris_version(void) { return "1.0.0"; }

const char* ris_last_error(void) { return g_last_error.c_str(); }

const char* ris_status_string(ris_status status) {
    switch (status) {
    case RIS_OK: return "ok";
    case RIS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RIS_ERR_DOMAIN: return "input outside domain";
    case RIS_ERR_SHAPE: return "shape mismatch";
    case RIS_ERR_DEGENERATE: return "degenerate input";
    case RIS_ERR_TRAINING: return "training failure";
    case RIS_ERR_PARSE: return "parse error";
    case RIS_ERR_IO: return "i/o error";
    case RIS_ERR_SCENARIO: return "invalid scenario";
    case RIS_ERR_NOTHING_RUN: return "nothing run";
    case RIS_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

ris_status ris_scenario_default(ris_scenario** out) {
    if (!out)
        return null_arg("out");
    return guarded([&] {
        *out = new ris_scenario{};
        return RIS_OK;
    });
}

ris_status ris_scenario_load(const char* path, ris_scenario** out) {
    if (!path)
        return null_arg("path");
    if (!out)
        return null_arg("out");
    return guarded([&] {
        *out = new ris_scenario{risradar::load_scenario(path)};
        return RIS_OK;
    });
}

ris_status ris_scenario_set(ris_scenario* scenario, const char* key, const char* value) {
    if (!scenario)
        return null_arg("scenario");
    if (!key || !value)
        return null_arg("key/value");
    return guarded([&] {
        scenario->value.set(key, value);
        return RIS_OK;
    });
}

ris_status ris_scenario_validate(const ris_scenario* scenario) {
    if (!scenario)
        return null_arg("scenario");
    return guarded([&] {
        scenario->value.validate();
        return RIS_OK;
    });
}

ris_status ris_scenario_describe(const ris_scenario* scenario, char* buf, size_t size, size_t* needed) {
    if (!scenario)
        return null_arg("scenario");
    return guarded([&] {
        const std::string text = scenario->value.to_text();
        if (needed)
            *needed = text.size() + 1;
        if (buf && size > 0) {
            const size_t n = std::min(size - 1, text.size());
            std::memcpy(buf, text.data(), n);
            buf[n] = '\0';
        }
        return RIS_OK;
    });
}

void ris_scenario_free(ris_scenario* scenario) { delete scenario; }

ris_status ris_config_create(size_t elements, size_t slots, const double* coefficients, ris_config** out) {
    if (!coefficients)
        return null_arg("coefficients");
    if (!out)
        return null_arg("out");
    if (elements == 0 || slots == 0)
        return fail(RIS_ERR_SHAPE, "configuration must have at least one element and one slot");
    return guarded([&] {
        Eigen::MatrixXcd c(static_cast<Eigen::Index>(elements), static_cast<Eigen::Index>(slots));
        for (size_t m = 0; m < slots; ++m)
            for (size_t l = 0; l < elements; ++l) {
                const size_t i = 2 * (m * elements + l);
                c(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(m)) = {coefficients[i], coefficients[i + 1]};
            }
        return emit_config(risradar::RisConfig(std::move(c)), out);
    });
}

ris_status ris_config_load(const char* path, ris_config** out) {
    if (!path)
        return null_arg("path");
    if (!out)
        return null_arg("out");
    return guarded([&] { return emit_config(risradar::read_config_file(path), out); });
}

ris_status ris_config_save(const ris_config* config, const char* path, double theta_t, uint64_t seed) {
    if (!config)
        return null_arg("config");
    if (!path)
        return null_arg("path");
    return guarded([&] {
        risradar::write_config_file(path, config->value, risradar::ConfigHeader{theta_t, seed});
        return RIS_OK;
    });
}

ris_status ris_config_shape(const ris_config* config, size_t* elements, size_t* slots) {
    if (!config)
        return null_arg("config");
    if (elements)
        *elements = config->value.num_elements();
    if (slots)
        *slots = config->value.num_slots();
    return RIS_OK;
}

ris_status ris_config_coefficients(const ris_config* config, double* out) {
    if (!config)
        return null_arg("config");
    if (!out)
        return null_arg("out");
    const auto& c = config->value.coefficients();
    size_t i = 0;
    for (Eigen::Index m = 0; m < c.cols(); ++m)
        for (Eigen::Index l = 0; l < c.rows(); ++l) {
            out[i++] = c(l, m).real();
            out[i++] = c(l, m).imag();
        }
    return RIS_OK;
}

void ris_config_free(ris_config* config) { delete config; }

ris_status ris_analytic_peak(double theta_t, size_t elements, ris_config** out) {
    if (!out)
        return null_arg("out");
    return guarded([&] { return emit_config(risradar::analytic_peak(theta_t, elements), out); });
}

ris_status ris_notch(double theta_n, ris_config** out) {
    if (!out)
        return null_arg("out");
    return guarded([&] { return emit_config(risradar::notch_config(theta_n), out); });
}

ris_status ris_multi_notch(double theta_n, size_t count, double spacing, ris_config** out) {
    if (!out)
        return null_arg("out");
    return guarded(
        [&] { return emit_config(risradar::multi_notch(risradar::NotchSpec{theta_n, count, spacing}), out); });
}

ris_status ris_convolve(const ris_config* a, const ris_config* b, ris_config** out) {
    if (!a || !b)
        return null_arg("config");
    if (!out)
        return null_arg("out");
    return guarded([&] { return emit_config(risradar::combine_convolve(a->value, b->value), out); });
}

ris_status ris_renormalize(const ris_config* config, ris_config** out) {
    if (!config)
        return null_arg("config");
    if (!out)
        return null_arg("out");
    return guarded([&] { return emit_config(risradar::renormalize(config->value), out); });
}

ris_status ris_train_peak(const ris_scenario* scenario, ris_config** out, double* gain_ratio) {
    if (!scenario)
        return null_arg("scenario");
    if (!out)
        return null_arg("out");
    return guarded([&] {
        const auto& s = scenario->value;
        s.validate();
        auto result = risradar::train_peak_network(s.target_angle, s.peak_elements, s.network);
        if (gain_ratio)
            *gain_ratio = result.gain_ratio;
        return emit_config(std::move(result.config), out);
    });
}

ris_status ris_pattern_value(const ris_config* config, double theta, double* re, double* im) {
    if (!config)
        return null_arg("config");
    if (!re || !im)
        return null_arg("re/im");
    return guarded([&] {
        const auto v = risradar::carrier_pattern(config->value.column_vector(0), theta);
        *re = v.real();
        *im = v.imag();
        return RIS_OK;
    });
}

ris_status ris_power_pattern(const ris_config* config, const ris_scenario* scenario, const double* angles,
                             size_t count, ris_subcarrier_mode mode, double* out) {
    if (!config)
        return null_arg("config");
    if (!scenario)
        return null_arg("scenario");
    if (!angles || !out)
        return null_arg("angles/out");
    return guarded([&] {
        const auto& s = scenario->value;
        const risradar::ArrayGeometry geom{config->value.num_elements(), s.element_spacing, {}};
        const auto p = risradar::power_pattern(geom, config->value, s.ofdm, std::span<const double>(angles, count),
                                               to_mode(mode));
        std::copy(p.begin(), p.end(), out);
        return RIS_OK;
    });
}

ris_status ris_normalize_db(const double* pattern, size_t count, double floor_db, double* out) {
    if (!pattern || !out)
        return null_arg("pattern/out");
    return guarded([&] {
        const auto db = risradar::normalize_pattern_db(std::span<const double>(pattern, count), floor_db);
        std::copy(db.begin(), db.end(), out);
        return RIS_OK;
    });
}

ris_status ris_sinr(const ris_config* config, const ris_scenario* scenario, double theta, double theta_i,
                    double sigma2, ris_subcarrier_mode mode, ris_sinr_report* out) {
    if (!config)
        return null_arg("config");
    if (!scenario)
        return null_arg("scenario");
    if (!out)
        return null_arg("out");
    return guarded([&] {
        const auto& s = scenario->value;
        const risradar::ArrayGeometry geom{config->value.num_elements(), s.element_spacing, {}};
        const auto r = risradar::sinr(geom, config->value, s.ofdm, theta, theta_i, sigma2, to_mode(mode));
        *out = ris_sinr_report{r.signal_power, r.interference_power, r.noise_power, r.sinr_linear, r.sinr_db};
        return RIS_OK;
    });
}

ris_status ris_simulate_trial(const ris_scenario* scenario, const ris_config* config, double power_ratio_db,
                              double angle_offset_rad, uint64_t trial_seed, double* grid_out,
                              ris_range_estimate* estimate) {
    if (!scenario)
        return null_arg("scenario");
    if (!config)
        return null_arg("config");
    return guarded([&] {
        scenario->value.validate();
        risradar::ComplexGrid grid;
        risradar::TargetEstimate est;
        risradar::run_trial(scenario->value, config->value, power_ratio_db, angle_offset_rad, trial_seed, &grid,
                            &est);
        if (grid_out) {
            size_t i = 0;
            for (Eigen::Index n = 0; n < grid.rows(); ++n)
                for (Eigen::Index m = 0; m < grid.cols(); ++m) {
                    grid_out[i++] = grid(n, m).real();
                    grid_out[i++] = grid(n, m).imag();
                }
        }
        if (estimate)
            *estimate = ris_range_estimate{est.range_m, est.velocity_mps, est.peak_power, est.range_bin,
                                           est.velocity_bin};
        return RIS_OK;
    });
}

ris_status ris_run_train_peak(const ris_scenario* scenario, const char* out_dir, double* gain_ratio) {
    if (!scenario)
        return null_arg("scenario");
    if (!out_dir)
        return null_arg("out_dir");
    return guarded([&] {
        const auto result = risradar::run_train_peak(scenario->value, out_dir);
        if (gain_ratio)
            *gain_ratio = result.gain_ratio;
        return RIS_OK;
    });
}

ris_status ris_run_pattern_study(const ris_scenario* scenario, const ris_config* peak, const char* out_dir) {
    if (!scenario)
        return null_arg("scenario");
    if (!out_dir)
        return null_arg("out_dir");
    return guarded([&] {
        scenario->value.validate();
        risradar::run_pattern_study(scenario->value, peak_or_train(scenario, peak), out_dir);
        return RIS_OK;
    });
}

ris_status ris_run_sweep(const ris_scenario* scenario, const ris_config* peak, const char* out_dir) {
    if (!scenario)
        return null_arg("scenario");
    if (!out_dir)
        return null_arg("out_dir");
    return guarded([&] {
        scenario->value.validate();
        risradar::run_sweep_study(scenario->value, peak_or_train(scenario, peak), out_dir);
        return RIS_OK;
    });
}

ris_status ris_run_multinotch(const ris_scenario* scenario, const ris_config* peak, const char* out_dir) {
    if (!scenario)
        return null_arg("scenario");
    if (!out_dir)
        return null_arg("out_dir");
    return guarded([&] {
        scenario->value.validate();
        risradar::run_multinotch_study(scenario->value, peak_or_train(scenario, peak), out_dir);
        return RIS_OK;
    });
}

ris_status ris_report(const char* out_dir, int* all_pass, size_t* studies) {
    if (!out_dir)
        return null_arg("out_dir");
    return guarded([&] {
        const auto summary = risradar::report(out_dir);
        if (all_pass)
            *all_pass = summary.all_pass() ? 1 : 0;
        if (studies)
            *studies = summary.studies;
        if (summary.studies == 0)
            return fail(RIS_ERR_NOTHING_RUN, "no study outputs found in " + std::string(out_dir));
        return RIS_OK;
    });
}

} // extern "C"
