/*
 * SPDX-License-Identifier: Apache-2.0
 *
 * risradar: RIS-assisted OFDM radar interference mitigation toolkit
 * Copyright (C) 2026 The risradar authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of librisradar.
 *
 * All functions return a ris_status. On failure a human-readable message is
 * available from ris_last_error() until the next call on the same thread.
 * Handles are opaque; every *_create / *_load / constructor output must be
 * released with the matching *_free. Complex arrays are interleaved
 * (re0, im0, re1, im1, ...). Angles are in radians.
 */

#ifndef RISRADAR_H
#define RISRADAR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define RIS_API __declspec(dllexport)
#else
#  define RIS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ris_status {
    RIS_OK = 0,
    RIS_ERR_INVALID_ARGUMENT = 1, /* null handle or pointer */
    RIS_ERR_DOMAIN = 2,           /* value outside its domain (angle, index, sigma2) */
    RIS_ERR_SHAPE = 3,            /* dimension mismatch */
    RIS_ERR_DEGENERATE = 4,       /* e.g. all-zero pattern */
    RIS_ERR_TRAINING = 5,         /* network training diverged */
    RIS_ERR_PARSE = 6,            /* malformed file or unknown scenario key */
    RIS_ERR_IO = 7,
    RIS_ERR_SCENARIO = 8,         /* scenario failed validation */
    RIS_ERR_NOTHING_RUN = 9,      /* report found no study outputs */
    RIS_ERR_INTERNAL = 10
} ris_status;

typedef enum ris_subcarrier_mode {
    RIS_CARRIER_ONLY = 0,
    RIS_ALL_SUBCARRIERS = 1
} ris_subcarrier_mode;

typedef struct ris_scenario ris_scenario;
typedef struct ris_config ris_config;

typedef struct ris_sinr_report {
    double signal_power;
    double interference_power;
    double noise_power;
    double sinr_linear;
    double sinr_db;
} ris_sinr_report;

typedef struct ris_range_estimate {
    double range_m;
    double velocity_mps;
    double peak_power;
    size_t range_bin;
    size_t velocity_bin;
} ris_range_estimate;

RIS_API const char* ris_version(void);
RIS_API const char* ris_last_error(void);
RIS_API const char* ris_status_string(ris_status status);

/* ---- scenarios ---------------------------------------------------------- */

RIS_API ris_status ris_scenario_default(ris_scenario** out);
RIS_API ris_status ris_scenario_load(const char* path, ris_scenario** out);
/* Same keys as the scenario file, e.g. ("run.seed", "7"). */
RIS_API ris_status ris_scenario_set(ris_scenario* scenario, const char* key, const char* value);
RIS_API ris_status ris_scenario_validate(const ris_scenario* scenario);
/* Copies the canonical "key = value" listing into buf (NUL-terminated);
 * *needed receives the required size including the terminator. */
RIS_API ris_status ris_scenario_describe(const ris_scenario* scenario, char* buf, size_t size, size_t* needed);
RIS_API void ris_scenario_free(ris_scenario* scenario);

/* ---- configurations ----------------------------------------------------- */

/* coefficients: elements * slots complex values, slot-major (slot 0 first). */
RIS_API ris_status ris_config_create(size_t elements, size_t slots, const double* coefficients, ris_config** out);
RIS_API ris_status ris_config_load(const char* path, ris_config** out);
RIS_API ris_status ris_config_save(const ris_config* config, const char* path, double theta_t, uint64_t seed);
RIS_API ris_status ris_config_shape(const ris_config* config, size_t* elements, size_t* slots);
/* out must hold 2 * elements * slots doubles. */
RIS_API ris_status ris_config_coefficients(const ris_config* config, double* out);
RIS_API void ris_config_free(ris_config* config);

RIS_API ris_status ris_analytic_peak(double theta_t, size_t elements, ris_config** out);
RIS_API ris_status ris_notch(double theta_n, ris_config** out);
RIS_API ris_status ris_multi_notch(double theta_n, size_t count, double spacing, ris_config** out);
RIS_API ris_status ris_convolve(const ris_config* a, const ris_config* b, ris_config** out);
RIS_API ris_status ris_renormalize(const ris_config* config, ris_config** out);

/* Trains the peak network with the scenario's target angle, element count
 * and network settings. gain_ratio may be NULL. */
RIS_API ris_status ris_train_peak(const ris_scenario* scenario, ris_config** out, double* gain_ratio);

/* ---- patterns ----------------------------------------------------------- */

/* Carrier pattern of slot 0: sum_l c_l exp(-j pi l cos theta). */
RIS_API ris_status ris_pattern_value(const ris_config* config, double theta, double* re, double* im);
/* Power pattern with the scenario's OFDM parameters and element spacing. */
RIS_API ris_status ris_power_pattern(const ris_config* config, const ris_scenario* scenario, const double* angles,
                                     size_t count, ris_subcarrier_mode mode, double* out);
RIS_API ris_status ris_normalize_db(const double* pattern, size_t count, double floor_db, double* out);
RIS_API ris_status ris_sinr(const ris_config* config, const ris_scenario* scenario, double theta, double theta_i,
                            double sigma2, ris_subcarrier_mode mode, ris_sinr_report* out);

/* ---- radar pipeline ----------------------------------------------------- */

/* One frame-difference trial of the scenario with the given configuration;
 * writes the N x M differenced grid (row-major, interleaved) to grid_out when
 * non-NULL and the peak estimate (rv-map padded per the scenario) to estimate. */
RIS_API ris_status ris_simulate_trial(const ris_scenario* scenario, const ris_config* config, double power_ratio_db,
                                      double angle_offset_rad, uint64_t trial_seed, double* grid_out,
                                      ris_range_estimate* estimate);

/* ---- studies (write files under out_dir) -------------------------------- */

/* peak may be NULL, in which case the peak network is trained. */
RIS_API ris_status ris_run_train_peak(const ris_scenario* scenario, const char* out_dir, double* gain_ratio);
RIS_API ris_status ris_run_pattern_study(const ris_scenario* scenario, const ris_config* peak, const char* out_dir);
RIS_API ris_status ris_run_sweep(const ris_scenario* scenario, const ris_config* peak, const char* out_dir);
RIS_API ris_status ris_run_multinotch(const ris_scenario* scenario, const ris_config* peak, const char* out_dir);
/* Writes summary.txt. Returns RIS_ERR_NOTHING_RUN when out_dir holds no study
 * outputs; *all_pass is set to 1 when every acceptance check passed. */
RIS_API ris_status ris_report(const char* out_dir, int* all_pass, size_t* studies);

#ifdef __cplusplus
}
#endif

#endif
