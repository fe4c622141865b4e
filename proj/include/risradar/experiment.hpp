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

// End-to-end studies driven by a Scenario: beampattern study, interference
// sweep, multi-notch study and the summary report.
//
// Output files (all under the output directory):
//   peak_config.txt, training_loss.csv             train-peak
//   pattern_peak.csv, pattern_notch.csv,
//   pattern_combined.csv, pattern_metrics.csv      pattern
//   sweep.csv, sweep_trials.csv,
//   sample_grid.txt, sample_rvmap.txt              sweep
//   multinotch_summary.csv, multinotch_pattern_eps_<e>.csv,
//   multinotch_sweep_eps_<e>.csv                   multinotch
//   summary.txt                                    report
// Every study also writes scenario_echo.txt.

#ifndef RISRADAR_EXPERIMENT_HPP
#define RISRADAR_EXPERIMENT_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "risradar/peak_network.hpp"
#include "risradar/radar_sim.hpp"
#include "risradar/scenario.hpp"
#include "risradar/synthesis.hpp"
#include "risradar/text_io.hpp"

namespace risradar {

namespace fs = std::filesystem;

/// Trains the peak network for the scenario's target angle and writes
/// peak_config.txt and training_loss.csv.
TrainingResult run_train_peak(const Scenario& scenario, const fs::path& out_dir);

/// Loads peak_config.txt from a file, or trains when path is empty.
RisConfig obtain_peak_config(const Scenario& scenario, const fs::path& peak_config_path);

struct PatternStudyResult {
    fs::path peak_file, notch_file, combined_file, metrics_file;
    double peak_gain_ratio = 0.0;
    double combined_argmax_deg = 0.0;
    double combined_db_at_interferer = 0.0;
    std::size_t notch_null_count = 0;
};

PatternStudyResult run_pattern_study(const Scenario& scenario, const RisConfig& peak, const fs::path& out_dir);

/// Zeros of the carrier pattern strictly inside (0, pi): grid local minima
/// refined by golden section, kept when at least depth_db below the peak.
std::vector<double> pattern_nulls(const RisConfig& config, std::size_t grid_points, double depth_db = -100.0);

struct SweepRow {
    double power_ratio_db = 0.0;
    double angle_offset_rad = 0.0;
    double mean_range_error_m = 0.0;
    double std_range_error_m = 0.0;
    std::size_t trials = 0;
};

struct TrialRecord {
    std::uint64_t seed = 0;
    double power_ratio_db = 0.0;
    double angle_rad = 0.0;
    double range_err_m = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;        // sorted by (power ratio, offset)
    std::vector<TrialRecord> trials;   // same order, trials contiguous per row
    double range_bin_m = 0.0;
};

/// Range-error statistics of the frame-difference / rv-map / peak pipeline for
/// every (power ratio, interferer offset) pair. Trial seeds depend only on the
/// master seed, the point's (ratio, offset) values and the trial index, so
/// results do not depend on the thread count and studies share random numbers.
SweepResult run_interference_sweep(const Scenario& scenario, const RisConfig& config);

/// One Monte-Carlo trial; returns the absolute range error and, optionally, the
/// differenced grid and the peak estimate.
double run_trial(const Scenario& scenario, const RisConfig& config, double power_ratio_db, double angle_offset_rad,
                 std::uint64_t trial_seed, ComplexGrid* grid_out = nullptr, TargetEstimate* estimate_out = nullptr);

CsvTable sweep_table(const SweepResult& result);
SweepResult sweep_from_table(const CsvTable& table);
void write_trial_records(const fs::path& path, const std::vector<TrialRecord>& records);
std::vector<TrialRecord> read_trial_records(const fs::path& path);

/// run_interference_sweep on combine_normalized(peak, C_n) plus file output.
SweepResult run_sweep_study(const Scenario& scenario, const RisConfig& peak, const fs::path& out_dir);

struct MultinotchEntry {
    double epsilon = 0.0;
    SuppressionMetrics metrics;
    SweepResult sweep;
    fs::path pattern_file, sweep_file;
};

struct MultinotchResult {
    std::vector<MultinotchEntry> entries; // in ascending epsilon
    fs::path summary_file;
};

MultinotchResult run_multinotch_study(const Scenario& scenario, const RisConfig& peak, const fs::path& out_dir,
                                      bool with_sweeps = true);

struct ReportCheck {
    std::string study;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ReportSummary {
    std::size_t studies = 0;
    std::vector<ReportCheck> checks;
    fs::path summary_file;
    bool all_pass() const;
};

/// Reads whatever study outputs exist in out_dir and writes summary.txt.
ReportSummary report(const fs::path& out_dir);

// Acceptance rules shared by report() and the test suites.
bool sweep_null_holds(const SweepResult& r, double max_ratio_db = 30.0);
bool sweep_monotone_in_power(const SweepResult& r, double offset_rad, double tolerance_m);
bool sweep_monotone_in_offset(const SweepResult& r, double power_ratio_db, double tolerance_m = 0.0);

} // namespace risradar

#endif
