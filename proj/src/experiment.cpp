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

#include "risradar/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "risradar/error.hpp"
#include "risradar/seed.hpp"

namespace risradar {

namespace {

constexpr double kOffsetMatch = 1e-9;

void write_text(const fs::path& path, const std::string& text) {
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
    os << text;
}

void echo_scenario(const Scenario& scenario, const fs::path& out_dir) {
    write_text(out_dir / "scenario_echo.txt", scenario.to_text());
}

ArrayGeometry geometry_for(const Scenario& s, const RisConfig& c) {
    return ArrayGeometry{c.num_elements(), s.element_spacing, {}};
}

std::vector<double> pattern_db(const Scenario& s, const RisConfig& c, const std::vector<double>& grid) {
    return normalize_pattern_db(power_pattern(geometry_for(s, c), c, s.ofdm, grid, s.mode));
}

std::size_t worker_count(const Scenario& s, std::size_t jobs) {
    std::size_t n = s.threads;
    if (n == 0)
        n = std::max(1U, std::thread::hardware_concurrency());
    return std::max<std::size_t>(1, std::min(n, jobs));
}

// Runs job(i) for i in [0, count) over a small worker pool; rethrows the first
// failure after all workers stop.
template <typename Job>
void parallel_for(std::size_t count, std::size_t workers, Job job) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                job(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    if (workers <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(body);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
}

std::uint64_t trial_seed(std::uint64_t master, double ratio_db, double offset, std::size_t trial) {
    return derive_seed(master, {std::bit_cast<std::uint64_t>(ratio_db), std::bit_cast<std::uint64_t>(offset),
                                static_cast<std::uint64_t>(trial)});
}

std::string eps_tag(double eps) { return format_double(eps); }

double comment_value(const CsvTable& t, std::string_view key, double fallback) {
    const std::string prefix = std::string(key) + "=";
    for (const auto& c : t.comments)
        if (c.rfind(prefix, 0) == 0)
            return parse_double(std::string_view(c).substr(prefix.size()));
    return fallback;
}

} // namespace

TrainingResult run_train_peak(const Scenario& scenario, const fs::path& out_dir) {
    scenario.validate();
    TrainingResult result = train_peak_network(scenario.target_angle, scenario.peak_elements, scenario.network);
    write_config_file(out_dir / "peak_config.txt", result.config,
                      ConfigHeader{scenario.target_angle, scenario.network.init_seed});
    CsvTable loss;
    loss.comments = {"gain_ratio=" + format_double(result.gain_ratio),
                     "best_iteration=" + std::to_string(result.best_iteration)};
    loss.columns = {"iteration", "loss"};
    for (std::size_t i = 0; i < result.loss_history.size(); ++i)
        loss.rows.push_back({static_cast<double>(i), result.loss_history[i]});
    write_csv_file(out_dir / "training_loss.csv", loss);
    echo_scenario(scenario, out_dir);
    return result;
}

RisConfig obtain_peak_config(const Scenario& scenario, const fs::path& peak_config_path) {
    if (!peak_config_path.empty())
        return read_config_file(peak_config_path);
    try {
        return train_peak_network(scenario.target_angle, scenario.peak_elements, scenario.network).config;
    } catch (const TrainingError& e) {
        throw TrainingError(e.iteration(), std::string("peak configuration for the scenario: ") + e.what());
    }
}

std::vector<double> pattern_nulls(const RisConfig& config, std::size_t grid_points, double depth_db) {
    const auto col = config.column_vector(0);
    const auto grid = angle_grid(grid_points);
    std::vector<double> p(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k)
        p[k] = std::norm(carrier_pattern(col, grid[k]));
    const double peak = carrier_pattern_peak_power(col);
    const double limit = peak * std::pow(10.0, depth_db / 10.0);

    auto f = [&](double t) { return std::norm(carrier_pattern(col, t)); };
    std::vector<double> nulls;
    for (std::size_t k = 1; k + 1 < grid.size(); ++k) {
        if (!(p[k] <= p[k - 1] && p[k] < p[k + 1]))
            continue;
        double lo = grid[k - 1], hi = grid[k + 1];
        const double g = 0.5 * (std::sqrt(5.0) - 1.0);
        double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
        double f1 = f(x1), f2 = f(x2);
        for (int it = 0; it < 100; ++it) {
            if (f1 > f2) {
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
        double best = f1 < f2 ? x1 : x2;
        double best_p = std::min(f1, f2);
        if (p[k] < best_p) {
            best = grid[k];
            best_p = p[k];
        }
        if (best_p <= limit && best > 0.0 && best < kPi)
            nulls.push_back(best);
    }
    return nulls;
}

PatternStudyResult run_pattern_study(const Scenario& scenario, const RisConfig& peak, const fs::path& out_dir) {
    scenario.validate();
    if (peak.num_elements() != scenario.peak_elements)
        throw Error(ErrorCode::Shape, "pattern study: peak configuration has " + std::to_string(peak.num_elements()) +
                                          " elements, scenario expects " + std::to_string(scenario.peak_elements));
    const NotchSpec notch_spec{scenario.interferer_angle, scenario.notch_count, scenario.notch_spacing};
    const RisConfig notch = multi_notch(notch_spec);
    const RisConfig combined = combine_normalized(peak, notch);
    const auto grid = angle_grid(scenario.grid_points);

    PatternStudyResult r;
    r.peak_file = out_dir / "pattern_peak.csv";
    r.notch_file = out_dir / "pattern_notch.csv";
    r.combined_file = out_dir / "pattern_combined.csv";
    r.metrics_file = out_dir / "pattern_metrics.csv";
    write_csv_file(r.peak_file, pattern_table(grid, pattern_db(scenario, peak, grid)));
    write_csv_file(r.notch_file, pattern_table(grid, pattern_db(scenario, notch, grid)));

    const auto geom = geometry_for(scenario, combined);
    const auto combined_power = power_pattern(geom, combined, scenario.ofdm, grid, scenario.mode);
    write_csv_file(r.combined_file, pattern_table(grid, normalize_pattern_db(combined_power)));

    const auto argmax = static_cast<std::size_t>(
        std::distance(combined_power.begin(), std::max_element(combined_power.begin(), combined_power.end())));
    r.combined_argmax_deg = rad_to_deg(grid[argmax]);
    const double at_interferer[1] = {scenario.interferer_angle};
    const double p_i = power_pattern(geom, combined, scenario.ofdm, at_interferer, scenario.mode)[0];
    const double p_max = combined_power[argmax];
    r.combined_db_at_interferer = p_i > 0.0 ? std::max(kDefaultDbFloor, 10.0 * std::log10(p_i / p_max)) : kDefaultDbFloor;
    r.notch_null_count = pattern_nulls(notch, scenario.grid_points).size();
    r.peak_gain_ratio = peak_gain_ratio(peak, scenario.target_angle);

    const std::size_t expected_nulls = scenario.notch_spacing > 0.0 ? scenario.notch_count : 1;
    CsvTable metrics;
    metrics.comments = {"combined = peak * notch (convolution), renormalized to unit max coefficient"};
    metrics.columns = {"target_angle_deg",          "interferer_angle_deg", "peak_gain_ratio", "combined_argmax_deg",
                       "combined_db_at_interferer", "notch_null_count",     "expected_null_count"};
    metrics.rows.push_back({rad_to_deg(scenario.target_angle), rad_to_deg(scenario.interferer_angle),
                            r.peak_gain_ratio, r.combined_argmax_deg, r.combined_db_at_interferer,
                            static_cast<double>(r.notch_null_count), static_cast<double>(expected_nulls)});
    write_csv_file(r.metrics_file, metrics);
    echo_scenario(scenario, out_dir);
    return r;
}

double run_trial(const Scenario& s, const RisConfig& config, double power_ratio_db, double angle_offset_rad,
                 std::uint64_t seed, ComplexGrid* grid_out, TargetEstimate* estimate_out) {
    SimulationInput in;
    in.params = s.ofdm;
    in.geometry = geometry_for(s, config);
    in.config = config;
    in.mode = s.mode;
    in.target.range_m = s.target_range_m;
    in.target.velocity_mps = s.target_velocity_mps;
    in.target.angle_rad = s.target_angle;
    in.target.amplitude = cd{s.target_amplitude, 0.0};
    in.symbols = generate_symbols(s.ofdm, derive_seed(seed, {1}));

    SplitMix64 phase_rng(derive_seed(seed, {5}));
    InterferenceParams itf;
    itf.delay_s = s.interference_delay_s;
    itf.doppler_scale = s.interference_doppler_scale;
    itf.angle_rad = s.interferer_angle + angle_offset_rad;
    itf.amplitude = std::polar(s.target_amplitude * std::pow(10.0, power_ratio_db / 20.0),
                               2.0 * kPi * phase_rng.uniform());
    itf.symbol_seed = derive_seed(seed, {2});
    in.interference = itf;
    in.noise = NoiseParams{s.noise_variance, derive_seed(seed, {3})};

    const Eigen::Index N = static_cast<Eigen::Index>(s.ofdm.num_subcarriers);
    const Eigen::Index M = static_cast<Eigen::Index>(s.ofdm.num_symbols);
    ComplexGrid static_term(N, M);
    SplitMix64 static_rng(derive_seed(seed, {4}));
    const double sd = s.static_amplitude * std::sqrt(0.5);
    for (Eigen::Index m = 0; m < M; ++m)
        for (Eigen::Index n = 0; n < N; ++n) {
            const double re = static_rng.normal();
            const double im = static_rng.normal();
            static_term(n, m) = cd{sd * re, sd * im};
        }

    const ComplexGrid y = simulate_frame_pair(in, static_term);
    const TargetEstimate est = estimate_target(rv_map(y, s.ofdm, s.pad_range, s.pad_velocity));
    if (grid_out)
        *grid_out = y;
    if (estimate_out)
        *estimate_out = est;
    return range_error(s.target_range_m, est.range_m);
}

SweepResult run_interference_sweep(const Scenario& scenario, const RisConfig& config) {
    scenario.validate();
    auto ratios = scenario.power_ratios_db;
    auto offsets = scenario.angle_offsets_rad;
    std::sort(ratios.begin(), ratios.end());
    std::sort(offsets.begin(), offsets.end());

    SweepResult result;
    result.range_bin_m = scenario.ofdm.range_bin_size();
    for (double r : ratios)
        for (double d : offsets)
            result.rows.push_back(SweepRow{r, d, 0.0, 0.0, scenario.trials});
    result.trials.resize(result.rows.size() * scenario.trials);

    parallel_for(result.rows.size(), worker_count(scenario, result.rows.size()), [&](std::size_t i) {
        SweepRow& row = result.rows[i];
        double sum = 0.0;
        std::vector<double> errs(scenario.trials);
        for (std::size_t t = 0; t < scenario.trials; ++t) {
            const std::uint64_t seed = trial_seed(scenario.seed, row.power_ratio_db, row.angle_offset_rad, t);
            errs[t] = run_trial(scenario, config, row.power_ratio_db, row.angle_offset_rad, seed);
            sum += errs[t];
            result.trials[i * scenario.trials + t] =
                TrialRecord{seed, row.power_ratio_db, scenario.interferer_angle + row.angle_offset_rad, errs[t]};
        }
        row.mean_range_error_m = sum / static_cast<double>(scenario.trials);
        double ss = 0.0;
        for (double e : errs)
            ss += (e - row.mean_range_error_m) * (e - row.mean_range_error_m);
        row.std_range_error_m = scenario.trials > 1 ? std::sqrt(ss / static_cast<double>(scenario.trials - 1)) : 0.0;
    });
    return result;
}

CsvTable sweep_table(const SweepResult& result) {
    CsvTable t;
    t.comments = {"statistic=mean and sample standard deviation of |R - R_hat| over independent trials",
                  "range_bin_m=" + format_double(result.range_bin_m)};
    t.columns = {"power_ratio_db", "angle_offset_rad", "mean_range_error_m", "std_range_error_m", "trials"};
    for (const auto& r : result.rows)
        t.rows.push_back({r.power_ratio_db, r.angle_offset_rad, r.mean_range_error_m, r.std_range_error_m,
                          static_cast<double>(r.trials)});
    return t;
}

SweepResult sweep_from_table(const CsvTable& t) {
    SweepResult r;
    r.range_bin_m = comment_value(t, "range_bin_m", 0.0);
    const auto pr = t.column_index("power_ratio_db"), off = t.column_index("angle_offset_rad"),
               mean = t.column_index("mean_range_error_m"), sd = t.column_index("std_range_error_m"),
               n = t.column_index("trials");
    for (const auto& row : t.rows)
        r.rows.push_back(SweepRow{row[pr], row[off], row[mean], row[sd], static_cast<std::size_t>(row[n])});
    return r;
}

void write_trial_records(const fs::path& path, const std::vector<TrialRecord>& records) {
    std::string text = "seed,power_ratio_db,angle_rad,range_err_m\n";
    for (const auto& r : records)
        text += std::to_string(r.seed) + "," + format_double(r.power_ratio_db) + "," + format_double(r.angle_rad) +
                "," + format_double(r.range_err_m) + "\n";
    write_text(path, text);
}

std::vector<TrialRecord> read_trial_records(const fs::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw Error(ErrorCode::Io, "cannot open " + path.string());
    std::string line;
    if (!std::getline(is, line) || line != "seed,power_ratio_db,angle_rad,range_err_m")
        throw Error(ErrorCode::Parse, "trial record file has an unexpected header");
    std::vector<TrialRecord> out;
    while (std::getline(is, line)) {
        if (trim(line).empty())
            continue;
        const auto f = split(line, ',');
        if (f.size() != 4)
            throw Error(ErrorCode::Parse, "trial record needs 4 fields: '" + line + "'");
        out.push_back(TrialRecord{parse_u64(f[0]), parse_double(f[1]), parse_double(f[2]), parse_double(f[3])});
    }
    return out;
}

SweepResult run_sweep_study(const Scenario& scenario, const RisConfig& peak, const fs::path& out_dir) {
    const NotchSpec notch_spec{scenario.interferer_angle, scenario.notch_count, scenario.notch_spacing};
    const RisConfig combined = combine_normalized(peak, multi_notch(notch_spec));
    SweepResult result = run_interference_sweep(scenario, combined);
    write_csv_file(out_dir / "sweep.csv", sweep_table(result));
    write_trial_records(out_dir / "sweep_trials.csv", result.trials);

    // one representative trial: strongest interference, offset nearest the null
    const auto& rows = result.rows;
    std::size_t pick = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const bool stronger = rows[i].power_ratio_db > rows[pick].power_ratio_db;
        const bool same = rows[i].power_ratio_db == rows[pick].power_ratio_db;
        if (stronger || (same && std::abs(rows[i].angle_offset_rad) < std::abs(rows[pick].angle_offset_rad)))
            pick = i;
    }
    ComplexGrid grid;
    run_trial(scenario, combined, rows[pick].power_ratio_db, rows[pick].angle_offset_rad,
              trial_seed(scenario.seed, rows[pick].power_ratio_db, rows[pick].angle_offset_rad, 0), &grid);
    write_matrix_file(out_dir / "sample_grid.txt", grid);
    write_matrix_file(out_dir / "sample_rvmap.txt", rv_map(grid, scenario.ofdm).values);
    echo_scenario(scenario, out_dir);
    return result;
}

MultinotchResult run_multinotch_study(const Scenario& scenario, const RisConfig& peak, const fs::path& out_dir,
                                      bool with_sweeps) {
    scenario.validate();
    auto eps = scenario.epsilons;
    std::sort(eps.begin(), eps.end());
    const auto grid = angle_grid(scenario.grid_points);

    MultinotchResult result;
    CsvTable summary;
    summary.comments = {"threshold_db=" + format_double(scenario.suppression_threshold_db),
                        "bandwidth: contiguous span around the interferer angle below threshold (carrier pattern)",
                        "in-band: angles spanned by the notch grid; suppression = -normalized dB"};
    summary.columns = {"epsilon_rad",    "notch_count",    "suppression_bandwidth_rad", "lower_edge_rad",
                       "upper_edge_rad", "min_inband_suppression_db", "depth_at_center_db"};
    for (double e : eps) {
        MultinotchEntry entry;
        entry.epsilon = e;
        const NotchSpec spec{scenario.interferer_angle, scenario.multi_notch_count, e};
        const RisConfig notch = multi_notch(spec);
        entry.metrics = suppression_metrics(notch, spec, scenario.suppression_threshold_db);
        entry.pattern_file = out_dir / ("multinotch_pattern_eps_" + eps_tag(e) + ".csv");
        write_csv_file(entry.pattern_file, pattern_table(grid, pattern_db(scenario, notch, grid)));
        if (with_sweeps) {
            entry.sweep = run_interference_sweep(scenario, combine_normalized(peak, notch));
            entry.sweep_file = out_dir / ("multinotch_sweep_eps_" + eps_tag(e) + ".csv");
            write_csv_file(entry.sweep_file, sweep_table(entry.sweep));
        }
        const auto& m = entry.metrics;
        summary.rows.push_back({e, static_cast<double>(scenario.multi_notch_count), m.bandwidth_rad, m.lower_edge_rad,
                                m.upper_edge_rad, m.min_inband_suppression_db, m.depth_at_center_db});
        result.entries.push_back(std::move(entry));
    }
    result.summary_file = out_dir / "multinotch_summary.csv";
    write_csv_file(result.summary_file, summary);
    echo_scenario(scenario, out_dir);
    return result;
}

bool sweep_null_holds(const SweepResult& r, double max_ratio_db) {
    for (const auto& row : r.rows)
        if (std::abs(row.angle_offset_rad) < kOffsetMatch && row.power_ratio_db <= max_ratio_db &&
            row.mean_range_error_m > r.range_bin_m)
            return false;
    return true;
}

bool sweep_monotone_in_power(const SweepResult& r, double offset_rad, double tolerance_m) {
    std::vector<SweepRow> sel;
    for (const auto& row : r.rows)
        if (std::abs(row.angle_offset_rad - offset_rad) < kOffsetMatch)
            sel.push_back(row);
    std::sort(sel.begin(), sel.end(),
              [](const SweepRow& a, const SweepRow& b) { return a.power_ratio_db < b.power_ratio_db; });
    for (std::size_t i = 1; i < sel.size(); ++i)
        if (sel[i].mean_range_error_m < sel[i - 1].mean_range_error_m - tolerance_m)
            return false;
    return true;
}

bool sweep_monotone_in_offset(const SweepResult& r, double power_ratio_db, double tolerance_m) {
    for (double side : {-1.0, 1.0}) {
        std::vector<SweepRow> sel;
        for (const auto& row : r.rows)
            if (row.power_ratio_db == power_ratio_db && row.angle_offset_rad * side >= 0.0)
                sel.push_back(row);
        std::sort(sel.begin(), sel.end(), [](const SweepRow& a, const SweepRow& b) {
            return std::abs(a.angle_offset_rad) < std::abs(b.angle_offset_rad);
        });
        for (std::size_t i = 1; i < sel.size(); ++i)
            if (sel[i].mean_range_error_m < sel[i - 1].mean_range_error_m - tolerance_m)
                return false;
    }
    return true;
}

bool ReportSummary::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.pass; });
}

ReportSummary report(const fs::path& out_dir) {
    ReportSummary s;
    std::ostringstream text;
    text << "risradar summary\n================\n\n";

    const fs::path echo = out_dir / "scenario_echo.txt";
    if (fs::exists(echo)) {
        std::ifstream is(echo, std::ios::binary);
        text << "Parameters\n----------\n" << is.rdbuf() << "\n";
    }

    auto check = [&](const std::string& study, const std::string& name, bool pass, const std::string& detail) {
        s.checks.push_back(ReportCheck{study, name, pass, detail});
    };

    const fs::path metrics_path = out_dir / "pattern_metrics.csv";
    if (fs::exists(metrics_path)) {
        ++s.studies;
        const CsvTable t = read_csv_file(metrics_path);
        if (t.rows.empty())
            throw Error(ErrorCode::Parse, "pattern_metrics.csv has no rows");
        const auto& row = t.rows.front();
        const double target = row[t.column_index("target_angle_deg")];
        const double argmax = row[t.column_index("combined_argmax_deg")];
        const double at_i = row[t.column_index("combined_db_at_interferer")];
        const double gain = row[t.column_index("peak_gain_ratio")];
        const double nulls = row[t.column_index("notch_null_count")];
        const double expected = row[t.column_index("expected_null_count")];
        text << "Pattern study\n-------------\n";
        for (const char* f : {"pattern_peak.csv", "pattern_notch.csv", "pattern_combined.csv"})
            text << "  file: " << (out_dir / f).string() << "\n";
        text << "  peak gain ratio: " << format_double(gain) << "\n"
             << "  combined argmax: " << format_double(argmax) << " deg (target " << format_double(target) << ")\n"
             << "  combined at interferer: " << format_double(at_i) << " dB\n"
             << "  notch nulls: " << nulls << "\n\n";
        check("pattern", "peak gain ratio >= 0.9", gain >= 0.9, format_double(gain));
        check("pattern", "combined argmax within 0.25 deg of target", std::abs(argmax - target) <= 0.25 + 1e-9,
              format_double(argmax) + " deg");
        check("pattern", "combined pattern at interferer <= -60 dB", at_i <= -60.0, format_double(at_i) + " dB");
        check("pattern", "notch null count", nulls == expected, format_double(nulls));
    }

    const fs::path sweep_path = out_dir / "sweep.csv";
    if (fs::exists(sweep_path)) {
        ++s.studies;
        const SweepResult r = sweep_from_table(read_csv_file(sweep_path));
        text << "Interference sweep\n------------------\n  file: " << sweep_path.string() << "\n  rows: "
             << r.rows.size() << "\n\n";
        check("sweep", "null offset: mean error <= one range bin up to +30 dB", sweep_null_holds(r, 30.0), "");
        check("sweep", "offset 0.01 rad: error non-decreasing in power (one-bin tolerance)",
              sweep_monotone_in_power(r, 0.01, r.range_bin_m), "");
        check("sweep", "+30 dB: error non-decreasing in |offset|", sweep_monotone_in_offset(r, 30.0, 0.0), "");
    }

    const fs::path mn_path = out_dir / "multinotch_summary.csv";
    if (fs::exists(mn_path)) {
        ++s.studies;
        const CsvTable t = read_csv_file(mn_path);
        const auto eps = t.column("epsilon_rad");
        const auto bw = t.column("suppression_bandwidth_rad");
        const auto sup = t.column("min_inband_suppression_db");
        text << "Multi-notch study\n-----------------\n  file: " << mn_path.string() << "\n";
        bool bw_ok = true, sup_ok = true;
        for (std::size_t i = 0; i < eps.size(); ++i) {
            text << "  eps=" << format_double(eps[i]) << " bandwidth=" << format_double(bw[i])
                 << " rad min_inband_suppression=" << format_double(sup[i]) << " dB\n";
            if (i > 0) {
                bw_ok = bw_ok && bw[i] > bw[i - 1];
                sup_ok = sup_ok && sup[i] < sup[i - 1];
            }
        }
        text << "\n";
        check("multinotch", "suppression bandwidth increases with epsilon", bw_ok, "");
        check("multinotch", "minimum in-band suppression decreases with epsilon", sup_ok, "");
    }

    text << "Checks\n------\n";
    if (s.studies == 0)
        text << "  no study outputs found (nothing run)\n";
    for (const auto& c : s.checks)
        text << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.study << ": " << c.name
             << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    text << "\nstudies: " << s.studies << "\n";

    s.summary_file = out_dir / "summary.txt";
    write_text(s.summary_file, text.str());
    return s;
}

} // namespace risradar
