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

// Command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "risradar/risradar.h"

namespace {

// Exit codes
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNothingRun = 2;
constexpr int kExitChecksFailed = 3;

struct ScenarioDeleter {
    void operator()(ris_scenario* s) const { ris_scenario_free(s); }
};
struct ConfigDeleter {
    void operator()(ris_config* c) const { ris_config_free(c); }
};
using ScenarioPtr = std::unique_ptr<ris_scenario, ScenarioDeleter>;
using ConfigPtr = std::unique_ptr<ris_config, ConfigDeleter>;

struct Options {
    std::string scenario_file;
    std::uint64_t seed = 0;
    std::string out_dir;
    std::size_t grid = 0;
    bool carrier_only = false;
    bool all_subcarriers = false;
    std::size_t threads = 0;
    std::string peak_config;
    std::vector<std::string> overrides;
};

int report_failure(ris_status st, const char* what) {
    std::fprintf(stderr, "risradar: %s failed: %s: %s\n", what, ris_status_string(st), ris_last_error());
    return st == RIS_ERR_NOTHING_RUN ? kExitNothingRun : kExitError;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--scenario", o.scenario_file, "Scenario file (section.key = value)")->check(CLI::ExistingFile);
    cmd->add_option("--seed", o.seed, "Master seed (overrides run.seed)");
    cmd->add_option("--out", o.out_dir, "Output directory (overrides run.output_dir)");
    cmd->add_option("--grid", o.grid, "Angle grid points over [0, pi] (overrides run.grid_points)");
    auto* co = cmd->add_flag("--carrier-only", o.carrier_only, "Carrier approximation for patterns and simulation");
    auto* as = cmd->add_flag("--all-subcarriers", o.all_subcarriers, "Exact per-subcarrier wavelengths");
    co->excludes(as);
    cmd->add_option("--threads", o.threads, "Worker threads for sweeps (0: all cores)");
    cmd->add_option("--set", o.overrides, "Extra scenario assignment key=value (repeatable)");
}

// Builds the scenario handle from the file plus command-line overrides.
int build_scenario(const Options& o, CLI::App* cmd, ScenarioPtr& out) {
    ris_scenario* raw = nullptr;
    ris_status st = o.scenario_file.empty() ? ris_scenario_default(&raw) : ris_scenario_load(o.scenario_file.c_str(), &raw);
    if (st != RIS_OK)
        return report_failure(st, "loading scenario");
    out.reset(raw);

    auto set = [&](const std::string& key, const std::string& value) {
        const ris_status s = ris_scenario_set(out.get(), key.c_str(), value.c_str());
        return s == RIS_OK ? kExitOk : report_failure(s, ("setting " + key).c_str());
    };
    for (const auto& kv : o.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            std::fprintf(stderr, "risradar: --set expects key=value, got '%s'\n", kv.c_str());
            return kExitError;
        }
        if (int rc = set(kv.substr(0, eq), kv.substr(eq + 1)); rc != kExitOk)
            return rc;
    }
    if (cmd->count("--seed"))
        if (int rc = set("run.seed", std::to_string(o.seed)); rc != kExitOk)
            return rc;
    if (!o.out_dir.empty())
        if (int rc = set("run.output_dir", o.out_dir); rc != kExitOk)
            return rc;
    if (o.grid != 0)
        if (int rc = set("run.grid_points", std::to_string(o.grid)); rc != kExitOk)
            return rc;
    if (o.carrier_only)
        if (int rc = set("run.subcarrier_mode", "carrier-only"); rc != kExitOk)
            return rc;
    if (o.all_subcarriers)
        if (int rc = set("run.subcarrier_mode", "all-subcarriers"); rc != kExitOk)
            return rc;
    if (cmd->count("--threads"))
        if (int rc = set("run.threads", std::to_string(o.threads)); rc != kExitOk)
            return rc;

    st = ris_scenario_validate(out.get());
    if (st != RIS_OK)
        return report_failure(st, "validating scenario");
    return kExitOk;
}

std::string output_dir(const ris_scenario* s) {
    std::size_t needed = 0;
    ris_scenario_describe(s, nullptr, 0, &needed);
    std::string text(needed, '\0');
    ris_scenario_describe(s, text.data(), text.size(), &needed);
    const std::string key = "run.output_dir = ";
    const auto pos = text.find(key);
    if (pos == std::string::npos)
        return "out";
    const auto end = text.find('\n', pos);
    return text.substr(pos + key.size(), end - pos - key.size());
}

int load_peak(const Options& o, ConfigPtr& out) {
    if (o.peak_config.empty())
        return kExitOk;
    ris_config* raw = nullptr;
    const ris_status st = ris_config_load(o.peak_config.c_str(), &raw);
    if (st != RIS_OK)
        return report_failure(st, "loading peak configuration");
    out.reset(raw);
    return kExitOk;
}

int run_report(const std::string& dir) {
    int all_pass = 0;
    std::size_t studies = 0;
    const ris_status st = ris_report(dir.c_str(), &all_pass, &studies);
    if (st != RIS_OK)
        return report_failure(st, "report");
    std::printf("%zu studies summarized in %s/summary.txt: %s\n", studies, dir.c_str(),
                all_pass ? "all checks pass" : "some checks FAILED");
    return all_pass ? kExitOk : kExitChecksFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"RIS-assisted OFDM radar interference mitigation toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(ris_version()));

    Options o;
    auto* pattern = app.add_subcommand("pattern", "Peak, notch and combined beampattern study");
    auto* train = app.add_subcommand("train-peak", "Train the peak network and save its configuration");
    auto* sweep = app.add_subcommand("sweep", "Range-error sweep over interference power and angle offset");
    auto* multinotch = app.add_subcommand("multinotch", "Multi-notch spacing study");
    auto* rep = app.add_subcommand("report", "Summarize the outputs found in --out");
    for (auto* cmd : {pattern, train, sweep, multinotch})
        add_common(cmd, o);
    for (auto* cmd : {pattern, sweep, multinotch})
        cmd->add_option("--peak-config", o.peak_config, "Reuse a trained peak configuration instead of training")
            ->check(CLI::ExistingFile);
    std::string report_dir = "out";
    rep->add_option("--out", report_dir, "Directory holding study outputs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitError; // usage errors share the generic error code
    }

    if (rep->parsed())
        return run_report(report_dir);

    CLI::App* cmd = app.get_subcommands().front();
    ScenarioPtr scenario;
    if (int rc = build_scenario(o, cmd, scenario); rc != kExitOk)
        return rc;
    const std::string dir = output_dir(scenario.get());

    if (train->parsed()) {
        double gain = 0.0;
        const ris_status st = ris_run_train_peak(scenario.get(), dir.c_str(), &gain);
        if (st != RIS_OK)
            return report_failure(st, "train-peak");
        std::printf("trained peak configuration written to %s/peak_config.txt (gain ratio %.6f)\n", dir.c_str(), gain);
        return kExitOk;
    }

    ConfigPtr peak;
    if (int rc = load_peak(o, peak); rc != kExitOk)
        return rc;

    ris_status st = RIS_OK;
    const char* what = cmd->get_name().c_str();
    if (pattern->parsed())
        st = ris_run_pattern_study(scenario.get(), peak.get(), dir.c_str());
    else if (sweep->parsed())
        st = ris_run_sweep(scenario.get(), peak.get(), dir.c_str());
    else if (multinotch->parsed())
        st = ris_run_multinotch(scenario.get(), peak.get(), dir.c_str());
    if (st != RIS_OK)
        return report_failure(st, what);
    std::printf("%s: outputs written to %s\n", what, dir.c_str());
    return kExitOk;
}
