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

// Plain-text file formats. Numbers are written in shortest round-trip form,
// so parsing an emitted file reproduces the in-memory doubles exactly.
//
//   pattern   : "angle_deg,power_db" header, one row per angle
//   config    : "# ris-config elements=L slots=S theta_t=.. seed=.." then
//               L*S lines "re,im" (slot 0 elements first)
//   matrix    : "# complex-matrix rows=R cols=C" then R*C lines "re,im",
//               row-major
//   csv table : optional "# ..." comment lines, a header row, numeric rows

#ifndef RISRADAR_TEXT_IO_HPP
#define RISRADAR_TEXT_IO_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "risradar/array.hpp"
#include "risradar/radar_sim.hpp"

namespace risradar {

std::string format_double(double value);
double parse_double(std::string_view text);
std::uint64_t parse_u64(std::string_view text);
std::string_view trim(std::string_view text);
std::vector<std::string_view> split(std::string_view text, char sep);

struct CsvTable {
    std::vector<std::string> comments; // without the leading "# "
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::size_t column_index(std::string_view name) const;
    std::vector<double> column(std::string_view name) const;
};

void write_csv(std::ostream& os, const CsvTable& table);
CsvTable read_csv(std::istream& is);
void write_csv_file(const std::filesystem::path& path, const CsvTable& table);
CsvTable read_csv_file(const std::filesystem::path& path);

/// Pattern table with angles given in radians (converted to degrees on write).
CsvTable pattern_table(std::span<const double> angles_rad, std::span<const double> power_db);

struct ConfigHeader {
    double theta_t = 0.0;
    std::uint64_t seed = 0;
};

void write_config(std::ostream& os, const RisConfig& config, const ConfigHeader& header);
RisConfig read_config(std::istream& is, ConfigHeader* header = nullptr);
void write_config_file(const std::filesystem::path& path, const RisConfig& config, const ConfigHeader& header);
RisConfig read_config_file(const std::filesystem::path& path, ConfigHeader* header = nullptr);

void write_matrix(std::ostream& os, const ComplexGrid& m);
ComplexGrid read_matrix(std::istream& is);
void write_matrix_file(const std::filesystem::path& path, const ComplexGrid& m);
ComplexGrid read_matrix_file(const std::filesystem::path& path);

} // namespace risradar

#endif
