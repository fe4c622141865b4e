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

#include "risradar/text_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <system_error>

#include "risradar/error.hpp"

namespace risradar {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
    return os;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw Error(ErrorCode::Io, "cannot open " + path.string());
    return is;
}

// "# tag k=v k=v" -> map; throws if the tag differs.
std::map<std::string, std::string, std::less<>> parse_header(const std::string& line, std::string_view tag) {
    auto fields = split(trim(line), ' ');
    if (fields.size() < 2 || fields[0] != "#" || fields[1] != tag)
        throw Error(ErrorCode::Parse, "expected '# " + std::string(tag) + "' header, got '" + line + "'");
    std::map<std::string, std::string, std::less<>> kv;
    for (std::size_t i = 2; i < fields.size(); ++i) {
        if (fields[i].empty())
            continue;
        const auto eq = fields[i].find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorCode::Parse, "malformed header field '" + std::string(fields[i]) + "'");
        kv.emplace(std::string(fields[i].substr(0, eq)), std::string(fields[i].substr(eq + 1)));
    }
    return kv;
}

const std::string& header_value(const std::map<std::string, std::string, std::less<>>& kv, std::string_view key) {
    const auto it = kv.find(key);
    if (it == kv.end())
        throw Error(ErrorCode::Parse, "header is missing '" + std::string(key) + "'");
    return it->second;
}

cd parse_complex(std::string_view line) {
    const auto parts = split(trim(line), ',');
    if (parts.size() != 2)
        throw Error(ErrorCode::Parse, "expected 're,im', got '" + std::string(line) + "'");
    return {parse_double(parts[0]), parse_double(parts[1])};
}

std::string format_complex(cd v) { return format_double(v.real()) + "," + format_double(v.imag()); }

std::string next_line(std::istream& is, const char* what) {
    std::string line;
    if (!std::getline(is, line))
        throw Error(ErrorCode::Parse, std::string("unexpected end of input reading ") + what);
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    return line;
}

} // namespace

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
    text = trim(text);
    if (text == "inf" || text == "-inf" || text == "nan")
        throw Error(ErrorCode::Parse, "non-finite number '" + std::string(text) + "'");
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw Error(ErrorCode::Parse, "not a number: '" + std::string(text) + "'");
    return v;
}

std::uint64_t parse_u64(std::string_view text) {
    text = trim(text);
    std::uint64_t v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw Error(ErrorCode::Parse, "not a non-negative integer: '" + std::string(text) + "'");
    return v;
}

std::string_view trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = text.find_last_not_of(" \t\r\n");
    return text.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(sep, start);
        out.push_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

std::size_t CsvTable::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name)
            return i;
    throw Error(ErrorCode::Parse, "table has no column '" + std::string(name) + "'");
}

std::vector<double> CsvTable::column(std::string_view name) const {
    const std::size_t idx = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows)
        out.push_back(r[idx]);
    return out;
}

void write_csv(std::ostream& os, const CsvTable& table) {
    for (const auto& c : table.comments)
        os << "# " << c << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << (i ? "," : "") << table.columns[i];
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << format_double(row[i]);
        os << '\n';
    }
}

CsvTable read_csv(std::istream& is) {
    CsvTable t;
    std::string line;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (trim(line).empty())
            continue;
        if (line.rfind("# ", 0) == 0 || line == "#") {
            t.comments.push_back(line.size() > 2 ? line.substr(2) : std::string());
            continue;
        }
        const auto fields = split(line, ',');
        if (!have_header) {
            for (auto f : fields)
                t.columns.emplace_back(f);
            have_header = true;
            continue;
        }
        if (fields.size() != t.columns.size())
            throw Error(ErrorCode::Parse, "row has " + std::to_string(fields.size()) + " fields, header has " +
                                              std::to_string(t.columns.size()));
        std::vector<double> row;
        row.reserve(fields.size());
        for (auto f : fields)
            row.push_back(parse_double(f));
        t.rows.push_back(std::move(row));
    }
    if (!have_header)
        throw Error(ErrorCode::Parse, "table has no header row");
    return t;
}

void write_csv_file(const std::filesystem::path& path, const CsvTable& table) {
    auto os = open_out(path);
    write_csv(os, table);
    if (!os)
        throw Error(ErrorCode::Io, "write failed: " + path.string());
}

CsvTable read_csv_file(const std::filesystem::path& path) {
    auto is = open_in(path);
    return read_csv(is);
}

CsvTable pattern_table(std::span<const double> angles_rad, std::span<const double> power_db) {
    if (angles_rad.size() != power_db.size())
        throw Error(ErrorCode::Shape, "pattern_table: angle and power lengths differ");
    CsvTable t;
    t.columns = {"angle_deg", "power_db"};
    t.rows.reserve(angles_rad.size());
    for (std::size_t i = 0; i < angles_rad.size(); ++i)
        t.rows.push_back({rad_to_deg(angles_rad[i]), power_db[i]});
    return t;
}

void write_config(std::ostream& os, const RisConfig& config, const ConfigHeader& header) {
    os << "# ris-config elements=" << config.num_elements() << " slots=" << config.num_slots()
       << " theta_t=" << format_double(header.theta_t) << " seed=" << header.seed << '\n';
    for (std::size_t m = 0; m < config.num_slots(); ++m)
        for (std::size_t l = 0; l < config.num_elements(); ++l)
            os << format_complex(config.coefficients()(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(m)))
               << '\n';
}

RisConfig read_config(std::istream& is, ConfigHeader* header) {
    const auto kv = parse_header(next_line(is, "config header"), "ris-config");
    const auto elements = parse_u64(header_value(kv, "elements"));
    const auto slots = parse_u64(header_value(kv, "slots"));
    if (elements == 0 || slots == 0)
        throw Error(ErrorCode::Parse, "config header declares an empty configuration");
    if (header) {
        header->theta_t = parse_double(header_value(kv, "theta_t"));
        header->seed = parse_u64(header_value(kv, "seed"));
    }
    Eigen::MatrixXcd c(static_cast<Eigen::Index>(elements), static_cast<Eigen::Index>(slots));
    for (std::uint64_t m = 0; m < slots; ++m)
        for (std::uint64_t l = 0; l < elements; ++l)
            c(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(m)) =
                parse_complex(next_line(is, "config coefficient"));
    return RisConfig(std::move(c));
}

void write_config_file(const std::filesystem::path& path, const RisConfig& config, const ConfigHeader& header) {
    auto os = open_out(path);
    write_config(os, config, header);
}

RisConfig read_config_file(const std::filesystem::path& path, ConfigHeader* header) {
    auto is = open_in(path);
    return read_config(is, header);
}

void write_matrix(std::ostream& os, const ComplexGrid& m) {
    os << "# complex-matrix rows=" << m.rows() << " cols=" << m.cols() << '\n';
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            os << format_complex(m(r, c)) << '\n';
}

ComplexGrid read_matrix(std::istream& is) {
    const auto kv = parse_header(next_line(is, "matrix header"), "complex-matrix");
    const auto rows = parse_u64(header_value(kv, "rows"));
    const auto cols = parse_u64(header_value(kv, "cols"));
    ComplexGrid m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            m(r, c) = parse_complex(next_line(is, "matrix entry"));
    return m;
}

void write_matrix_file(const std::filesystem::path& path, const ComplexGrid& m) {
    auto os = open_out(path);
    write_matrix(os, m);
}

ComplexGrid read_matrix_file(const std::filesystem::path& path) {
    auto is = open_in(path);
    return read_matrix(is);
}

} // namespace risradar
