// SPDX-License-Identifier: Apache-2.0
//
// canoma: outage analysis for cache-aided two-user NOMA downlinks
// Copyright (C) 2026 The canoma authors
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

#ifndef CANOMA_ROW_IO_HPP
#define CANOMA_ROW_IO_HPP

#include "canoma/sweep.hpp"

#include <nlohmann/json.hpp>

#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <string>
#include <vector>

namespace canoma {

/// A results file that does not follow the row schema.
class row_format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* csv_header = "scheme,a,snr_db,beta,rate_bps_hz,p_analytic,p_empirical,se,n_samples,seed";

namespace detail {

inline std::string csv_cell(const std::optional<double>& x) { return x ? format_float(*x) : std::string(); }
inline std::string csv_cell(const std::optional<std::uint64_t>& x) { return x ? std::to_string(*x) : std::string(); }

inline std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> cells;
    std::string::size_type start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(line.substr(start, comma - start));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return cells;
}

inline std::optional<double> parse_double_cell(const std::string& cell, const char* field)
{
    if (cell.empty())
        return std::nullopt;
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end != cell.c_str() + cell.size() || errno == ERANGE)
        throw row_format_error(std::string("bad number in field '") + field + "': '" + cell + "'");
    return v;
}

inline std::optional<std::uint64_t> parse_uint_cell(const std::string& cell, const char* field)
{
    if (cell.empty())
        return std::nullopt;
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(cell.c_str(), &end, 10);
    if (cell.front() == '-' || end != cell.c_str() + cell.size() || errno == ERANGE)
        throw row_format_error(std::string("bad integer in field '") + field + "': '" + cell + "'");
    return static_cast<std::uint64_t>(v);
}

inline double required(const std::optional<double>& x, const char* field)
{
    if (!x)
        throw row_format_error(std::string("missing value for '") + field + "'");
    return *x;
}

} // namespace detail

inline void write_csv(std::ostream& os, std::span<const SweepRow> rows)
{
    using detail::csv_cell;
    os << csv_header << '\n';
    for (const auto& r : rows) {
        os << r.scheme << ',' << csv_cell(r.a) << ',' << format_float(r.snr_db) << ',' << format_float(r.beta) << ','
           << format_float(r.rate_bps_hz) << ',' << csv_cell(r.p_analytic) << ',' << csv_cell(r.p_empirical) << ','
           << csv_cell(r.se) << ',' << csv_cell(r.n_samples) << ',' << csv_cell(r.seed) << '\n';
    }
}

inline std::vector<SweepRow> read_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line) || line != csv_header)
        throw row_format_error("missing or unexpected CSV header");
    std::vector<SweepRow> rows;
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty())
            continue;
        const auto cells = detail::split_csv_line(line);
        if (cells.size() != 10)
            throw row_format_error("line " + std::to_string(line_no) + ": expected 10 fields, got " +
                                   std::to_string(cells.size()));
        if (cells[0].empty())
            throw row_format_error("line " + std::to_string(line_no) + ": empty scheme");
        SweepRow r;
        r.scheme = cells[0];
        r.a = detail::parse_double_cell(cells[1], "a");
        r.snr_db = detail::required(detail::parse_double_cell(cells[2], "snr_db"), "snr_db");
        r.beta = detail::required(detail::parse_double_cell(cells[3], "beta"), "beta");
        r.rate_bps_hz = detail::required(detail::parse_double_cell(cells[4], "rate_bps_hz"), "rate_bps_hz");
        r.p_analytic = detail::parse_double_cell(cells[5], "p_analytic");
        r.p_empirical = detail::parse_double_cell(cells[6], "p_empirical");
        r.se = detail::parse_double_cell(cells[7], "se");
        r.n_samples = detail::parse_uint_cell(cells[8], "n_samples");
        r.seed = detail::parse_uint_cell(cells[9], "seed");
        rows.push_back(std::move(r));
    }
    return rows;
}

inline nlohmann::ordered_json config_to_json(const RunConfig& c)
{
    nlohmann::ordered_json j;
    j["experiment"] = std::string(to_string(c.experiment));
    j["snr_db"] = c.snr_db;
    j["beta"] = c.beta;
    j["rate"] = c.rate;
    j["a"] = c.a;
    j["scheme"] = std::string(to_string(c.scheme));
    j["samples"] = c.samples;
    j["seed"] = c.seed;
    j["streams"] = c.streams;
    j["grid_start"] = c.grid.start;
    j["grid_stop"] = c.grid.stop;
    j["grid_points"] = c.grid.points;
    j["format"] = std::string(to_string(c.format));
    return j;
}

namespace detail {

template <class T>
nlohmann::ordered_json json_opt(const std::optional<T>& x)
{
    return x ? nlohmann::ordered_json(*x) : nlohmann::ordered_json(nullptr);
}

template <class T>
std::optional<T> opt_from_json(const nlohmann::json& row, const char* key)
{
    if (!row.contains(key))
        throw row_format_error(std::string("row missing field '") + key + "'");
    const auto& v = row.at(key);
    if (v.is_null())
        return std::nullopt;
    if constexpr (std::is_same_v<T, double>) {
        if (!v.is_number())
            throw row_format_error(std::string("field '") + key + "' is not a number");
    } else {
        if (!v.is_number_unsigned())
            throw row_format_error(std::string("field '") + key + "' is not an unsigned integer");
    }
    return v.get<T>();
}

} // namespace detail

inline void write_json(std::ostream& os, std::span<const SweepRow> rows, const RunConfig& cfg)
{
    nlohmann::ordered_json doc;
    doc["tool_version"] = tool_version;
    doc["config"] = config_to_json(cfg);
    auto& out = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["scheme"] = r.scheme;
        j["a"] = detail::json_opt(r.a);
        j["snr_db"] = r.snr_db;
        j["beta"] = r.beta;
        j["rate_bps_hz"] = r.rate_bps_hz;
        j["p_analytic"] = detail::json_opt(r.p_analytic);
        j["p_empirical"] = detail::json_opt(r.p_empirical);
        j["se"] = detail::json_opt(r.se);
        j["n_samples"] = detail::json_opt(r.n_samples);
        j["seed"] = detail::json_opt(r.seed);
        out.push_back(std::move(j));
    }
    os << doc.dump(2) << '\n';
}

inline std::vector<SweepRow> read_json(std::istream& is)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(is);
    } catch (const nlohmann::json::parse_error& e) {
        throw row_format_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
        throw row_format_error("JSON document has no 'rows' array");
    std::vector<SweepRow> rows;
    for (const auto& j : doc["rows"]) {
        if (!j.is_object() || !j.contains("scheme") || !j["scheme"].is_string())
            throw row_format_error("row without a string 'scheme'");
        SweepRow r;
        r.scheme = j["scheme"].get<std::string>();
        r.a = detail::opt_from_json<double>(j, "a");
        r.snr_db = detail::required(detail::opt_from_json<double>(j, "snr_db"), "snr_db");
        r.beta = detail::required(detail::opt_from_json<double>(j, "beta"), "beta");
        r.rate_bps_hz = detail::required(detail::opt_from_json<double>(j, "rate_bps_hz"), "rate_bps_hz");
        r.p_analytic = detail::opt_from_json<double>(j, "p_analytic");
        r.p_empirical = detail::opt_from_json<double>(j, "p_empirical");
        r.se = detail::opt_from_json<double>(j, "se");
        r.n_samples = detail::opt_from_json<std::uint64_t>(j, "n_samples");
        r.seed = detail::opt_from_json<std::uint64_t>(j, "seed");
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace canoma

#endif // CANOMA_ROW_IO_HPP
