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

#include "canoma/row_io.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

namespace canoma {
namespace {

SweepRow random_row(std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(0.5);
    const auto maybe = [&](double v) { return coin(rng) ? std::optional<double>(round_sig9(v)) : std::nullopt; };
    SweepRow r;
    const char* names[] = {"CA_NOMA", "NOMA", "OMA", "CA_NOMA:A21", "CA_NOMA:numeric"};
    r.scheme = names[rng() % 5];
    r.a = maybe(testing::uniform(rng, 1e-6, 1.0));
    r.snr_db = round_sig9(testing::uniform(rng, -10.0, 60.0));
    r.beta = round_sig9(testing::log_uniform(rng, 0.1, 10.0));
    r.rate_bps_hz = round_sig9(testing::uniform(rng, 0.5, 6.0));
    r.p_analytic = round_sig9(testing::log_uniform(rng, 1e-12, 1.0));
    r.p_empirical = maybe(testing::uniform(rng, 0.0, 1.0));
    r.se = maybe(testing::log_uniform(rng, 1e-8, 1e-2));
    if (coin(rng)) {
        r.n_samples = rng() % 10'000'000;
        r.seed = rng();
    }
    return r;
}

TEST(Csv, HeaderAndBlankCells)
{
    SweepRow r{"OMA", std::nullopt, 20.0, 2.0, 2.0, 0.13929202357494219, std::nullopt, std::nullopt, std::nullopt,
               std::nullopt};
    std::ostringstream os;
    write_csv(os, std::span<const SweepRow>(&r, 1));
    EXPECT_EQ(os.str(), "scheme,a,snr_db,beta,rate_bps_hz,p_analytic,p_empirical,se,n_samples,seed\n"
                        "OMA,,20,2,2,0.139292024,,,,\n");
}

TEST(Csv, RoundTripIsExact)
{
    std::mt19937_64 rng(61);
    std::vector<SweepRow> rows;
    for (int i = 0; i < 300; ++i)
        rows.push_back(random_row(rng));
    std::stringstream ss;
    write_csv(ss, rows);
    const std::string first = ss.str();
    const auto parsed = read_csv(ss);
    EXPECT_EQ(parsed, rows);
    std::ostringstream again;
    write_csv(again, parsed);
    EXPECT_EQ(again.str(), first);
}

TEST(Csv, RejectsMalformedInput)
{
    std::istringstream no_header("scheme,a\nCA_NOMA,0.2\n");
    EXPECT_THROW(read_csv(no_header), row_format_error);
    const std::string header = std::string(csv_header) + "\n";
    std::istringstream short_row(header + "CA_NOMA,0.2,20,2,2\n");
    EXPECT_THROW(read_csv(short_row), row_format_error);
    std::istringstream bad_number(header + "CA_NOMA,0.2x,20,2,2,0.1,,,,\n");
    EXPECT_THROW(read_csv(bad_number), row_format_error);
    std::istringstream missing_snr(header + "CA_NOMA,0.2,,2,2,0.1,,,,\n");
    EXPECT_THROW(read_csv(missing_snr), row_format_error);
    std::istringstream negative_seed(header + "CA_NOMA,0.2,20,2,2,0.1,,,,-4\n");
    EXPECT_THROW(read_csv(negative_seed), row_format_error);
}

TEST(Json, DocumentShapeAndRoundTrip)
{
    std::mt19937_64 rng(62);
    std::vector<SweepRow> rows;
    for (int i = 0; i < 200; ++i)
        rows.push_back(random_row(rng));
    const auto cfg = RunConfig::defaults(Experiment::sweep_a);
    std::stringstream ss;
    write_json(ss, rows, cfg);
    const auto doc = nlohmann::json::parse(ss.str());
    EXPECT_EQ(doc["tool_version"], tool_version);
    EXPECT_EQ(doc["config"]["experiment"], "sweep-a");
    EXPECT_EQ(doc["config"]["grid_points"], 100);
    ASSERT_EQ(doc["rows"].size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        EXPECT_EQ(doc["rows"][i]["a"].is_null(), !rows[i].a.has_value());
    EXPECT_EQ(read_json(ss), rows);
}

TEST(Json, RejectsMalformedInput)
{
    std::istringstream not_json("{rows: ");
    EXPECT_THROW(read_json(not_json), row_format_error);
    std::istringstream no_rows(R"({"tool_version": "x"})");
    EXPECT_THROW(read_json(no_rows), row_format_error);
    std::istringstream missing_field(R"({"rows": [{"scheme": "OMA", "a": null}]})");
    EXPECT_THROW(read_json(missing_field), row_format_error);
}

} // namespace
} // namespace canoma
