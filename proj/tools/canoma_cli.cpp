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

// Command-line front end: one-point evaluation and the three sweeps.

#include "canoma/canoma.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_io = 1;
constexpr int exit_config = 2;
constexpr int exit_domain = 3;

struct Overrides {
    std::optional<double> snr_db;
    std::optional<double> beta;
    std::optional<double> rate;
    std::optional<double> a;
    std::optional<std::string> scheme;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> streams;
    std::optional<double> grid_start;
    std::optional<double> grid_stop;
    std::optional<std::size_t> grid_points;
    std::string out;
    std::string format = "csv";
};

canoma::RunConfig build_config(canoma::Experiment experiment, const Overrides& o)
{
    auto cfg = canoma::RunConfig::defaults(experiment);
    if (o.snr_db) cfg.snr_db = *o.snr_db;
    if (o.beta) cfg.beta = *o.beta;
    if (o.rate) cfg.rate = *o.rate;
    if (o.a) cfg.a = *o.a;
    if (o.samples) cfg.samples = *o.samples;
    if (o.seed) cfg.seed = *o.seed;
    if (o.streams) cfg.streams = *o.streams;
    if (o.grid_start) cfg.grid.start = *o.grid_start;
    if (o.grid_stop) cfg.grid.stop = *o.grid_stop;
    if (o.grid_points) cfg.grid.points = *o.grid_points;
    if (o.scheme) {
        try {
            cfg.scheme = canoma::parse_scheme(*o.scheme);
        } catch (const canoma::domain_error& e) {
            throw canoma::config_error(e.what());
        }
    }
    cfg.out = o.out;
    cfg.format = o.format == "json" ? canoma::OutputFormat::json : canoma::OutputFormat::csv;
    cfg.validate();
    return cfg;
}

std::string render_rows(const std::vector<canoma::SweepRow>& rows, const canoma::RunConfig& cfg)
{
    std::ostringstream os;
    if (cfg.format == canoma::OutputFormat::json)
        canoma::write_json(os, rows, cfg);
    else
        canoma::write_csv(os, rows);
    return os.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Outage experiments for cache-aided two-user NOMA"};
    app.set_version_flag("--version", canoma::tool_version);
    app.require_subcommand(1);
    app.set_config("--config", "", "Read `key = value` settings (flag names without dashes); flags override", false);
    app.allow_config_extras(CLI::config_extras_mode::error);

    Overrides o;
    app.add_option("--snr-db", o.snr_db, "Transmit SNR in dB (default 20)");
    app.add_option("--beta", o.beta, "Mean channel power (default 2)");
    app.add_option("--rate", o.rate, "QoS rate R0 in bps/Hz (default 2)");
    app.add_option("--a", o.a, "Power split of the strong user (eval; default 0.2)");
    app.add_option("--scheme", o.scheme, "CA_NOMA | NOMA | OMA (eval, sweep-a)");
    app.add_option("--samples", o.samples, "Monte Carlo draws per point");
    app.add_option("--seed", o.seed, "Master seed");
    app.add_option("--streams", o.streams, "Parallel sampling streams")->check(CLI::PositiveNumber);
    app.add_option("--grid-start", o.grid_start, "First grid value (a or SNR dB)");
    app.add_option("--grid-stop", o.grid_stop, "Last grid value (a or SNR dB)");
    app.add_option("--grid-points", o.grid_points, "Number of grid points");
    app.add_option("--out", o.out, "Output file (default: stdout)");
    app.add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    const std::pair<const char*, canoma::Experiment> commands[] = {
        {"eval", canoma::Experiment::eval},
        {"sweep-a", canoma::Experiment::sweep_a},
        {"sweep-snr", canoma::Experiment::sweep_snr},
        {"sweep-amin", canoma::Experiment::sweep_amin},
    };
    const char* descriptions[] = {
        "Analytic and simulated outage at one operating point",
        "Outage versus power split (fixed SNR)",
        "Outage versus SNR for CA-NOMA, NOMA and OMA",
        "Closed-form versus numerically optimal power split versus SNR",
    };
    for (std::size_t i = 0; i < std::size(commands); ++i)
        app.add_subcommand(commands[i].first, descriptions[i])->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    canoma::Experiment experiment = canoma::Experiment::eval;
    for (const auto& [name, e] : commands)
        if (app.got_subcommand(name))
            experiment = e;

    canoma::RunConfig cfg;
    try {
        cfg = build_config(experiment, o);
    } catch (const canoma::config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    }

    std::string payload;
    try {
        if (experiment == canoma::Experiment::eval) {
            const auto report = canoma::run_eval(cfg);
            std::cout << canoma::format_report(report);
            if (!cfg.out.empty())
                payload = render_rows(report.rows, cfg);
        } else {
            payload = render_rows(canoma::run_experiment(cfg), cfg);
        }
    } catch (const canoma::config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const canoma::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return exit_domain;
    }

    if (cfg.out.empty()) {
        std::cout << payload;
        return exit_ok;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!(file << payload) || !file.flush()) {
        std::cerr << "cannot write " << cfg.out << '\n';
        return exit_io;
    }
    return exit_ok;
}
