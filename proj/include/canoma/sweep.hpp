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

#ifndef CANOMA_SWEEP_HPP
#define CANOMA_SWEEP_HPP

#include "canoma/analytic_outage.hpp"
#include "canoma/core_model.hpp"
#include "canoma/monte_carlo.hpp"
#include "canoma/power_optimizer.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace canoma {

inline constexpr const char* tool_version = "0.1.0";

/// Malformed or inconsistent run configuration (as opposed to a domain error).
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Experiment { eval, sweep_a, sweep_snr, sweep_amin };
enum class OutputFormat { csv, json };

inline std::string_view to_string(Experiment e)
{
    switch (e) {
    case Experiment::eval: return "eval";
    case Experiment::sweep_a: return "sweep-a";
    case Experiment::sweep_snr: return "sweep-snr";
    case Experiment::sweep_amin: return "sweep-amin";
    }
    return "?";
}

inline std::string_view to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

/// `points` values from start to stop inclusive, uniformly spaced.
struct GridRange {
    double start = 0.0;
    double stop = 1.0;
    std::size_t points = 2;

    void validate() const
    {
        if (!std::isfinite(start) || !std::isfinite(stop))
            throw config_error("grid bounds must be finite");
        if (!(start < stop))
            throw config_error("grid start must be < grid stop");
        if (points < 2)
            throw config_error("grid needs at least 2 points");
    }

    std::vector<double> values() const
    {
        validate();
        std::vector<double> v(points);
        const double step = (stop - start) / static_cast<double>(points - 1);
        for (std::size_t i = 0; i < points; ++i)
            v[i] = start + step * static_cast<double>(i);
        v.back() = stop;
        return v;
    }
};

struct RunConfig {
    Experiment experiment = Experiment::eval;
    double snr_db = 20.0;
    double beta = 2.0;
    double rate = 2.0;
    double a = 0.2;
    Scheme scheme = Scheme::ca_noma;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 20260101;
    unsigned streams = 1;
    GridRange grid;
    std::string out;
    OutputFormat format = OutputFormat::csv;

    /// Per-experiment defaults: 20 dB, beta = 2, R0 = 2.
    static RunConfig defaults(Experiment e)
    {
        RunConfig c;
        c.experiment = e;
        switch (e) {
        case Experiment::eval:
            break;
        case Experiment::sweep_a:
            c.samples = 100'000;
            c.grid = {0.005, 0.30, 100};
            break;
        case Experiment::sweep_snr:
            c.samples = 100'000;
            c.grid = {5.0, 40.0, 15};
            break;
        case Experiment::sweep_amin:
            c.samples = 0;
            c.grid = {0.0, 40.0, 17};
            break;
        }
        return c;
    }

    SystemParams params() const { return SystemParams::from_db(snr_db, beta, rate); }
    SystemParams params_at(double db) const { return SystemParams::from_db(db, beta, rate); }
    McConfig mc() const { return {samples, seed, streams}; }

    void validate() const
    {
        if (streams < 1)
            throw config_error("streams must be >= 1");
        if (experiment == Experiment::sweep_amin)
            return grid.validate();
        if (samples < 1)
            throw config_error("samples must be >= 1");
        if (experiment != Experiment::eval)
            grid.validate();
    }
};

/// One output record. Blank (nullopt) means "not applicable".
///
/// `scheme` names the series: a bare scheme for union outage, or
/// "<scheme>:<qualifier>" for per-event series (A1, A2, A21) and for the
/// split-optimizer series (closed, closed_unclamped, numeric).
struct SweepRow {
    std::string scheme;
    std::optional<double> a;
    double snr_db = 0.0;
    double beta = 0.0;
    double rate_bps_hz = 0.0;
    std::optional<double> p_analytic;
    std::optional<double> p_empirical;
    std::optional<double> se;
    std::optional<std::uint64_t> n_samples;
    std::optional<std::uint64_t> seed;

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// The text form every float takes in output files.
inline std::string format_float(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

/// x rounded to what format_float can represent, so written rows parse back exactly.
inline double round_sig9(double x) { return std::strtod(format_float(x).c_str(), nullptr); }

namespace detail {

inline std::optional<double> round_opt(std::optional<double> x)
{
    if (x)
        return round_sig9(*x);
    return std::nullopt;
}

inline SweepRow make_row(std::string series, std::optional<double> a, double snr_db, const RunConfig& cfg,
                         std::optional<double> analytic, std::optional<double> empirical, std::optional<double> se,
                         std::optional<std::uint64_t> n, std::optional<std::uint64_t> seed)
{
    return {std::move(series), round_opt(a), round_sig9(snr_db), round_sig9(cfg.beta), round_sig9(cfg.rate),
            round_opt(analytic), round_opt(empirical), round_opt(se), n, seed};
}

inline double binomial_se(double p, std::uint64_t n) { return std::sqrt(p * (1.0 - p) / static_cast<double>(n)); }

// Union row followed by one row per outage event.
inline void append_breakdown_rows(std::vector<SweepRow>& rows, Scheme scheme, std::optional<double> a, double snr_db,
                                  const RunConfig& cfg, const OutageBreakdown& analytic,
                                  const std::optional<OutageBreakdown>& empirical, std::optional<std::uint64_t> seed)
{
    const std::string name(to_string(scheme));
    const auto n = empirical ? std::optional<std::uint64_t>(empirical->n_samples) : std::nullopt;
    const auto emp = [&](double OutageBreakdown::*field) {
        return empirical ? std::optional<double>((*empirical).*field) : std::nullopt;
    };
    const auto se = [&](double OutageBreakdown::*field) {
        return empirical ? std::optional<double>(binomial_se((*empirical).*field, empirical->n_samples))
                         : std::nullopt;
    };
    rows.push_back(make_row(name, a, snr_db, cfg, analytic.p_union, emp(&OutageBreakdown::p_union),
                            se(&OutageBreakdown::p_union), n, seed));
    rows.push_back(make_row(name + ":A1", a, snr_db, cfg, analytic.p_a1, emp(&OutageBreakdown::p_a1),
                            se(&OutageBreakdown::p_a1), n, seed));
    rows.push_back(make_row(name + ":A2", a, snr_db, cfg, analytic.p_a2, emp(&OutageBreakdown::p_a2),
                            se(&OutageBreakdown::p_a2), n, seed));
    if (scheme != Scheme::oma)
        rows.push_back(make_row(name + ":A21", a, snr_db, cfg, analytic.p_a21, emp(&OutageBreakdown::p_a21),
                                se(&OutageBreakdown::p_a21), n, seed));
}

inline std::optional<double> row_split(Scheme scheme, PowerSplit a)
{
    if (scheme == Scheme::oma)
        return std::nullopt;
    return a.value();
}

} // namespace detail

/// Where a power split sits relative to the feasibility boundaries.
inline std::string feasibility_label(const SystemParams& p, PowerSplit a)
{
    if (!sic_feasible(p, a))
        return "SIC infeasible (certain outage)";
    if (a.value() <= p.tradeoff_point())
        return "feasible (strong-user threshold dominates)";
    return "feasible (SIC threshold dominates)";
}

struct EvalReport {
    SystemParams params;
    PowerSplit a;
    Scheme scheme;
    double b1;
    double b2;
    std::optional<double> b21;
    std::string feasibility;
    OutageBreakdown analytic;
    OutageBreakdown empirical;
    std::vector<SweepRow> rows;
};

inline EvalReport run_eval(const RunConfig& cfg)
{
    cfg.validate();
    const SystemParams p = cfg.params();
    const PowerSplit a(cfg.a);
    EvalReport r{p,
                 a,
                 cfg.scheme,
                 threshold_b1(p, a),
                 threshold_b2(p, a),
                 threshold_b21(p, a),
                 feasibility_label(p, a),
                 outage_breakdown_analytic(p, a, cfg.scheme),
                 estimate_outage(p, a, cfg.scheme, cfg.mc()),
                 {}};
    detail::append_breakdown_rows(r.rows, cfg.scheme, detail::row_split(cfg.scheme, a), cfg.snr_db, cfg, r.analytic,
                                  r.empirical, cfg.seed);
    return r;
}

inline std::string format_report(const EvalReport& r)
{
    std::ostringstream os;
    const auto& p = r.params;
    os << "scheme        " << to_string(r.scheme) << '\n'
       << "snr           " << format_float(p.snr_db()) << " dB (linear " << format_float(p.snr()) << ")\n"
       << "beta          " << format_float(p.beta()) << '\n'
       << "rate          " << format_float(p.rate()) << " bps/Hz\n"
       << "a             " << format_float(r.a.value()) << '\n'
       << "threshold b1  " << format_float(r.b1) << '\n'
       << "threshold b2  " << format_float(r.b2) << '\n'
       << "threshold b21 " << (r.b21 ? format_float(*r.b21) : std::string("infeasible")) << '\n'
       << "feasibility   " << r.feasibility << '\n'
       << "tradeoff a    " << format_float(p.tradeoff_point()) << '\n'
       << "SIC limit a   " << format_float(p.sic_limit()) << "\n\n";
    os << "event      analytic        empirical\n";
    const auto line = [&](const char* name, double an, double em) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%-10s %-15s %s\n", name, format_float(an).c_str(), format_float(em).c_str());
        os << buf;
    };
    line("A1", r.analytic.p_a1, r.empirical.p_a1);
    line("A2", r.analytic.p_a2, r.empirical.p_a2);
    line("A21", r.analytic.p_a21, r.empirical.p_a21);
    line("union", r.analytic.p_union, r.empirical.p_union);
    os << "\nempirical se " << format_float(r.empirical.se_union) << " (n = " << r.empirical.n_samples << ")\n";
    return os.str();
}

/// Outage versus power split at fixed SNR.
inline std::vector<SweepRow> run_sweep_a(const RunConfig& cfg)
{
    cfg.validate();
    const SystemParams p = cfg.params();
    const auto grid = cfg.grid.values();
    std::vector<SweepRow> rows;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::optional<PowerSplit> a;
        try {
            a.emplace(grid[i]);
        } catch (const domain_error& e) {
            throw grid_error(i, e.what());
        }
        McConfig mc = cfg.mc();
        mc.master_seed = point_seed(cfg.seed, i);
        detail::append_breakdown_rows(rows, cfg.scheme, detail::row_split(cfg.scheme, *a), cfg.snr_db, cfg,
                                      outage_breakdown_analytic(p, *a, cfg.scheme),
                                      estimate_outage(p, *a, cfg.scheme, mc), mc.master_seed);
    }
    return rows;
}

/// Outage versus SNR: cache-aided NOMA at the closed-form split, regular NOMA
/// at its numerically optimal split, and OMA. The schemes at one grid point
/// share the point's seed.
inline std::vector<SweepRow> run_sweep_snr(const RunConfig& cfg)
{
    cfg.validate();
    const auto grid = cfg.grid.values();
    std::vector<SweepRow> rows;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double db = grid[i];
        McConfig mc = cfg.mc();
        mc.master_seed = point_seed(cfg.seed, i);
        try {
            const SystemParams p = cfg.params_at(db);
            const PowerSplit a_ca = a_min_closed_form(p).a_min;
            const PowerSplit a_noma = a_star_noma_numeric(p).a;
            const std::pair<Scheme, PowerSplit> runs[] = {
                {Scheme::ca_noma, a_ca}, {Scheme::noma, a_noma}, {Scheme::oma, a_ca}};
            for (const auto& [scheme, a] : runs) {
                const auto an = outage_breakdown_analytic(p, a, scheme);
                const auto em = estimate_outage(p, a, scheme, mc);
                const std::string name(to_string(scheme));
                rows.push_back(detail::make_row(name, detail::row_split(scheme, a), db, cfg, an.p_union, em.p_union,
                                                em.se_union, em.n_samples, mc.master_seed));
            }
        } catch (const grid_error&) {
            throw;
        } catch (const domain_error& e) {
            throw grid_error(i, e.what());
        }
    }
    return rows;
}

/// Closed-form versus numerically optimal split, with the outage each attains.
inline std::vector<SweepRow> run_sweep_amin(const RunConfig& cfg)
{
    cfg.validate();
    const auto grid = cfg.grid.values();
    std::vector<SweepRow> rows;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double db = grid[i];
        try {
            const SystemParams p = cfg.params_at(db);
            const auto closed = a_min_closed_form(p);
            const PowerSplit unclamped(closed.unclamped);
            const auto numeric = a_min_numeric(p);
            const auto add = [&](const char* series, PowerSplit a) {
                rows.push_back(detail::make_row(series, a.value(), db, cfg, union_outage_ca_noma(p, a), std::nullopt,
                                                std::nullopt, std::nullopt, std::nullopt));
            };
            add("CA_NOMA:closed", closed.a_min);
            add("CA_NOMA:closed_unclamped", unclamped);
            add("CA_NOMA:numeric", numeric.a);
        } catch (const domain_error& e) {
            throw grid_error(i, e.what());
        }
    }
    return rows;
}

inline std::vector<SweepRow> run_experiment(const RunConfig& cfg)
{
    switch (cfg.experiment) {
    case Experiment::eval: return run_eval(cfg).rows;
    case Experiment::sweep_a: return run_sweep_a(cfg);
    case Experiment::sweep_snr: return run_sweep_snr(cfg);
    case Experiment::sweep_amin: return run_sweep_amin(cfg);
    }
    return {};
}

} // namespace canoma

#endif // CANOMA_SWEEP_HPP
