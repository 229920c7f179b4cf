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

#include "canoma/sweep.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace canoma {
namespace {

std::vector<SweepRow> series(const std::vector<SweepRow>& rows, const std::string& name)
{
    std::vector<SweepRow> out;
    std::copy_if(rows.begin(), rows.end(), std::back_inserter(out), [&](const SweepRow& r) { return r.scheme == name; });
    return out;
}

TEST(RunConfig, DefaultsCarryReferenceParameters)
{
    for (Experiment e : {Experiment::eval, Experiment::sweep_a, Experiment::sweep_snr, Experiment::sweep_amin}) {
        const auto c = RunConfig::defaults(e);
        EXPECT_EQ(c.snr_db, 20.0);
        EXPECT_EQ(c.beta, 2.0);
        EXPECT_EQ(c.rate, 2.0);
    }
    const auto a = RunConfig::defaults(Experiment::sweep_a);
    EXPECT_EQ(a.grid.start, 0.005);
    EXPECT_EQ(a.grid.stop, 0.30);
    EXPECT_EQ(a.grid.points, 100u);
    const auto snr = RunConfig::defaults(Experiment::sweep_snr).grid.values();
    ASSERT_EQ(snr.size(), 15u);
    EXPECT_EQ(snr.front(), 5.0);
    EXPECT_DOUBLE_EQ(snr[1], 7.5);
    EXPECT_EQ(snr.back(), 40.0);
    EXPECT_EQ(RunConfig::defaults(Experiment::eval).samples, 1'000'000u);
    EXPECT_EQ(a.samples, 100'000u);
}

TEST(RunConfig, GridValidation)
{
    EXPECT_THROW((GridRange{1.0, 1.0, 5}.validate()), config_error);
    EXPECT_THROW((GridRange{2.0, 1.0, 5}.validate()), config_error);
    EXPECT_THROW((GridRange{0.0, 1.0, 1}.validate()), config_error);
    EXPECT_THROW((GridRange{0.0, INFINITY, 3}.validate()), config_error);
    auto c = RunConfig::defaults(Experiment::sweep_a);
    c.samples = 0;
    EXPECT_THROW(c.validate(), config_error);
    c = RunConfig::defaults(Experiment::eval);
    c.streams = 0;
    EXPECT_THROW(c.validate(), config_error);
}

TEST(Rounding, NineSignificantDigits)
{
    EXPECT_EQ(format_float(0.039687253664989552), "0.0396872537");
    EXPECT_EQ(format_float(20.0), "20");
    EXPECT_EQ(round_sig9(round_sig9(1.0 / 3.0)), round_sig9(1.0 / 3.0));
    EXPECT_EQ(format_float(round_sig9(1.0 / 3.0)), "0.333333333");
}

TEST(Eval, ReferencePoint)
{
    auto c = RunConfig::defaults(Experiment::eval);
    c.samples = 100'000;
    const auto r = run_eval(c);
    EXPECT_NEAR(r.analytic.p_union, 0.039688, 1e-6);
    EXPECT_NEAR(r.b1, 0.0375, 1e-15);
    EXPECT_NEAR(r.b2, 0.15, 1e-15);
    ASSERT_TRUE(r.b21);
    EXPECT_EQ(r.feasibility, "feasible (strong-user threshold dominates)");
    ASSERT_EQ(r.rows.size(), 4u);
    EXPECT_EQ(r.rows[0].scheme, "CA_NOMA");
    EXPECT_EQ(r.rows[1].scheme, "CA_NOMA:A1");
    EXPECT_EQ(r.rows[3].scheme, "CA_NOMA:A21");
    EXPECT_EQ(*r.rows[0].p_analytic, round_sig9(0.039687253664989552));
    EXPECT_EQ(*r.rows[0].seed, c.seed);
    const auto text = format_report(r);
    EXPECT_NE(text.find("0.0396872537"), std::string::npos);
}

TEST(Eval, InfeasibleSplit)
{
    auto c = RunConfig::defaults(Experiment::eval);
    c.a = 0.3;
    c.samples = 10'000;
    const auto r = run_eval(c);
    EXPECT_EQ(r.feasibility, "SIC infeasible (certain outage)");
    EXPECT_FALSE(r.b21);
    EXPECT_EQ(r.analytic.p_union, 1.0);
    EXPECT_EQ(r.empirical.p_union, 1.0);
    EXPECT_NE(format_report(r).find("infeasible"), std::string::npos);
}

TEST(Eval, SicDominatedLabelAndOmaRows)
{
    auto c = RunConfig::defaults(Experiment::eval);
    c.samples = 1000;
    c.a = 0.22;
    EXPECT_EQ(run_eval(c).feasibility, "feasible (SIC threshold dominates)");
    c.scheme = Scheme::oma;
    const auto r = run_eval(c);
    ASSERT_EQ(r.rows.size(), 3u);
    EXPECT_FALSE(r.rows[0].a);
}

TEST(SweepA, DefaultCurveShape)
{
    auto c = RunConfig::defaults(Experiment::sweep_a);
    c.samples = 2000;
    const auto rows = run_sweep_a(c);
    const auto curve = series(rows, "CA_NOMA");
    ASSERT_EQ(curve.size(), 100u);
    ASSERT_EQ(rows.size(), 400u);
    const auto best = std::min_element(curve.begin(), curve.end(),
                                       [](const SweepRow& x, const SweepRow& y) { return *x.p_analytic < *y.p_analytic; });
    EXPECT_NEAR(*best->a, 0.2, 0.01);
    for (const auto& r : curve) {
        if (*r.a >= 0.25) {
            EXPECT_EQ(*r.p_analytic, 1.0);
            EXPECT_EQ(*r.p_empirical, 1.0);
        }
        EXPECT_EQ(*r.n_samples, 2000u);
    }
}

TEST(SweepA, SicDominatedBand)
{
    auto c = RunConfig::defaults(Experiment::sweep_a);
    c.samples = 1000;
    c.grid = {0.201, 0.249, 20};
    const auto rows = run_sweep_a(c);
    const auto curve = series(rows, "CA_NOMA");
    const auto a2 = series(rows, "CA_NOMA:A2");
    const auto a21 = series(rows, "CA_NOMA:A21");
    for (std::size_t i = 0; i < curve.size(); ++i) {
        EXPECT_GT(*a21[i].p_analytic, *a2[i].p_analytic);
        if (i > 0) {
            EXPECT_GT(*curve[i].p_analytic, *curve[i - 1].p_analytic);
        }
    }
    EXPECT_GT(*curve.back().p_analytic, 0.9);
}

TEST(SweepA, DeterministicAndSeedsReproduceRows)
{
    auto c = RunConfig::defaults(Experiment::sweep_a);
    c.samples = 3000;
    c.grid = {0.05, 0.25, 5};
    const auto first = run_sweep_a(c);
    c.streams = 4;
    EXPECT_EQ(run_sweep_a(c), first);

    const auto& row = series(first, "CA_NOMA")[2];
    auto e = RunConfig::defaults(Experiment::eval);
    e.a = *row.a;
    e.samples = *row.n_samples;
    e.seed = *row.seed;
    EXPECT_EQ(run_eval(e).rows[0], row);
}

TEST(SweepA, GridOutsideUnitIntervalIsDomainError)
{
    auto c = RunConfig::defaults(Experiment::sweep_a);
    c.samples = 10;
    c.grid = {0.5, 1.5, 3};
    try {
        run_sweep_a(c);
        FAIL();
    } catch (const grid_error& e) {
        EXPECT_EQ(e.index(), 1u);
    }
}

TEST(SweepSnr, OrderingAndOmaPoint)
{
    auto c = RunConfig::defaults(Experiment::sweep_snr);
    c.samples = 20'000;
    const auto rows = run_sweep_snr(c);
    ASSERT_EQ(rows.size(), 45u);
    const auto ca = series(rows, "CA_NOMA");
    const auto noma = series(rows, "NOMA");
    const auto oma = series(rows, "OMA");
    double best_gap = -1.0;
    double best_gap_db = 0.0;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        EXPECT_LE(*ca[i].p_analytic, *noma[i].p_analytic);
        EXPECT_LE(*noma[i].p_analytic, *oma[i].p_analytic);
        EXPECT_LE(*ca[i].p_empirical, *noma[i].p_empirical + 3 * (*ca[i].se + *noma[i].se));
        EXPECT_LE(*noma[i].p_empirical, *oma[i].p_empirical + 3 * (*noma[i].se + *oma[i].se));
        EXPECT_FALSE(oma[i].a);
        EXPECT_EQ(ca[i].seed, oma[i].seed);
        const double gap = *noma[i].p_analytic - *ca[i].p_analytic;
        if (gap > best_gap) {
            best_gap = gap;
            best_gap_db = ca[i].snr_db;
        }
    }
    EXPECT_GE(best_gap_db, 10.0);
    EXPECT_LE(best_gap_db, 30.0);
    const auto at20 = std::find_if(oma.begin(), oma.end(), [](const SweepRow& r) { return r.snr_db == 20.0; });
    ASSERT_NE(at20, oma.end());
    EXPECT_NEAR(*at20->p_analytic, 0.139292, 1e-6);
}

TEST(SweepAmin, ThresholdAndMonotoneTrend)
{
    const auto c = RunConfig::defaults(Experiment::sweep_amin);
    const auto rows = run_sweep_amin(c);
    const auto closed = series(rows, "CA_NOMA:closed");
    const auto numeric = series(rows, "CA_NOMA:numeric");
    const auto unclamped = series(rows, "CA_NOMA:closed_unclamped");
    ASSERT_EQ(closed.size(), 17u);
    ASSERT_EQ(numeric.size(), 17u);
    ASSERT_EQ(unclamped.size(), 17u);
    for (std::size_t i = 0; i < closed.size(); ++i) {
        if (closed[i].snr_db <= 15.0) {
            EXPECT_EQ(*closed[i].a, 0.2);
            EXPECT_EQ(*numeric[i].a, 0.2);
        }
        if (closed[i].snr_db >= 25.0) {
            EXPECT_LT(*closed[i].a, 0.2);
            EXPECT_LT(*numeric[i].a, 0.2);
        }
        if (i > 0) {
            EXPECT_LE(*closed[i].a, *closed[i - 1].a);
            EXPECT_LE(*numeric[i].a, *numeric[i - 1].a);
        }
        EXPECT_FALSE(closed[i].p_empirical);
        EXPECT_FALSE(closed[i].seed);
    }
    const auto at30 = std::find_if(closed.begin(), closed.end(), [](const SweepRow& r) { return r.snr_db == 30.0; });
    ASSERT_NE(at30, closed.end());
    EXPECT_NEAR(*at30->a, 0.1062, 5e-5);
}

TEST(SweepAmin, ModelBreaksDownAtVeryLowSnr)
{
    auto c = RunConfig::defaults(Experiment::sweep_amin);
    c.grid = {-12.0, 0.0, 3};
    try {
        run_sweep_amin(c);
        FAIL();
    } catch (const grid_error& e) {
        EXPECT_EQ(e.index(), 0u);
    }
}

} // namespace
} // namespace canoma
