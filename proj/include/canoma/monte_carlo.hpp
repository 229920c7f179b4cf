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

#ifndef CANOMA_MONTE_CARLO_HPP
#define CANOMA_MONTE_CARLO_HPP

#include "canoma/analytic_outage.hpp"
#include "canoma/channel_sampler.hpp"
#include "canoma/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

namespace canoma {

struct McConfig {
    std::uint64_t n_samples = 100000;
    std::uint64_t master_seed = 0;
    unsigned n_streams = 1;

    void validate() const
    {
        detail::require(n_samples >= 1, "n_samples must be >= 1");
        detail::require(n_streams >= 1, "n_streams must be >= 1");
    }
};

/// Outage events of one channel draw.
struct EventFlags {
    bool a1 = false;
    bool a2 = false;
    bool a21 = false;

    bool any() const { return a1 || a2 || a21; }
    friend bool operator==(const EventFlags&, const EventFlags&) = default;
};

/// Events decided by comparing achievable rates against R0.
inline EventFlags events_by_capacity(const SystemParams& p, PowerSplit a, Scheme scheme, const ChannelPair& g)
{
    const double r0 = p.rate();
    switch (scheme) {
    case Scheme::ca_noma:
        return {ca_noma_capacity_user1(p, a, g.weak()) < r0, ca_noma_capacity_user2(p, a, g.strong()) < r0,
                sic_capacity(p, a, g.strong()) < r0};
    case Scheme::noma:
        return {sic_capacity(p, a, g.weak()) < r0, ca_noma_capacity_user2(p, a, g.strong()) < r0,
                sic_capacity(p, a, g.strong()) < r0};
    case Scheme::oma:
        return {oma_capacity(p, g.weak()) < r0, oma_capacity(p, g.strong()) < r0, false};
    }
    return {};
}

/// Events decided by comparing gains against the outage thresholds.
inline EventFlags events_by_threshold(const SystemParams& p, PowerSplit a, Scheme scheme, const ChannelPair& g)
{
    const auto below = [](double gain, const std::optional<double>& t) { return !t || gain < *t; };
    switch (scheme) {
    case Scheme::ca_noma: {
        const auto b21 = threshold_b21(p, a);
        return {g.weak() < threshold_b1(p, a), g.strong() < threshold_b2(p, a), below(g.strong(), b21)};
    }
    case Scheme::noma: {
        const auto b21 = threshold_b21(p, a);
        return {below(g.weak(), b21), g.strong() < threshold_b2(p, a), below(g.strong(), b21)};
    }
    case Scheme::oma: {
        const double t = p.oma_threshold();
        return {g.weak() < t, g.strong() < t, false};
    }
    }
    return {};
}

struct OutageCounts {
    std::uint64_t n = 0;
    std::uint64_t a1 = 0;
    std::uint64_t a2 = 0;
    std::uint64_t a21 = 0;
    std::uint64_t any = 0;

    void add(const EventFlags& e)
    {
        ++n;
        a1 += e.a1;
        a2 += e.a2;
        a21 += e.a21;
        any += e.any();
    }

    OutageCounts& operator+=(const OutageCounts& o)
    {
        n += o.n;
        a1 += o.a1;
        a2 += o.a2;
        a21 += o.a21;
        any += o.any;
        return *this;
    }

    friend bool operator==(const OutageCounts&, const OutageCounts&) = default;

    OutageBreakdown to_breakdown() const
    {
        const double total = static_cast<double>(n);
        OutageBreakdown b;
        b.source = OutageBreakdown::Source::empirical;
        b.n_samples = n;
        b.p_a1 = static_cast<double>(a1) / total;
        b.p_a2 = static_cast<double>(a2) / total;
        b.p_a21 = static_cast<double>(a21) / total;
        b.p_union = static_cast<double>(any) / total;
        b.se_union = std::sqrt(b.p_union * (1.0 - b.p_union) / total);
        return b;
    }
};

/// Draws per sub-stream. Draw i always comes from sub-stream i / samples_per_block,
/// so the sample sequence does not depend on how draws are split across threads.
inline constexpr std::uint64_t samples_per_block = std::uint64_t{1} << 16;

struct SampleRange {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
};

/// Contiguous share of stream k; the remainder goes to the lowest indices.
inline SampleRange stream_range(std::uint64_t n_samples, unsigned n_streams, unsigned k)
{
    const std::uint64_t base = n_samples / n_streams;
    const std::uint64_t rem = n_samples % n_streams;
    const std::uint64_t begin = k * base + std::min<std::uint64_t>(k, rem);
    return {begin, begin + base + (k < rem ? 1 : 0)};
}

inline OutageCounts count_range(const SystemParams& p, PowerSplit a, Scheme scheme, std::uint64_t seed,
                                SampleRange range)
{
    OutageCounts counts;
    std::optional<ChannelSampler> sampler;
    for (std::uint64_t i = range.begin; i < range.end; ++i) {
        if (!sampler || i % samples_per_block == 0) {
            sampler.emplace(SamplerSeed{seed, i / samples_per_block});
            sampler->skip_pairs(i % samples_per_block);
        }
        counts.add(events_by_capacity(p, a, scheme, sampler->sample_pair(p)));
    }
    return counts;
}

/// Raw event counts; identical for any n_streams given (n_samples, master_seed).
inline OutageCounts estimate_counts(const SystemParams& p, PowerSplit a, Scheme scheme, const McConfig& cfg)
{
    cfg.validate();
    std::vector<OutageCounts> partial(cfg.n_streams);
    if (cfg.n_streams == 1) {
        partial[0] = count_range(p, a, scheme, cfg.master_seed, {0, cfg.n_samples});
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(cfg.n_streams);
        for (unsigned k = 0; k < cfg.n_streams; ++k)
            workers.emplace_back([&, k] {
                partial[k] = count_range(p, a, scheme, cfg.master_seed, stream_range(cfg.n_samples, cfg.n_streams, k));
            });
    }
    OutageCounts total;
    for (const auto& c : partial)
        total += c;
    return total;
}

inline OutageBreakdown estimate_outage(const SystemParams& p, PowerSplit a, Scheme scheme, const McConfig& cfg)
{
    return estimate_counts(p, a, scheme, cfg).to_breakdown();
}

struct CurvePoint {
    SystemParams params;
    PowerSplit a;
};

/// Validation failure at a specific grid point.
class grid_error : public domain_error {
public:
    grid_error(std::size_t index, const std::string& what)
        : domain_error("grid point " + std::to_string(index) + ": " + what), index_(index)
    {
    }
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// Seed used for point `index` of a curve run with `master_seed`.
inline std::uint64_t point_seed(std::uint64_t master_seed, std::size_t index)
{
    return derive_seed(master_seed, index);
}

inline std::vector<OutageBreakdown> estimate_curve(std::span<const CurvePoint> points, Scheme scheme,
                                                   const McConfig& cfg)
{
    detail::require(!points.empty(), "curve grid must not be empty");
    cfg.validate();
    std::vector<OutageBreakdown> out;
    out.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        McConfig point_cfg = cfg;
        point_cfg.master_seed = point_seed(cfg.master_seed, i);
        out.push_back(estimate_outage(points[i].params, points[i].a, scheme, point_cfg));
    }
    return out;
}

/// Curve over raw a-values; invalid values are reported with their grid index.
inline std::vector<OutageBreakdown> estimate_curve_over_a(const SystemParams& p, std::span<const double> a_values,
                                                          Scheme scheme, const McConfig& cfg)
{
    std::vector<CurvePoint> points;
    points.reserve(a_values.size());
    for (std::size_t i = 0; i < a_values.size(); ++i) {
        try {
            points.push_back({p, PowerSplit(a_values[i])});
        } catch (const domain_error& e) {
            throw grid_error(i, e.what());
        }
    }
    return estimate_curve(points, scheme, cfg);
}

} // namespace canoma

#endif // CANOMA_MONTE_CARLO_HPP
