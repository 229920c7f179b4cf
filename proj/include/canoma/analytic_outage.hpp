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

#ifndef CANOMA_ANALYTIC_OUTAGE_HPP
#define CANOMA_ANALYTIC_OUTAGE_HPP

#include "canoma/channel_sampler.hpp"
#include "canoma/core_model.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

namespace canoma {

enum class Scheme { ca_noma, noma, oma };

inline constexpr std::array<Scheme, 3> all_schemes{Scheme::ca_noma, Scheme::noma, Scheme::oma};

inline std::string_view to_string(Scheme s)
{
    switch (s) {
    case Scheme::ca_noma: return "CA_NOMA";
    case Scheme::noma: return "NOMA";
    case Scheme::oma: return "OMA";
    }
    return "?";
}

/// Accepts the canonical names and their lower-case / dashed spellings.
inline Scheme parse_scheme(std::string_view name)
{
    std::string key(name);
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) {
        return c == '-' ? '_' : static_cast<char>(std::toupper(c));
    });
    for (Scheme s : all_schemes)
        if (key == to_string(s))
            return s;
    throw domain_error("unknown scheme '" + std::string(name) + "'");
}

/// Probabilities of the three outage events and of their union.
///
/// a1: weak user misses R0. a2: strong user misses R0. a21: the strong user
/// cannot decode the weak user's signal (always 0 for OMA, which has no SIC).
struct OutageBreakdown {
    enum class Source { analytic, empirical };

    double p_a1 = 0.0;
    double p_a2 = 0.0;
    double p_a21 = 0.0;
    double p_union = 0.0;
    Source source = Source::analytic;
    double se_union = 0.0;
    std::uint64_t n_samples = 0;
};

namespace detail {

inline double strong_outage(const SystemParams& p, const std::optional<double>& t)
{
    return t ? strong_gain_cdf(p, *t) : 1.0;
}

} // namespace detail

/// Union outage of cache-aided NOMA over the whole range of a.
///
/// a <= 1/(1+2^R0): closed form 1 + exp(-2c/(a beta snr)) - 2 exp(-c/(a(1-a) beta snr)),
///                  c = 2^R0 - 1, arranged with expm1 to keep small values accurate.
/// up to 2^-R0:     SIC threshold replaces the strong user's own threshold.
/// beyond:          certain outage.
inline double union_outage_ca_noma(const SystemParams& p, PowerSplit a)
{
    const auto b21 = threshold_b21(p, a);
    if (!b21)
        return 1.0;
    if (a.value() <= p.tradeoff_point()) {
        const double c = p.rate_factor();
        const double scale = a.value() * p.beta() * p.snr();
        const double strong_term = 2.0 * c / scale;
        const double joint_term = c / (a.weak_share() * scale);
        return std::expm1(-strong_term) - 2.0 * std::expm1(-joint_term);
    }
    return joint_outage(p, threshold_b1(p, a), std::max(threshold_b2(p, a), *b21));
}

/// Union outage of regular NOMA: the weak user decodes its own signal
/// under interference, so its threshold has the same form as the SIC threshold.
inline double union_outage_noma(const SystemParams& p, PowerSplit a)
{
    const auto b21 = threshold_b21(p, a);
    if (!b21)
        return 1.0;
    return joint_outage(p, *b21, std::max(threshold_b2(p, a), *b21));
}

/// Union outage of two equal half-slots at full SNR: both gains must
/// exceed (4^R0 - 1)/snr.
inline double union_outage_oma(const SystemParams& p)
{
    return weak_gain_cdf(p, p.oma_threshold());
}

inline double union_outage(const SystemParams& p, PowerSplit a, Scheme scheme)
{
    switch (scheme) {
    case Scheme::ca_noma: return union_outage_ca_noma(p, a);
    case Scheme::noma: return union_outage_noma(p, a);
    case Scheme::oma: return union_outage_oma(p);
    }
    return 1.0;
}

/// Per-event marginals plus the scheme's union. `a` is ignored for OMA.
inline OutageBreakdown outage_breakdown_analytic(const SystemParams& p, PowerSplit a, Scheme scheme)
{
    OutageBreakdown out;
    out.source = OutageBreakdown::Source::analytic;
    switch (scheme) {
    case Scheme::ca_noma: {
        const auto b21 = threshold_b21(p, a);
        out.p_a1 = weak_gain_cdf(p, threshold_b1(p, a));
        out.p_a2 = strong_gain_cdf(p, threshold_b2(p, a));
        out.p_a21 = detail::strong_outage(p, b21);
        break;
    }
    case Scheme::noma: {
        const auto b21 = threshold_b21(p, a);
        out.p_a1 = b21 ? weak_gain_cdf(p, *b21) : 1.0;
        out.p_a2 = strong_gain_cdf(p, threshold_b2(p, a));
        out.p_a21 = detail::strong_outage(p, b21);
        break;
    }
    case Scheme::oma: {
        const double t = p.oma_threshold();
        out.p_a1 = weak_gain_cdf(p, t);
        out.p_a2 = strong_gain_cdf(p, t);
        out.p_a21 = 0.0;
        break;
    }
    }
    out.p_union = union_outage(p, a, scheme);
    return out;
}

} // namespace canoma

#endif // CANOMA_ANALYTIC_OUTAGE_HPP
