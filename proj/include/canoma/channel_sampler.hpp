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

#ifndef CANOMA_CHANNEL_SAMPLER_HPP
#define CANOMA_CHANNEL_SAMPLER_HPP

#include "canoma/core_model.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace canoma {

/// Identifies one reproducible random stream.
struct SamplerSeed {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;

    friend bool operator==(const SamplerSeed&, const SamplerSeed&) = default;
};

namespace detail {

inline std::seed_seq make_seed_seq(std::uint64_t master, std::uint64_t index, std::uint32_t tag)
{
    return std::seed_seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                         static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), tag};
}

inline constexpr std::uint32_t stream_tag = 0x53545245u; // "STRE"
inline constexpr std::uint32_t derive_tag = 0x44455256u; // "DERV"

} // namespace detail

/// Child seed for sub-experiment `index` of `master` (e.g. one grid point).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index)
{
    auto seq = detail::make_seed_seq(master, index, detail::derive_tag);
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    return (static_cast<std::uint64_t>(words[1]) << 32) | words[0];
}

/// Draws ordered channel-gain pairs for two randomly paired users.
///
/// Each stream is a std::mt19937_64 whose state is expanded by std::seed_seq
/// from the words {lo(master), hi(master), lo(stream), hi(stream), tag}.
/// A pair consumes exactly two engine outputs, one per exponential variate.
/// Not thread-safe; use one sampler per stream.
class ChannelSampler {
public:
    explicit ChannelSampler(SamplerSeed seed)
    {
        auto seq = detail::make_seed_seq(seed.master_seed, seed.stream_index, detail::stream_tag);
        engine_.seed(seq);
    }

    ChannelPair sample_pair(const SystemParams& p)
    {
        const double x = exponential(p.beta());
        const double y = exponential(p.beta());
        return ChannelPair::ordered(x, y);
    }

    void skip_pairs(std::uint64_t n) { engine_.discard(2 * n); }

private:
    // Inverse CDF of Exp(mean) applied to a 53-bit uniform on [0, 1).
    double exponential(double mean)
    {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return -mean * std::log1p(-u);
    }

    std::mt19937_64 engine_;
};

namespace detail {

inline void check_threshold(double t)
{
    require(!std::isnan(t) && t >= 0.0, "gain threshold must be non-negative");
}

} // namespace detail

/// Pr{g1 >= t1, g2 >= t2} for the ordered pair of two iid Exp(mean beta) gains.
inline double joint_survival(const SystemParams& p, double t1, double t2)
{
    detail::check_threshold(t1);
    detail::check_threshold(t2);
    const double beta = p.beta();
    if (t1 > t2)
        return std::exp(-2.0 * t1 / beta);
    return 2.0 * std::exp(-(t1 + t2) / beta) - std::exp(-2.0 * t2 / beta);
}

/// 1 - joint_survival(p, t1, t2), evaluated without cancellation:
/// Pr{g1 < t1} + Pr{g1 >= t1, g2 < t2}.
inline double joint_outage(const SystemParams& p, double t1, double t2)
{
    detail::check_threshold(t1);
    detail::check_threshold(t2);
    const double beta = p.beta();
    const double weak = -std::expm1(-2.0 * t1 / beta);
    if (t1 >= t2)
        return weak;
    if (std::isinf(t2))
        return 1.0;
    const double gap = -std::exp(-t1 / beta) * std::expm1(-(t2 - t1) / beta);
    return weak + gap * gap;
}

/// Pr{g1 < t}: the minimum of two Exp(beta) draws is Exp(beta / 2).
inline double weak_gain_cdf(const SystemParams& p, double t)
{
    detail::check_threshold(t);
    return -std::expm1(-2.0 * t / p.beta());
}

/// Pr{g2 < t}: both draws fall below t.
inline double strong_gain_cdf(const SystemParams& p, double t)
{
    detail::check_threshold(t);
    const double single = -std::expm1(-t / p.beta());
    return single * single;
}

} // namespace canoma

#endif // CANOMA_CHANNEL_SAMPLER_HPP
