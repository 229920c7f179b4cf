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

#ifndef CANOMA_CORE_MODEL_HPP
#define CANOMA_CORE_MODEL_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace canoma {

// Raised for parameter values outside a formula's domain.
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require(bool ok, const std::string& what)
{
    if (!ok)
        throw domain_error(what);
}

inline double checked_gain(double g)
{
    require(std::isfinite(g) && g >= 0.0, "channel gain must be finite and non-negative");
    return g;
}

// log2(1 + x), accurate for small x
inline double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

} // namespace detail

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

/// Transmit SNR (linear), mean channel power and QoS rate of a two-user downlink.
///
/// Every outage formula is parameterized by this triple. The SNR is held in
/// linear units; use from_db() at interface boundaries.
class SystemParams {
public:
    SystemParams(double snr, double beta, double rate)
        : snr_(snr), beta_(beta), rate_(rate)
    {
        detail::require(std::isfinite(snr) && snr > 0.0, "snr must be finite and > 0");
        detail::require(std::isfinite(beta) && beta > 0.0, "beta must be finite and > 0");
        detail::require(std::isfinite(rate) && rate > 0.0, "rate must be finite and > 0");
    }

    static SystemParams from_db(double snr_db, double beta, double rate)
    {
        detail::require(std::isfinite(snr_db), "snr_db must be finite");
        return {db_to_linear(snr_db), beta, rate};
    }

    double snr() const { return snr_; }
    double snr_db() const { return linear_to_db(snr_); }
    double beta() const { return beta_; }
    double rate() const { return rate_; }

    /// 2^R0 - 1, the SINR needed to carry R0 bps/Hz.
    double rate_factor() const { return std::expm1(rate_ * std::numbers::ln2); }

    /// 2^-R0. For a >= this value the strong user can never decode the weak
    /// user's signal.
    double sic_limit() const { return std::exp2(-rate_); }

    /// 1 / (1 + 2^R0), where the direct and SIC thresholds of the strong user coincide.
    double tradeoff_point() const { return 1.0 / (1.0 + std::exp2(rate_)); }

    /// (4^R0 - 1) / snr, the gain either user needs to reach R0 in a half slot.
    double oma_threshold() const { return std::expm1(2.0 * rate_ * std::numbers::ln2) / snr_; }

    friend bool operator==(const SystemParams&, const SystemParams&) = default;

private:
    double snr_;
    double beta_;
    double rate_;
};

/// Fraction a of the transmit power given to the strong user (user-2).
class PowerSplit {
public:
    explicit PowerSplit(double a) : a_(a)
    {
        detail::require(std::isfinite(a) && a > 0.0 && a < 1.0, "power split a must lie in (0, 1)");
    }

    double value() const { return a_; }
    double weak_share() const { return 1.0 - a_; }

    friend auto operator<=>(const PowerSplit&, const PowerSplit&) = default;

private:
    double a_;
};

/// Squared channel gains of the weak (g1) and strong (g2) user, g1 <= g2.
class ChannelPair {
public:
    ChannelPair(double g1, double g2) : g1_(g1), g2_(g2)
    {
        detail::require(std::isfinite(g1) && std::isfinite(g2) && g1 >= 0.0,
                        "channel gains must be finite and non-negative");
        detail::require(g1 <= g2, "channel pair must be ordered (g1 <= g2)");
    }

    static ChannelPair ordered(double x, double y) { return {std::min(x, y), std::max(x, y)}; }

    double weak() const { return g1_; }
    double strong() const { return g2_; }

    friend bool operator==(const ChannelPair&, const ChannelPair&) = default;

private:
    double g1_;
    double g2_;
};

// ---------- capacities (bps/Hz) ----------

/// Half-slot orthogonal access at full SNR: (1/2) log2(1 + snr g).
inline double oma_capacity(const SystemParams& p, double g)
{
    return 0.5 * detail::log2_1p(p.snr() * detail::checked_gain(g));
}

/// Weak user after cancelling the strong user's signal from its cache.
inline double ca_noma_capacity_user1(const SystemParams& p, PowerSplit a, double g1)
{
    return detail::log2_1p(a.weak_share() * p.snr() * detail::checked_gain(g1));
}

/// Strong user after SIC.
inline double ca_noma_capacity_user2(const SystemParams& p, PowerSplit a, double g2)
{
    return detail::log2_1p(a.value() * p.snr() * detail::checked_gain(g2));
}

/// Weak user's signal decoded with the strong user's signal as interference.
///
/// At g = g2 this is the strong user's SIC stage. At g = g1 it is the weak
/// user's own rate in regular (cache-less) NOMA.
inline double sic_capacity(const SystemParams& p, PowerSplit a, double g)
{
    const double sg = p.snr() * detail::checked_gain(g);
    if (std::isinf(sg))
        return detail::log2_1p(a.weak_share() / a.value());
    return detail::log2_1p(a.weak_share() * sg / (a.value() * sg + 1.0));
}

// ---------- outage thresholds on squared gains ----------

/// Weak-user gain below which the cache-aided rate falls short of R0.
inline double threshold_b1(const SystemParams& p, PowerSplit a)
{
    return p.rate_factor() / (a.weak_share() * p.snr());
}

/// Strong-user gain below which its own rate falls short of R0.
inline double threshold_b2(const SystemParams& p, PowerSplit a)
{
    return p.rate_factor() / (a.value() * p.snr());
}

/// Gain below which the weak user's signal cannot be decoded under
/// interference from the strong user's signal.
///
/// Returns std::nullopt when a >= 2^-R0: the decoding then fails for every
/// channel realization, so the threshold is infinite.
inline std::optional<double> threshold_b21(const SystemParams& p, PowerSplit a)
{
    const double margin = 1.0 - a.value() * std::exp2(p.rate());
    if (margin <= 0.0)
        return std::nullopt;
    return p.rate_factor() / (p.snr() * margin);
}

inline bool sic_feasible(const SystemParams& p, PowerSplit a) { return threshold_b21(p, a).has_value(); }

} // namespace canoma

#endif // CANOMA_CORE_MODEL_HPP
