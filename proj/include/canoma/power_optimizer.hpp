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

#ifndef CANOMA_POWER_OPTIMIZER_HPP
#define CANOMA_POWER_OPTIMIZER_HPP

#include "canoma/analytic_outage.hpp"
#include "canoma/core_model.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace canoma {

/// The low-SNR regime where the cubic approximation has no real discriminant.
class out_of_model_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// Terms of the depressed-cubic solution for the outage-minimizing split.
///
/// With a = b + a0/3 the stationarity condition a^3 - a0 a^2 + 2 a0 a - a0 = 0
/// becomes b^3 + a3 b = a1, solved by b = s - q.
struct CubicIntermediates {
    double a0 = 0.0; ///< (2^R0 - 1) / (beta snr)
    double a1 = 0.0; ///< (2/27) a0^3 - (2/3) a0^2 + a0
    double a2 = 0.0; ///< a0 sqrt(1 - (4/27) a0)
    double a3 = 0.0; ///< 2 a0 - a0^2 / 3
    double s = 0.0;  ///< cbrt((a1 + a2) / 2)
    double q = 0.0;  ///< cbrt((a2 - a1) / 2)

    double root() const { return a0 / 3.0 + s - q; }
};

inline constexpr double max_cubic_a0 = 27.0 / 4.0;

/// Cubic terms for a given a0. Throws out_of_model_error when a0 > 27/4.
inline CubicIntermediates cubic_intermediates(double a0)
{
    detail::require(std::isfinite(a0) && a0 > 0.0, "a0 must be finite and > 0");
    if (a0 > max_cubic_a0)
        throw out_of_model_error("a0 = " + std::to_string(a0) +
                                 " exceeds 27/4: SNR too low for the closed-form power split");
    CubicIntermediates c;
    c.a0 = a0;
    c.a1 = (2.0 / 27.0) * a0 * a0 * a0 - (2.0 / 3.0) * a0 * a0 + a0;
    const double root_term = std::sqrt(1.0 - (4.0 / 27.0) * a0);
    c.a2 = a0 * root_term;
    c.a3 = 2.0 * a0 - a0 * a0 / 3.0;
    c.s = std::cbrt((c.a1 + c.a2) / 2.0);
    // a2 - a1 with the O(a0) terms cancelled analytically.
    const double diff = a0 * a0 * (2.0 / 3.0 - (2.0 / 27.0) * a0 - (4.0 / 27.0) / (1.0 + root_term));
    c.q = std::cbrt(diff / 2.0);
    return c;
}

inline double cubic_a0(const SystemParams& p) { return p.rate_factor() / (p.beta() * p.snr()); }

/// Residual of the stationarity cubic at x.
inline double cubic_residual(double a0, double x) { return ((x - a0) * x + 2.0 * a0) * x - a0; }

struct ClosedFormSplit {
    PowerSplit a_min;           ///< min(root, 1/(1+2^R0))
    double unclamped = 0.0;     ///< the cubic root itself
    bool clamped = false;
    CubicIntermediates cubic;
};

/// Closed-form approximation of the split minimizing the cache-aided union outage.
inline ClosedFormSplit a_min_closed_form(const SystemParams& p)
{
    const auto cubic = cubic_intermediates(cubic_a0(p));
    const double root = cubic.root();
    const double cap = p.tradeoff_point();
    const bool clamped = !(root < cap);
    return {PowerSplit(clamped ? cap : root), root, clamped, cubic};
}

struct NumericMinimum {
    PowerSplit a;
    double objective = 0.0;
    bool grid_unimodal = true; ///< the coarse pre-grid showed a single descent/ascent
};

namespace detail {

inline constexpr int minimizer_grid_points = 64;

// Grid scan then golden-section refinement of f over (lo, hi] (or (lo, hi)
// when the upper end is excluded). f is only evaluated strictly inside
// the domain. The result lies within tol of the minimizer for unimodal f.
template <class F>
NumericMinimum grid_then_golden(F&& f, double lo, double hi, bool include_hi, double tol)
{
    require(std::isfinite(tol) && tol > 0.0, "tolerance must be finite and > 0");
    const int n = minimizer_grid_points;
    const double step = (hi - lo) / (include_hi ? n : n + 1);
    std::vector<double> xs(n), fs(n);
    int best = 0;
    for (int i = 0; i < n; ++i) {
        xs[i] = (i + 1 == n && include_hi) ? hi : lo + step * (i + 1);
        fs[i] = f(xs[i]);
        if (fs[i] < fs[best])
            best = i;
    }

    int sign_changes = 0;
    int last_sign = 0;
    for (int i = 1; i < n; ++i) {
        const int sign = (fs[i] > fs[i - 1]) - (fs[i] < fs[i - 1]);
        if (sign != 0) {
            if (last_sign != 0 && sign != last_sign)
                ++sign_changes;
            last_sign = sign;
        }
    }

    double left = best == 0 ? lo : xs[best - 1];
    double right = best + 1 == n ? (include_hi ? hi : lo + step * (n + 1)) : xs[best + 1];
    const auto inside = [&](double x) { return x > lo && (include_hi ? x <= hi : x < hi); };
    const auto eval = [&](double x) { return inside(x) ? f(x) : std::numeric_limits<double>::infinity(); };

    constexpr double inv_phi = 0.6180339887498949;
    double m1 = right - inv_phi * (right - left);
    double m2 = left + inv_phi * (right - left);
    double f1 = eval(m1);
    double f2 = eval(m2);
    for (int iter = 0; right - left > tol && iter < 200; ++iter) {
        if (f1 < f2) {
            right = m2;
            m2 = m1;
            f2 = f1;
            m1 = right - inv_phi * (right - left);
            f1 = eval(m1);
        } else {
            left = m1;
            m1 = m2;
            f1 = f2;
            m2 = left + inv_phi * (right - left);
            f2 = eval(m2);
        }
    }

    double best_x = 0.5 * (left + right);
    double best_f = eval(best_x);
    for (double x : {left, right}) {
        const double fx = eval(x);
        if (fx < best_f) {
            best_x = x;
            best_f = fx;
        }
    }
    return {PowerSplit(best_x), best_f, sign_changes <= 1};
}

} // namespace detail

inline constexpr double default_split_tolerance = 1e-6;

/// Minimizer of the cache-aided union outage over (0, 1/(1+2^R0)].
inline NumericMinimum a_min_numeric(const SystemParams& p, double tol = default_split_tolerance)
{
    return detail::grid_then_golden([&](double a) { return union_outage_ca_noma(p, PowerSplit(a)); }, 0.0,
                                    p.tradeoff_point(), true, tol);
}

/// Minimizer of the regular-NOMA union outage over (0, 2^-R0).
inline NumericMinimum a_star_noma_numeric(const SystemParams& p, double tol = default_split_tolerance)
{
    return detail::grid_then_golden([&](double a) { return union_outage_noma(p, PowerSplit(a)); }, 0.0,
                                    p.sic_limit(), false, tol);
}

} // namespace canoma

#endif // CANOMA_POWER_OPTIMIZER_HPP
