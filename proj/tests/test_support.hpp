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

// Shared generators for the property-style tests.

#ifndef CANOMA_TESTS_TEST_SUPPORT_HPP
#define CANOMA_TESTS_TEST_SUPPORT_HPP

#include "canoma/core_model.hpp"

#include <cmath>
#include <random>

namespace canoma::testing {

// Log-uniform draw on [lo, hi].
inline double log_uniform(std::mt19937_64& rng, double lo, double hi)
{
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// snr in [1, 1e4], beta in [0.1, 10], rate in [0.5, 5].
inline SystemParams random_params(std::mt19937_64& rng)
{
    return {log_uniform(rng, 1.0, 1e4), log_uniform(rng, 0.1, 10.0), uniform(rng, 0.5, 5.0)};
}

// a in (0, 1/(1+2^R0)], never exactly 0.
inline PowerSplit random_split_below_tradeoff(std::mt19937_64& rng, const SystemParams& p)
{
    const double cap = p.tradeoff_point();
    double a = uniform(rng, 0.0, cap);
    while (a <= 0.0)
        a = uniform(rng, 0.0, cap);
    return PowerSplit(a);
}

inline bool near_rel(double x, double y, double rel) { return std::abs(x - y) <= rel * std::max(std::abs(x), std::abs(y)); }

} // namespace canoma::testing

#endif // CANOMA_TESTS_TEST_SUPPORT_HPP
