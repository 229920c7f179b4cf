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

#ifndef CANOMA_CANOMA_HPP
#define CANOMA_CANOMA_HPP

#include "canoma/analytic_outage.hpp"
#include "canoma/channel_sampler.hpp"
#include "canoma/core_model.hpp"
#include "canoma/monte_carlo.hpp"
#include "canoma/power_optimizer.hpp"
#include "canoma/row_io.hpp"
#include "canoma/sweep.hpp"

#endif // CANOMA_CANOMA_HPP
