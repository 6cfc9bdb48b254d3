/*
 * Copyright (c) 2026, The awn-aodv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Exhaustive loop-freedom checking of closed AODV networks.

#pragma once

#include "awn_aodv/aodv/codec.hpp"
#include "awn_aodv/explore/explorer.hpp"
#include "awn_aodv/monitor/monitor.hpp"

namespace aodv {

using Report = awn::Report<SysState, NetAction>;
using Counterexample = awn::Counterexample<SysState, NetAction>;

// Worker count from AWN_AODV_THREADS, defaulting to 1.
unsigned threads_from_env();

awn::Problem<SysState, NetAction> loop_freedom_problem(const awn::NetTree& t,
                                                    const awn::EnvMenu& menu,
                                                    ModelConfig cfg,
                                                    Suite suite);

// Explores every state of the closed network `t` under `menu`, checking
// `suite` on every state and transition.
Report check_loop_freedom(const awn::NetTree& t, const awn::EnvMenu& menu,
                      ModelConfig cfg = {}, awn::Limits limits = {},
                      Suite suite = Suite::all());

}  // namespace aodv
