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

// Seeded random runs of a closed AODV network with per-step monitoring.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "awn_aodv/explore/check.hpp"

namespace aodv {

using ForcedAction = std::variant<awn::NewpktOffer, awn::LinkOffer>;

struct ForcedEvent {
  // Fires once the run has taken this many steps, or earlier if nothing
  // else is enabled.
  std::uint64_t step = 0;
  ForcedAction action;
};

struct Schedule {
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 1000;
  // Sorted by step; ties fire in list order.
  std::vector<ForcedEvent> events;
};

std::string to_string(const ForcedAction& a);

struct SimStep {
  std::uint64_t index = 0;  // 1-based
  std::vector<Addr> actors;  // nodes whose state changed
  NetAction action;
  bool forced = false;
  const SysState* state = nullptr;  // valid during the callback only
};

struct SimResult {
  std::uint64_t steps = 0;
  bool quiescent = false;  // nothing enabled and no events pending
  std::optional<awn::Violation> violation;
  SysState final_state;
};

class SimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Picks uniformly among enabled transitions with mt19937_64(seed), except
// that a due forced event always fires first. Throws SimError when a due
// event is not enabled.
SimResult simulate(const awn::NetTree& t, const awn::EnvMenu& menu,
                   const Schedule& sched, ModelConfig cfg = {},
                   Suite suite = Suite::all(),
                   const std::function<void(const SimStep&)>& on_step = {});

}  // namespace aodv
