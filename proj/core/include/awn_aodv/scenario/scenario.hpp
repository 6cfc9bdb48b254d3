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

// Scenario files: a JSON description of a network, its environment and how
// to run it. See README.md for the schema.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "awn_aodv/monitor/monitor.hpp"
#include "awn_aodv/sim/simulator.hpp"

namespace aodv {

enum class Mode : std::uint8_t { explore, simulate };

struct Scenario {
  std::vector<std::pair<Addr, AddrSet>> nodes;
  ModelConfig model;
  Mode mode = Mode::explore;
  awn::EnvMenu env;
  Schedule schedule;
  Suite suite = Suite::all();
  std::optional<std::uint32_t> bound;
  std::uint64_t max_states = 10'000'000;
  std::string out;
  // Non-fatal findings, such as symmetrised neighbour lists.
  std::vector<std::string> warnings;

  awn::NetTree tree() const { return awn::balanced_tree(nodes); }
};

inline constexpr std::uint32_t kMaxBudget = 1u << 16;

// Errors are ConfigError with a JSON pointer to the offending value.
Scenario parse_scenario_text(const std::string& text);
Scenario parse_scenario(const std::string& path);

// Canonical JSON; parse_scenario_text(scenario_json(s)) reproduces s
// except for warnings.
std::string scenario_json(const Scenario& s);

}  // namespace aodv
