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

// Line-delimited JSON traces. The first record is a header carrying the
// scenario, then one record per step, then a verdict:
//
//   {"type":"header","scenario":{...},"kind":"simulate","digest":"..."}
//   {"type":"step","step":1,"actors":[1],"action":"newpkt(7,3)@1",
//    "digest":"...","sigma":{...}}
//   {"type":"verdict","holds":true,"steps":86,"reason":"quiescent"}
//
// Integers only; every field is bit-exact across platforms.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "awn_aodv/scenario/scenario.hpp"

namespace aodv {

std::string sigma_json(const GlobalState& sigma);

class TraceWriter {
 public:
  TraceWriter(std::ostream& out, const Scenario& sc, std::string kind,
              bool dump_sigma);

  void initial(const SysState& s);
  void step(std::uint64_t index, const std::vector<Addr>& actors,
            const NetAction& a, const SysState& s);
  void verdict(bool holds, std::uint64_t steps, const std::string& reason,
               const std::optional<awn::Violation>& v);

 private:
  std::ostream& out_;
  StateCodec codec_;
  bool dump_sigma_;
};

struct TraceStepRecord {
  std::uint64_t step = 0;
  std::string action;
  std::string digest;
};

struct TraceFile {
  Scenario scenario;
  std::string kind;
  std::string init_digest;
  std::vector<TraceStepRecord> steps;
  std::optional<bool> holds;  // from the verdict record, if present
};

// Throws ConfigError naming the line on malformed input.
TraceFile read_trace(std::istream& in);

// Replays a trace from the initial state, matching each record's action
// text and state digest against the enabled transitions (forced events of
// the schedule included). Returns the states after 0..upto steps; throws
// ConfigError on divergence.
std::vector<SysState> replay_trace(const TraceFile& tr,
                                   std::optional<std::uint64_t> upto = {});

}  // namespace aodv
