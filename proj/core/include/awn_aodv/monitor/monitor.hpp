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

// Safety properties over global states and transitions: routing graphs,
// loop freedom, and the state and step invariants of the protocol.

#pragma once

#include <bitset>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "awn_aodv/aodv/instance.hpp"

namespace aodv {

struct RtGraph {
  Addr dip = 0;
  std::set<std::pair<Addr, Addr>> arcs;
};

struct Witness {
  std::string property;
  std::optional<Addr> dip;
  std::vector<Addr> path;  // a cycle, or the offending pair of nodes
  std::string detail;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  static Verdict ok() { return {}; }
  static Verdict fail(Witness w) { return {false, std::move(w)}; }
};

// Arc (ip, ip') iff ip is in `nodes`, ip != dip, and ip holds a valid route
// to dip with next hop ip'.
RtGraph rt_graph(const GlobalState& sigma, Addr dip, const AddrSet& nodes);

// Every routing graph, for every destination mentioned anywhere, is
// acyclic. The witness is the first cycle found scanning destinations and
// start nodes in ascending order.
Verdict loop_free(const GlobalState& sigma, const AddrSet& nodes);

// A cycle in an arbitrary arc set, or nothing.
std::optional<std::vector<Addr>> find_cycle(
    const std::set<std::pair<Addr, Addr>>& arcs);

Verdict hop_positivity(const GlobalState& sigma);
Verdict route_quality(const GlobalState& sigma);
Verdict sn_monotone(const GlobalState& before, const GlobalState& after);
Verdict nsqn_monotone(const GlobalState& before, const GlobalState& after);

enum class Property : std::uint8_t {
  hop_positivity,
  quality,
  loop_free,
  // Whenever a node is about to dispatch a received message, the message
  // is a newpkt or was sent by someone else.
  received_msg,
  sn_monotone,
  nsqn_monotone,
  count_,
};

std::string to_string(Property p);

class Suite {
 public:
  // Every property.
  static Suite all();
  // Comma-separated property names; "all" selects every property.
  static Suite parse(std::string_view names);

  bool has(Property p) const { return bits_.test(static_cast<std::size_t>(p)); }
  void add(Property p) { bits_.set(static_cast<std::size_t>(p)); }
  std::vector<Property> properties() const;
  std::string str() const;

 private:
  std::bitset<static_cast<std::size_t>(Property::count_)> bits_;
};

// Evaluates a suite on network states and transitions of one model.
class Monitor {
 public:
  Monitor(Suite suite, ModelConfig cfg = {});

  Verdict check_state(const NetState& s) const;
  Verdict check_step(const NetState& s, const NetAction& a,
                     const NetState& next) const;

  // The label predicate behind received_msg, lifted with onl.
  bool received_msg_ok(const ProcState& p) const;

  const Suite& suite() const { return suite_; }

 private:
  Suite suite_;
  std::function<bool(const ProcState&)> received_msg_;
};

}  // namespace aodv
