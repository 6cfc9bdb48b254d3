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

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "awn_aodv/awn/action.hpp"
#include "awn_aodv/awn/common.hpp"

namespace awn {

// How the node layer recognises and builds newpkt(d, dip) messages. Each
// protocol message type specialises this.
template <class Msg>
struct MessageTraits;

// An automaton with an initial-state set and a step function. This is the
// shape of closed, environment-wrapped systems that the explorer and the
// simulator drive.
template <class S, class A>
struct Automaton {
  std::vector<S> init;
  std::function<std::vector<Transition<A, S>>(const S&)> steps;
};

// Layers one and two: receive prefixes are instantiated from the message
// menu supplied by the synchronising context.
template <class S, class Msg>
struct SeqAutomaton {
  using Step = Transition<SeqAction<Msg>, S>;
  std::vector<S> init;
  std::function<std::vector<Step>(const S&, std::span<const Msg>)> steps;
};

struct NewpktOffer {
  Addr node;
  Datum data;
  Addr dip;
  bool operator==(const NewpktOffer&) const = default;
};

struct LinkOffer {
  bool connect;
  Addr a;
  Addr b;
  bool operator==(const LinkOffer&) const = default;
};

// The environment actions a network may currently take part in.
struct EnvOffer {
  std::vector<NewpktOffer> newpkts;
  std::vector<LinkOffer> links;
};

// Layers three to five. `steps` yields every transition except arrivals;
// `arrive` yields the arrivals of one message. When `range` is given, only
// arrivals consistent with a cast to that range are produced (nodes in the
// range hear, the others miss); with no range every combination is
// offered.
template <class S, class Msg>
struct NetAutomaton {
  using Step = Transition<NetAction<Msg>, S>;
  std::vector<S> init;
  std::function<std::vector<Step>(const S&, const EnvOffer&)> steps;
  std::function<std::vector<Step>(const S&, const Msg&, const AddrSet*)>
      arrive;
  AddrSet addresses;
};

}  // namespace awn
