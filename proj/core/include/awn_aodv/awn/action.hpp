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

// The action algebra shared by all five layers of the calculus.
//
// Process-level actions (SeqAction) are produced by sequential processes
// and local parallel compositions; network-level actions (NetAction) by
// nodes, partial networks and closed networks. Both are parameterised by
// the protocol's message type, which must be equality comparable and have
// an ADL-visible `to_string(const Msg&)`.

#pragma once

#include <string>
#include <variant>

#include "awn_aodv/awn/common.hpp"

namespace awn {

namespace act {

struct Tau {
  bool operator==(const Tau&) const = default;
};

// -- process level ---------------------------------------------------------

template <class Msg>
struct Broadcast {
  Msg msg;
  bool operator==(const Broadcast&) const = default;
};

template <class Msg>
struct Groupcast {
  AddrSet dests;
  Msg msg;
  bool operator==(const Groupcast&) const = default;
};

template <class Msg>
struct Unicast {
  Addr dest;
  Msg msg;
  bool operator==(const Unicast&) const = default;
};

struct UnicastFail {
  Addr dest;
  bool operator==(const UnicastFail&) const = default;
};

template <class Msg>
struct Send {
  Msg msg;
  bool operator==(const Send&) const = default;
};

template <class Msg>
struct Receive {
  Msg msg;
  bool operator==(const Receive&) const = default;
};

struct Deliver {
  Datum data;
  bool operator==(const Deliver&) const = default;
};

// -- node and network level ------------------------------------------------

// R:*cast(m)
template <class Msg>
struct Cast {
  AddrSet range;
  Msg msg;
  bool operator==(const Cast&) const = default;
};

// H¬K:arrive(m): the nodes in `hear` receive m, those in `miss` do not.
template <class Msg>
struct Arrive {
  AddrSet hear;
  AddrSet miss;
  Msg msg;
  bool operator==(const Arrive&) const = default;
};

struct Connect {
  Addr a;
  Addr b;
  bool operator==(const Connect&) const = default;
};

struct Disconnect {
  Addr a;
  Addr b;
  bool operator==(const Disconnect&) const = default;
};

// i:newpkt(d, dip)
struct Newpkt {
  Addr node;
  Datum data;
  Addr dip;
  bool operator==(const Newpkt&) const = default;
};

// i:deliver(d)
struct DeliverAt {
  Addr node;
  Datum data;
  bool operator==(const DeliverAt&) const = default;
};

}  // namespace act

template <class Msg>
using SeqAction =
    std::variant<act::Broadcast<Msg>, act::Groupcast<Msg>, act::Unicast<Msg>,
                 act::UnicastFail, act::Send<Msg>, act::Receive<Msg>,
                 act::Deliver, act::Tau>;

template <class Msg>
using NetAction =
    std::variant<act::Cast<Msg>, act::Arrive<Msg>, act::Connect,
                 act::Disconnect, act::Newpkt, act::DeliverAt, act::Tau>;

template <class A, class S>
struct Transition {
  A action;
  S target;
};

template <class Msg>
std::string to_string(const SeqAction<Msg>& a) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, act::Broadcast<Msg>>) {
          return "broadcast(" + to_string(x.msg) + ")";
        } else if constexpr (std::is_same_v<T, act::Groupcast<Msg>>) {
          return "groupcast(" + to_string(x.dests) + "," + to_string(x.msg) +
                 ")";
        } else if constexpr (std::is_same_v<T, act::Unicast<Msg>>) {
          return "unicast(" + std::to_string(x.dest) + "," +
                 to_string(x.msg) + ")";
        } else if constexpr (std::is_same_v<T, act::UnicastFail>) {
          return "not-unicast(" + std::to_string(x.dest) + ")";
        } else if constexpr (std::is_same_v<T, act::Send<Msg>>) {
          return "send(" + to_string(x.msg) + ")";
        } else if constexpr (std::is_same_v<T, act::Receive<Msg>>) {
          return "receive(" + to_string(x.msg) + ")";
        } else if constexpr (std::is_same_v<T, act::Deliver>) {
          return "deliver(" + std::to_string(x.data) + ")";
        } else {
          return "tau";
        }
      },
      a);
}

template <class Msg>
std::string to_string(const NetAction<Msg>& a) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, act::Cast<Msg>>) {
          return to_string(x.range) + ":*cast(" + to_string(x.msg) + ")";
        } else if constexpr (std::is_same_v<T, act::Arrive<Msg>>) {
          return to_string(x.hear) + "!" + to_string(x.miss) + ":arrive(" +
                 to_string(x.msg) + ")";
        } else if constexpr (std::is_same_v<T, act::Connect>) {
          return "connect(" + std::to_string(x.a) + "," + std::to_string(x.b) +
                 ")";
        } else if constexpr (std::is_same_v<T, act::Disconnect>) {
          return "disconnect(" + std::to_string(x.a) + "," +
                 std::to_string(x.b) + ")";
        } else if constexpr (std::is_same_v<T, act::Newpkt>) {
          return std::to_string(x.node) + ":newpkt(" + std::to_string(x.data) +
                 "," + std::to_string(x.dip) + ")";
        } else if constexpr (std::is_same_v<T, act::DeliverAt>) {
          return std::to_string(x.node) + ":deliver(" +
                 std::to_string(x.data) + ")";
        } else {
          return "tau";
        }
      },
      a);
}

template <class Msg>
bool is_arrive(const NetAction<Msg>& a) {
  return std::holds_alternative<act::Arrive<Msg>>(a);
}

template <class Msg>
bool is_cast(const NetAction<Msg>& a) {
  return std::holds_alternative<act::Cast<Msg>>(a);
}

}  // namespace awn
