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

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "awn_aodv/aodv/routing_table.hpp"
#include "awn_aodv/awn/automaton.hpp"

namespace aodv {

namespace msg {

struct Newpkt {
  Datum data = 0;
  Addr dip = 0;
  bool operator==(const Newpkt&) const = default;
};

struct Pkt {
  Datum data = 0;
  Addr dip = 0;
  Addr sip = 0;
  bool operator==(const Pkt&) const = default;
};

// rreqid is absent when requests are identified by (oip, osn); handled is
// present only in the request-forwarding model.
struct Rreq {
  std::uint32_t hops = 0;
  std::optional<std::uint32_t> rreqid;
  Addr dip = 0;
  Sqn dsn = 0;
  Dsk dsk = Dsk::unk;
  Addr oip = 0;
  Sqn osn = 0;
  Addr sip = 0;
  std::optional<bool> handled;
  bool operator==(const Rreq&) const = default;
};

struct Rrep {
  std::uint32_t hops = 0;
  Addr dip = 0;
  Sqn dsn = 0;
  Addr oip = 0;
  Addr sip = 0;
  bool operator==(const Rrep&) const = default;
};

struct Rerr {
  awn::FlatMap<Addr, Sqn> dests;
  Addr sip = 0;
  bool operator==(const Rerr&) const = default;
};

using Message = std::variant<Newpkt, Pkt, Rreq, Rrep, Rerr>;

// Declared here so that argument-dependent lookup finds it.
std::string to_string(const Message& m);

}  // namespace msg

using msg::Message;
using msg::to_string;

// Number of fields carried by a message.
std::size_t arity(const Message& m);

// The sender recorded in a message; newpkt has none.
std::optional<Addr> sender(const Message& m);

}  // namespace aodv

template <>
struct awn::MessageTraits<aodv::Message> {
  static aodv::Message newpkt(Datum d, Addr dip) {
    return aodv::msg::Newpkt{d, dip};
  }
  static std::optional<std::pair<Datum, Addr>> as_newpkt(
      const aodv::Message& m) {
    if (const auto* n = std::get_if<aodv::msg::Newpkt>(&m)) {
      return std::pair{n->data, n->dip};
    }
    return std::nullopt;
  }
};
