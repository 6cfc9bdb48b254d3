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

// The per-node data record: five globals, the locals used while handling
// one message, and the operations on the packet store.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/container/flat_set.hpp>

#include "awn_aodv/aodv/message.hpp"
#include "awn_aodv/aodv/routing_table.hpp"

namespace aodv {

enum class ReqFlag : std::uint8_t { req, noreq };

// Data queued for one destination, plus whether a route request is due.
struct Queue {
  ReqFlag flag = ReqFlag::req;
  std::vector<Datum> data;
  bool operator==(const Queue&) const = default;
};

using Store = awn::FlatMap<Addr, Queue>;
using RreqKey = std::pair<Addr, std::uint32_t>;
using RreqSet = boost::container::flat_set<RreqKey>;
using Dests = awn::FlatMap<Addr, Sqn>;

struct AodvData {
  // globals
  Addr ip = 0;
  Sqn sn = 1;
  RreqSet rreqs;
  Store store;
  RoutingTable rt;

  // locals
  Message msg = msg::Newpkt{};
  Datum data = 0;
  Dests dests;
  AddrSet pre;
  std::uint32_t rreqid = 0;
  Addr dip = 0;
  Addr oip = 0;
  Addr sip = 0;
  Sqn dsn = 0;
  Sqn osn = 0;
  Dsk dsk = Dsk::unk;
  std::uint32_t hops = 0;
  // Only read by the request-forwarding model.
  bool handled = false;

  bool operator==(const AodvData&) const = default;
};

AodvData clear_locals(const AodvData& xi);
AodvData aodv_init(Addr ip);

// Store operations.
Store add(Datum d, Addr dip, const Store& s);
Store drop(Addr dip, const Store& s);
Store set_rrf(const Store& s, const Dests& dests);
Store unset_rrf(const Store& s, Addr dip);
AddrSet qD(const Store& s);
std::optional<Datum> queue_head(const Store& s, Addr dip);
std::optional<ReqFlag> req_flag(const Store& s, Addr dip);

// Next free request id for requests originated at ip.
std::uint32_t nrreqid(const RreqSet& rreqs, Addr ip);

}  // namespace aodv
