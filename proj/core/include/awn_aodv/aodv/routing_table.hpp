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

// Routing-table entries and the table algebra: projections, validity
// domains, net sequence numbers, the route-quality order and the update,
// invalidate and addpre operations.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "awn_aodv/awn/common.hpp"

namespace aodv {

using awn::Addr;
using awn::AddrSet;
using awn::Datum;
using Sqn = std::uint32_t;

enum class Dsk : std::uint8_t { kno, unk };
enum class Flag : std::uint8_t { val, inv };

// Deliberate defects for checker-sensitivity experiments.
enum class Mutation : std::uint8_t {
  none,
  // update also overwrites a route with information older than it holds.
  stale_update,
};

struct RouteEntry {
  Sqn dsn = 0;
  Dsk dsk = Dsk::unk;
  Flag flag = Flag::val;
  std::uint32_t hops = 0;
  Addr nhip = 0;
  // Absent in models without precursor maintenance.
  std::optional<AddrSet> pre = AddrSet{};

  bool operator==(const RouteEntry&) const = default;
};

using RoutingTable = awn::FlatMap<Addr, RouteEntry>;

// Raised when a partial table operation is applied outside its domain.
class UndefinedRoute : public std::out_of_range {
 public:
  explicit UndefinedRoute(Addr dip)
      : std::out_of_range("no route entry for " + std::to_string(dip)) {}
};

std::string to_string(Dsk k);
std::string to_string(Flag f);
std::string to_string(const RouteEntry& r);

// Projections. sqn is totalised with 0; the others are undefined for
// unknown destinations.
Sqn sqn(const RoutingTable& rt, Addr dip);
std::optional<Dsk> sqnf(const RoutingTable& rt, Addr dip);
std::optional<Flag> flag(const RoutingTable& rt, Addr dip);
std::optional<std::uint32_t> dhops(const RoutingTable& rt, Addr dip);
std::optional<Addr> nhop(const RoutingTable& rt, Addr dip);
AddrSet precs(const RoutingTable& rt, Addr dip);

AddrSet kD(const RoutingTable& rt);
AddrSet vD(const RoutingTable& rt);
AddrSet iD(const RoutingTable& rt);
bool is_valid(const RoutingTable& rt, Addr dip);

// Net sequence number: an invalid route counts one less than its dsn.
Sqn nsqn(const RoutingTable& rt, Addr dip);

// rt1 ⊏_dip rt2: the route to dip in rt2 is strictly better. Requires dip
// to be known in both tables; returns false otherwise.
bool strictly_fresher(const RoutingTable& rt1, const RoutingTable& rt2,
                      Addr dip);

// Sequence-number increment used when invalidating a broken route: an
// unknown (zero) number stays zero.
Sqn inc(Sqn s);

RoutingTable update(const RoutingTable& rt, Addr dip, const RouteEntry& r,
                    Mutation mutation = Mutation::none);

RoutingTable invalidate(const RoutingTable& rt,
                        const awn::FlatMap<Addr, Sqn>& dests);

// Throws UndefinedRoute when dip is unknown.
RoutingTable addpre(const RoutingTable& rt, Addr dip, const AddrSet& npre);

}  // namespace aodv
