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

#include "awn_aodv/aodv/routing_table.hpp"

namespace aodv {

std::string to_string(Dsk k) { return k == Dsk::kno ? "kno" : "unk"; }

std::string to_string(Flag f) { return f == Flag::val ? "val" : "inv"; }

std::string to_string(const RouteEntry& r) {
  std::string out = "(" + std::to_string(r.dsn) + "," + to_string(r.dsk) +
                    "," + to_string(r.flag) + "," + std::to_string(r.hops) +
                    "," + std::to_string(r.nhip);
  if (r.pre) out += "," + awn::to_string(*r.pre);
  return out + ")";
}

namespace {

const RouteEntry* find(const RoutingTable& rt, Addr dip) {
  auto it = rt.find(dip);
  return it == rt.end() ? nullptr : &it->second;
}

void merge_pre(RouteEntry& into, const std::optional<AddrSet>& extra) {
  if (into.pre && extra) into.pre->insert(extra->begin(), extra->end());
}

}  // namespace

Sqn sqn(const RoutingTable& rt, Addr dip) {
  const RouteEntry* r = find(rt, dip);
  return r ? r->dsn : 0;
}

std::optional<Dsk> sqnf(const RoutingTable& rt, Addr dip) {
  const RouteEntry* r = find(rt, dip);
  if (!r) return std::nullopt;
  return r->dsk;
}

std::optional<Flag> flag(const RoutingTable& rt, Addr dip) {
  const RouteEntry* r = find(rt, dip);
  if (!r) return std::nullopt;
  return r->flag;
}

std::optional<std::uint32_t> dhops(const RoutingTable& rt, Addr dip) {
  const RouteEntry* r = find(rt, dip);
  if (!r) return std::nullopt;
  return r->hops;
}

std::optional<Addr> nhop(const RoutingTable& rt, Addr dip) {
  const RouteEntry* r = find(rt, dip);
  if (!r) return std::nullopt;
  return r->nhip;
}

AddrSet precs(const RoutingTable& rt, Addr dip) {
  const RouteEntry* r = find(rt, dip);
  if (!r || !r->pre) return {};
  return *r->pre;
}

AddrSet kD(const RoutingTable& rt) {
  AddrSet out;
  for (const auto& [d, _] : rt) out.insert(out.end(), d);
  return out;
}

AddrSet vD(const RoutingTable& rt) {
  AddrSet out;
  for (const auto& [d, r] : rt) {
    if (r.flag == Flag::val) out.insert(out.end(), d);
  }
  return out;
}

AddrSet iD(const RoutingTable& rt) {
  AddrSet out;
  for (const auto& [d, r] : rt) {
    if (r.flag == Flag::inv) out.insert(out.end(), d);
  }
  return out;
}

bool is_valid(const RoutingTable& rt, Addr dip) {
  const RouteEntry* r = find(rt, dip);
  return r && r->flag == Flag::val;
}

Sqn nsqn(const RoutingTable& rt, Addr dip) {
  const RouteEntry* r = find(rt, dip);
  if (!r) return 0;
  if (r->flag == Flag::val || r->dsn == 0) return r->dsn;
  return r->dsn - 1;
}

bool strictly_fresher(const RoutingTable& rt1, const RoutingTable& rt2,
                      Addr dip) {
  const RouteEntry* a = find(rt1, dip);
  const RouteEntry* b = find(rt2, dip);
  if (!a || !b) return false;
  Sqn n1 = nsqn(rt1, dip);
  Sqn n2 = nsqn(rt2, dip);
  return n1 < n2 || (n1 == n2 && a->hops > b->hops);
}

Sqn inc(Sqn s) { return s == 0 ? 0 : s + 1; }

RoutingTable update(const RoutingTable& rt, Addr dip, const RouteEntry& r,
                    Mutation mutation) {
  RoutingTable out = rt;
  auto it = out.find(dip);
  if (it == out.end()) {
    out.emplace(dip, r);
    return out;
  }
  const RouteEntry old = it->second;
  bool newer = mutation == Mutation::stale_update ? old.dsn != r.dsn
                                                  : old.dsn < r.dsn;
  if (newer || (old.dsn == r.dsn &&
                (old.hops > r.hops || old.flag == Flag::inv))) {
    RouteEntry next = r;
    merge_pre(next, old.pre);
    it->second = std::move(next);
  } else if (r.dsk == Dsk::unk) {
    RouteEntry next = r;
    next.dsn = old.dsn;
    next.dsk = old.dsk;
    merge_pre(next, old.pre);
    it->second = std::move(next);
  } else {
    merge_pre(it->second, r.pre);
  }
  return out;
}

RoutingTable invalidate(const RoutingTable& rt,
                        const awn::FlatMap<Addr, Sqn>& dests) {
  RoutingTable out = rt;
  for (const auto& [d, s] : dests) {
    auto it = out.find(d);
    if (it == out.end()) continue;
    it->second.dsn = s;
    it->second.flag = Flag::inv;
  }
  return out;
}

RoutingTable addpre(const RoutingTable& rt, Addr dip, const AddrSet& npre) {
  auto src = rt.find(dip);
  if (src == rt.end()) throw UndefinedRoute(dip);
  RoutingTable out = rt;
  RouteEntry& e = out.find(dip)->second;
  if (e.pre) e.pre->insert(npre.begin(), npre.end());
  return out;
}

}  // namespace aodv
