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

// Exhaustive checks of the routing-table algebra over small domains:
// addresses 1..3, sequence numbers 0..3, hop counts 0..3.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "awn_aodv/aodv/data.hpp"

namespace algebra {

using namespace aodv;

inline constexpr Addr kMaxAddr = 3;
inline constexpr Sqn kMaxSqn = 3;
inline constexpr std::uint32_t kMaxHops = 3;

// Net sequence numbers written out by hand, indexed [flag][dsn].
inline constexpr std::array<std::array<Sqn, 4>, 2> kNsqnTable{{
    {0, 1, 2, 3},  // val
    {0, 0, 1, 2},  // inv
}};

// Quality rank: routes compare by net sequence number, then by fewer hops.
// Larger rank is better.
inline int rank(const RouteEntry& e) {
  Sqn n = kNsqnTable[e.flag == Flag::val ? 0 : 1][e.dsn];
  return static_cast<int>(n) * 16 + (15 - static_cast<int>(e.hops));
}

struct Result {
  std::uint64_t cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void fail(std::string s) {
    if (failures.size() < 10) failures.push_back(std::move(s));
  }
};

// Every entry over the small domain, optionally with a precursor set.
inline std::vector<RouteEntry> all_entries(bool vary_pre) {
  std::vector<RouteEntry> out;
  for (Sqn dsn = 0; dsn <= kMaxSqn; ++dsn)
    for (Dsk k : {Dsk::kno, Dsk::unk})
      for (Flag f : {Flag::val, Flag::inv})
        for (std::uint32_t h = 0; h <= kMaxHops; ++h)
          for (Addr nh = 1; nh <= kMaxAddr; ++nh) {
            if (!vary_pre) {
              out.push_back({dsn, k, f, h, nh, AddrSet{}});
              continue;
            }
            for (unsigned mask = 0; mask < (1u << kMaxAddr); ++mask) {
              AddrSet pre;
              for (Addr a = 1; a <= kMaxAddr; ++a)
                if (mask & (1u << (a - 1))) pre.insert(a);
              out.push_back({dsn, k, f, h, nh, pre});
            }
          }
  return out;
}

inline RoutingTable table_with(Addr dip, const std::optional<RouteEntry>& e) {
  RoutingTable rt;
  if (e) rt.emplace(dip, *e);
  return rt;
}

// nsqn and the quality order agree with the hand table and the rank.
inline Result definitions_match_oracle() {
  Result r;
  auto es = all_entries(false);
  for (const auto& a : es) {
    RoutingTable ta = table_with(1, a);
    ++r.cases;
    if (nsqn(ta, 1) != kNsqnTable[a.flag == Flag::val ? 0 : 1][a.dsn]) {
      r.fail("nsqn of " + to_string(a));
    }
    for (const auto& b : es) {
      ++r.cases;
      bool expect = rank(a) < rank(b);
      if (strictly_fresher(ta, table_with(1, b), 1) != expect) {
        r.fail("order " + to_string(a) + " vs " + to_string(b));
      }
    }
  }
  if (nsqn(RoutingTable{}, 1) != 0) r.fail("nsqn of an unknown destination");
  if (strictly_fresher(RoutingTable{}, table_with(1, es[0]), 1)) {
    r.fail("order defined on an unknown destination");
  }
  return r;
}

// Irreflexive, asymmetric and transitive on entries for one destination.
inline Result order_is_strict_partial_order() {
  Result r;
  auto es = all_entries(false);
  std::vector<RoutingTable> ts;
  for (const auto& e : es) ts.push_back(table_with(2, e));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    ++r.cases;
    if (strictly_fresher(ts[i], ts[i], 2)) r.fail("reflexive at " + to_string(es[i]));
    for (std::size_t j = 0; j < ts.size(); ++j) {
      if (!strictly_fresher(ts[i], ts[j], 2)) continue;
      ++r.cases;
      if (strictly_fresher(ts[j], ts[i], 2)) {
        r.fail("symmetric pair " + to_string(es[i]) + " " + to_string(es[j]));
      }
      for (std::size_t k = 0; k < ts.size(); ++k) {
        if (!strictly_fresher(ts[j], ts[k], 2)) continue;
        ++r.cases;
        if (!strictly_fresher(ts[i], ts[k], 2)) {
          r.fail("not transitive through " + to_string(es[j]));
        }
      }
    }
  }
  return r;
}

// For every table over destinations {1, 2} (entry for 1 optional, a fixed
// entry for 2) and every valid route r to 1: update never lowers an nsqn
// and never forgets a destination.
inline Result update_monotone(Mutation m = Mutation::none) {
  Result r;
  auto es = all_entries(true);
  auto routes = all_entries(false);
  const RouteEntry other{2, Dsk::kno, Flag::inv, 1, 3, AddrSet{}};
  for (int present = 0; present <= 1; ++present) {
    for (std::size_t i = 0; i < (present ? es.size() : 1); ++i) {
      RoutingTable rt;
      if (present) rt.emplace(1, es[i]);
      rt.emplace(2, other);
      for (RouteEntry route : routes) {
        if (route.flag != Flag::val) continue;
        for (unsigned mask = 0; mask < 2; ++mask) {
          route.pre = mask ? AddrSet{3} : AddrSet{};
          ++r.cases;
          RoutingTable out = update(rt, 1, route, m);
          for (Addr d : kD(rt)) {
            if (!out.contains(d)) r.fail("kD shrank");
            if (nsqn(out, d) < nsqn(rt, d)) {
              r.fail("nsqn fell for " + std::to_string(d) + ": " +
                     (present ? to_string(es[i]) : std::string("-")) + " with " +
                     to_string(route));
            }
          }
        }
      }
    }
  }
  return r;
}

// invalidate leaves the known destinations alone.
inline Result invalidate_preserves_kd() {
  Result r;
  auto es = all_entries(false);
  for (const auto& a : es) {
    for (int with_b = 0; with_b <= 1; ++with_b) {
      RoutingTable rt = table_with(1, a);
      if (with_b) rt.emplace(2, RouteEntry{1, Dsk::kno, Flag::val, 2, 3, AddrSet{}});
      for (unsigned mask = 0; mask < (1u << kMaxAddr); ++mask) {
        for (Sqn s = 0; s <= kMaxSqn; ++s) {
          Dests dests;
          for (Addr d = 1; d <= kMaxAddr; ++d)
            if (mask & (1u << (d - 1))) dests.emplace(d, s);
          ++r.cases;
          if (kD(invalidate(rt, dests)) != kD(rt)) r.fail("kD changed for " + to_string(a));
        }
      }
    }
  }
  return r;
}

}  // namespace algebra
