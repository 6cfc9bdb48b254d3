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


#include <gtest/gtest.h>

#include "algebra_checks.hpp"
#include "awn_aodv/aodv/routing_table.hpp"

namespace aodv {
namespace {

constexpr Addr A = 1, B = 2, C = 3, D = 4;

RouteEntry entry(Sqn dsn, Dsk k, Flag f, std::uint32_t hops, Addr nh, AddrSet pre = {}) {
  return {dsn, k, f, hops, nh, pre};
}

TEST(Projections, UnknownDestination) {
  RoutingTable rt;
  EXPECT_EQ(sqn(rt, D), 0u);
  EXPECT_FALSE(sqnf(rt, D));
  EXPECT_FALSE(flag(rt, D));
  EXPECT_FALSE(dhops(rt, D));
  EXPECT_FALSE(nhop(rt, D));
  EXPECT_TRUE(precs(rt, D).empty());
  EXPECT_TRUE(kD(rt).empty());
}

TEST(Projections, ReadFields) {
  RoutingTable rt{{C, entry(1, Dsk::kno, Flag::val, 2, B, {A})}};
  EXPECT_EQ(sqn(rt, C), 1u);
  EXPECT_EQ(sqnf(rt, C), Dsk::kno);
  EXPECT_EQ(flag(rt, C), Flag::val);
  EXPECT_EQ(dhops(rt, C), 2u);
  EXPECT_EQ(nhop(rt, C), B);
  EXPECT_EQ(precs(rt, C), AddrSet{A});
}

TEST(Domains, InvalidEntryIsKnownButNotValid) {
  RoutingTable rt{{A, entry(2, Dsk::kno, Flag::val, 1, A)},
                  {C, entry(3, Dsk::kno, Flag::inv, 2, A)}};
  EXPECT_EQ(kD(rt), (AddrSet{A, C}));
  EXPECT_EQ(vD(rt), AddrSet{A});
  EXPECT_EQ(iD(rt), AddrSet{C});
  EXPECT_TRUE(is_valid(rt, A));
  EXPECT_FALSE(is_valid(rt, C));
}

TEST(Nsqn, Cases) {
  EXPECT_EQ(nsqn({{A, entry(2, Dsk::kno, Flag::val, 1, A)}}, A), 2u);
  EXPECT_EQ(nsqn({{A, entry(2, Dsk::kno, Flag::inv, 1, A)}}, A), 1u);
  EXPECT_EQ(nsqn({{A, entry(0, Dsk::unk, Flag::inv, 1, A)}}, A), 0u);
}

TEST(Fresher, Cases) {
  RoutingTable n1{{D, entry(1, Dsk::kno, Flag::val, 1, D)}};
  RoutingTable n2{{D, entry(2, Dsk::kno, Flag::val, 1, D)}};
  EXPECT_TRUE(strictly_fresher(n1, n2, D));
  EXPECT_FALSE(strictly_fresher(n2, n1, D));
  RoutingTable h3{{D, entry(2, Dsk::kno, Flag::val, 3, B)}};
  RoutingTable h2{{D, entry(2, Dsk::kno, Flag::val, 2, B)}};
  EXPECT_TRUE(strictly_fresher(h3, h2, D));
  EXPECT_FALSE(strictly_fresher(h2, h2, D));
  EXPECT_FALSE(strictly_fresher(RoutingTable{}, h2, D));
}

TEST(Inc, ZeroStaysZero) {
  EXPECT_EQ(inc(0), 0u);
  EXPECT_EQ(inc(4), 5u);
}

TEST(Update, InsertsUnknownDestination) {
  auto r = entry(2, Dsk::kno, Flag::val, 1, A);
  RoutingTable out = update({}, A, r);
  EXPECT_EQ(out, (RoutingTable{{A, r}}));
}

TEST(Update, OlderInformationLeavesTableAlone) {
  RoutingTable rt{{A, entry(2, Dsk::kno, Flag::val, 1, A)}};
  EXPECT_EQ(update(rt, A, entry(1, Dsk::kno, Flag::val, 1, D)), rt);
}

TEST(Update, UnknownSequenceNumberKeepsStoredOne) {
  RoutingTable rt{{A, entry(2, Dsk::kno, Flag::val, 1, B, {C})}};
  RoutingTable out = update(rt, A, entry(0, Dsk::unk, Flag::val, 1, A));
  EXPECT_EQ(out.at(A), entry(2, Dsk::kno, Flag::val, 1, A, {C}));
}

TEST(Update, ShorterRouteWithSameSequenceNumberReplaces) {
  RoutingTable rt{{A, entry(2, Dsk::kno, Flag::val, 2, B)}};
  RoutingTable out = update(rt, A, entry(2, Dsk::kno, Flag::val, 1, D));
  EXPECT_EQ(out.at(A), entry(2, Dsk::kno, Flag::val, 1, D));
}

TEST(Update, NewerRouteReplacesAndKeepsPrecursors) {
  RoutingTable rt{{A, entry(2, Dsk::kno, Flag::val, 1, B, {C})}};
  RoutingTable out = update(rt, A, entry(3, Dsk::kno, Flag::val, 4, D, {B}));
  EXPECT_EQ(out.at(A), entry(3, Dsk::kno, Flag::val, 4, D, {B, C}));
}

TEST(Update, InvalidRouteRevivedBySameSequenceNumber) {
  RoutingTable rt{{A, entry(2, Dsk::kno, Flag::inv, 1, B)}};
  RoutingTable out = update(rt, A, entry(2, Dsk::kno, Flag::val, 3, D));
  EXPECT_EQ(out.at(A), entry(2, Dsk::kno, Flag::val, 3, D));
}

TEST(Update, OtherDestinationsUntouched) {
  RoutingTable rt{{B, entry(5, Dsk::kno, Flag::inv, 2, C)}};
  RoutingTable out = update(rt, A, entry(1, Dsk::kno, Flag::val, 1, A));
  EXPECT_EQ(out.at(B), rt.at(B));
}

// The five cases, decided independently from the entry fields.
RouteEntry expected_update(const RouteEntry& old, const RouteEntry& r) {
  AddrSet pre = *old.pre;
  pre.insert(r.pre->begin(), r.pre->end());
  if (r.dsn > old.dsn) return {r.dsn, r.dsk, r.flag, r.hops, r.nhip, pre};
  if (r.dsn == old.dsn && (old.hops > r.hops || old.flag == Flag::inv)) {
    return {r.dsn, r.dsk, r.flag, r.hops, r.nhip, pre};
  }
  if (r.dsk == Dsk::unk) return {old.dsn, old.dsk, r.flag, r.hops, r.nhip, pre};
  return {old.dsn, old.dsk, old.flag, old.hops, old.nhip, pre};
}

TEST(Update, MatchesCaseOracleExhaustively) {
  auto olds = algebra::all_entries(true);
  auto routes = algebra::all_entries(false);
  for (const auto& old : olds) {
    for (auto r : routes) {
      if (r.flag != Flag::val) continue;
      r.pre = AddrSet{2};
      RoutingTable out = update({{1, old}}, 1, r);
      ASSERT_EQ(out.at(1), expected_update(old, r)) << to_string(old) << " with " << to_string(r);
    }
  }
}

TEST(Update, StaleMutationAcceptsOlderInformation) {
  RoutingTable rt{{A, entry(2, Dsk::kno, Flag::val, 1, A)}};
  RoutingTable out = update(rt, A, entry(1, Dsk::kno, Flag::val, 1, D), Mutation::stale_update);
  EXPECT_EQ(out.at(A).dsn, 1u);
  EXPECT_EQ(out.at(A).nhip, D);
}

TEST(Invalidate, EmptyDestsIsIdentity) {
  RoutingTable rt{{A, entry(2, Dsk::kno, Flag::val, 1, A)}};
  EXPECT_EQ(invalidate(rt, {}), rt);
}

TEST(Invalidate, SetsSequenceNumberAndFlag) {
  RoutingTable rt{{A, entry(2, Dsk::kno, Flag::val, 1, A)}};
  RoutingTable out = invalidate(rt, {{A, 3}});
  EXPECT_EQ(out.at(A), entry(3, Dsk::kno, Flag::inv, 1, A));
}

TEST(Invalidate, IgnoresUnknownDestinations) {
  RoutingTable rt{{A, entry(2, Dsk::kno, Flag::val, 1, A)}};
  EXPECT_EQ(invalidate(rt, {{D, 4}}), rt);
}

TEST(Addpre, AddsToExistingEntry) {
  RoutingTable rt{{C, entry(1, Dsk::kno, Flag::val, 1, C)}};
  EXPECT_EQ(addpre(rt, C, {}), rt);
  EXPECT_EQ(addpre(rt, C, {A}).at(C).pre, AddrSet{A});
}

TEST(Addpre, MissingEntryThrows) {
  EXPECT_THROW(addpre({}, C, {A}), UndefinedRoute);
}

TEST(Addpre, NoPrecursorFieldIsLeftAbsent) {
  RouteEntry e = entry(1, Dsk::kno, Flag::val, 1, C);
  e.pre.reset();
  RoutingTable out = addpre({{C, e}}, C, {A});
  EXPECT_FALSE(out.at(C).pre);
}

TEST(ToString, Entry) {
  EXPECT_EQ(to_string(entry(2, Dsk::kno, Flag::val, 1, 1, {3})), "(2,kno,val,1,1,{3})");
}

TEST(AlgebraProperties, DefinitionsMatchTableOracle) {
  auto r = algebra::definitions_match_oracle();
  EXPECT_TRUE(r.ok()) << r.failures.front();
}

TEST(AlgebraProperties, QualityOrderIsStrictPartialOrder) {
  auto r = algebra::order_is_strict_partial_order();
  EXPECT_TRUE(r.ok()) << r.failures.front();
}

TEST(AlgebraProperties, UpdateIsMonotone) {
  auto r = algebra::update_monotone();
  EXPECT_TRUE(r.ok()) << r.failures.front();
}

TEST(AlgebraProperties, MutantUpdateIsNotMonotone) {
  EXPECT_FALSE(algebra::update_monotone(Mutation::stale_update).ok());
}

TEST(AlgebraProperties, InvalidatePreservesKnownDestinations) {
  auto r = algebra::invalidate_preserves_kd();
  EXPECT_TRUE(r.ok()) << r.failures.front();
}

}  // namespace
}  // namespace aodv
