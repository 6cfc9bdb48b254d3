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

#include <random>

#include "awn_aodv/aodv/data.hpp"
#include "awn_aodv/aodv/instance.hpp"
#include "records.hpp"

namespace aodv {
namespace {

using testing::random_record;

TEST(Init, Fields) {
  AodvData xi = aodv_init(7);
  EXPECT_EQ(xi.ip, 7u);
  EXPECT_EQ(xi.sn, 1u);
  EXPECT_TRUE(xi.rt.empty());
  EXPECT_TRUE(xi.rreqs.empty());
  EXPECT_TRUE(xi.store.empty());
}

TEST(ClearLocals, KeepsGlobalsAndPicksForeignSender) {
  std::mt19937 g(11);
  for (int k = 0; k < 500; ++k) {
    AodvData xi = random_record(g);
    AodvData c = clear_locals(xi);
    EXPECT_NE(c.sip, xi.ip);
    EXPECT_EQ(c.ip, xi.ip);
    EXPECT_EQ(c.sn, xi.sn);
    EXPECT_EQ(c.rreqs, xi.rreqs);
    EXPECT_EQ(c.store, xi.store);
    EXPECT_EQ(c.rt, xi.rt);
    EXPECT_EQ(clear_locals(c), c);
  }
}

TEST(Store, AddQueuesAndRequestsRoute) {
  Store s = add(5, 3, {});
  EXPECT_EQ(qD(s), AddrSet{3});
  EXPECT_EQ(req_flag(s, 3), ReqFlag::req);
  s = unset_rrf(add(6, 3, s), 3);
  EXPECT_EQ(queue_head(s, 3), 5u);
  EXPECT_EQ(req_flag(s, 3), ReqFlag::noreq);
  s = drop(3, s);
  EXPECT_EQ(queue_head(s, 3), 6u);
  s = drop(3, s);
  EXPECT_TRUE(qD(s).empty());
  EXPECT_FALSE(queue_head(s, 3));
}

TEST(Store, SetRequestFlagOnlyForQueuedDestinations) {
  Store s = unset_rrf(add(1, 2, {}), 2);
  s = set_rrf(s, Dests{{2, 1}, {4, 1}});
  EXPECT_EQ(req_flag(s, 2), ReqFlag::req);
  EXPECT_FALSE(req_flag(s, 4));
}

TEST(Rreqid, NextFreeForOwnAddress) {
  EXPECT_EQ(nrreqid({}, 1), 1u);
  EXPECT_EQ(nrreqid(RreqSet{{1, 1}, {1, 2}, {3, 7}}, 1), 3u);
}

TEST(Qmsg, EmptyOffersNoSend) {
  auto q = qmsg();
  EXPECT_TRUE(q.steps(q.init.front(), {}).empty());
}

TEST(Qmsg, FifoOrder) {
  auto q = qmsg();
  Message m1 = msg::Newpkt{1, 2}, m2 = msg::Newpkt{3, 4};
  MsgQueue s{m1, m2};
  auto ts = q.steps(s, {});
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(std::get<awn::act::Send<Message>>(ts[0].action).msg, m1);
  EXPECT_EQ(ts[0].target, MsgQueue{m2});
}

TEST(Qmsg, ReceiveAppends) {
  auto q = qmsg();
  Message m1 = msg::Newpkt{1, 2}, m2 = msg::Newpkt{3, 4};
  std::vector<Message> menu{m2};
  for (const auto& t : q.steps(MsgQueue{m1}, menu)) {
    if (std::holds_alternative<awn::act::Receive<Message>>(t.action)) {
      EXPECT_EQ(t.target, (MsgQueue{m1, m2}));
      return;
    }
  }
  FAIL() << "no receive step";
}

TEST(Messages, Arity) {
  EXPECT_EQ(arity(msg::Newpkt{}), 2u);
  EXPECT_EQ(arity(msg::Pkt{}), 3u);
  msg::Rreq r;
  r.rreqid = 1;
  EXPECT_EQ(arity(r), 8u);
  r.rreqid.reset();
  EXPECT_EQ(arity(r), 7u);
  EXPECT_EQ(arity(msg::Rrep{}), 5u);
  EXPECT_EQ(arity(msg::Rerr{}), 2u);
}

TEST(Messages, Sender) {
  EXPECT_FALSE(sender(msg::Newpkt{1, 2}));
  EXPECT_EQ(sender(msg::Pkt{1, 2, 3}), 3u);
  EXPECT_EQ(sender(msg::Rrep{1, 2, 3, 4, 5}), 5u);
}

}  // namespace
}  // namespace aodv
