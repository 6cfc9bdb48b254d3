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

// AODV networks: the per-node process (protocol fed by a message queue),
// closed networks over a NetTree, and the global data view σ.

#pragma once

#include <functional>
#include <map>
#include <utility>

#include "awn_aodv/aodv/model.hpp"
#include "awn_aodv/awn/environment.hpp"
#include "awn_aodv/awn/network.hpp"

namespace aodv {

using MsgQueue = awn::MsgQueue<Message>;
using NodeProc = std::pair<ProcState, MsgQueue>;
using NodeState = awn::NodeState<NodeProc>;
using NetState = awn::NetState<NodeProc>;
using NetAction = awn::NetAction<Message>;
using NetAutomaton = awn::NetAutomaton<NetState, Message>;
using SysState = awn::EnvState<NetState>;
using System = awn::Automaton<SysState, NetAction>;

inline std::string to_string(const NetAction& a) {
  return awn::to_string<Message>(a);
}

// σ: addresses to data records.
using GlobalState = std::map<Addr, AodvData>;

awn::SeqAutomaton<ProcState, Message> paodv(Addr ip, ModelConfig cfg = {});
awn::SeqAutomaton<MsgQueue, Message> qmsg();
// paodv ip << qmsg
awn::SeqAutomaton<NodeProc, Message> node_process(Addr ip,
                                                  ModelConfig cfg = {});

NetAutomaton aodv_pnet(const awn::NetTree& t, ModelConfig cfg = {});
NetAutomaton aodv_network(const awn::NetTree& t, ModelConfig cfg = {});
System aodv_system(const awn::NetTree& t, const awn::EnvMenu& menu,
                   ModelConfig cfg = {});

// Projects each node's data record; control terms and queues are masked.
GlobalState netmap(const NetState& s);

// Fills in the initial record for every address in `addrs` missing from σ.
GlobalState totalize(GlobalState sigma, const AddrSet& addrs);

// Addresses of the nodes whose state differs between a and b.
std::vector<Addr> changed_nodes(const NetState& a, const NetState& b);

std::function<bool(const NetState&)> netglobal(
    std::function<bool(const GlobalState&)> p);

}  // namespace aodv
