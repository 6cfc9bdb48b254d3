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

#include "awn_aodv/aodv/instance.hpp"

namespace aodv {

awn::SeqAutomaton<ProcState, Message> paodv(Addr ip, ModelConfig cfg) {
  return awn::seqp_automaton(gamma_aodv(cfg), aodv_init(ip), kPAodv);
}

awn::SeqAutomaton<MsgQueue, Message> qmsg() {
  return awn::message_queue<Message>();
}

awn::SeqAutomaton<NodeProc, Message> node_process(Addr ip, ModelConfig cfg) {
  return awn::par_steps(paodv(ip, cfg), qmsg());
}

NetAutomaton aodv_pnet(const awn::NetTree& t, ModelConfig cfg) {
  std::function<awn::SeqAutomaton<NodeProc, Message>(Addr)> np =
      [cfg](Addr ip) { return node_process(ip, cfg); };
  return awn::pnet<NodeProc, Message>(np, t);
}

NetAutomaton aodv_network(const awn::NetTree& t, ModelConfig cfg) {
  return awn::closed(aodv_pnet(t, cfg));
}

System aodv_system(const awn::NetTree& t, const awn::EnvMenu& menu,
                   ModelConfig cfg) {
  return awn::with_environment(aodv_network(t, cfg), menu);
}

GlobalState netmap(const NetState& s) {
  GlobalState out;
  awn::for_each_node(s, [&](const NodeState& n) {
    out.emplace(n.ip, n.proc.first.data);
  });
  return out;
}

GlobalState totalize(GlobalState sigma, const AddrSet& addrs) {
  for (Addr a : addrs) {
    if (!sigma.contains(a)) sigma.emplace(a, aodv_init(a));
  }
  return sigma;
}

std::function<bool(const NetState&)> netglobal(
    std::function<bool(const GlobalState&)> p) {
  return [p = std::move(p)](const NetState& s) { return p(netmap(s)); };
}

std::vector<Addr> changed_nodes(const NetState& a, const NetState& b) {
  std::vector<Addr> out;
  awn::for_each_changed_node(a, b, [&](const NodeState& x, const NodeState& y) {
    if (!(x == y)) out.push_back(x.ip);
  });
  return out;
}

}  // namespace aodv
