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

// Layers one to three: sequential automata, local parallel composition
// and nodes.

#pragma once

#include <algorithm>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "awn_aodv/awn/automaton.hpp"
#include "awn_aodv/awn/seqp.hpp"

namespace awn {

// The automaton of a sequential process: one initial state, steps given by
// the SOS rules over `spec`.
template <class Data, class Msg>
SeqAutomaton<ProcState<Data, Msg>, Msg> seqp_automaton(
    std::shared_ptr<const ProcessSpec<Data, Msg>> spec, Data init_data,
    const std::string& start) {
  SeqAutomaton<ProcState<Data, Msg>, Msg> a;
  a.init.push_back({std::move(init_data), &spec->body(start)});
  a.steps = [spec](const ProcState<Data, Msg>& s, std::span<const Msg> menu) {
    return seqp_steps(*spec, s, menu);
  };
  return a;
}

// A FIFO message buffer that is always willing to receive.
template <class Msg>
using MsgQueue = std::vector<Msg>;

template <class Msg>
SeqAutomaton<MsgQueue<Msg>, Msg> message_queue() {
  SeqAutomaton<MsgQueue<Msg>, Msg> a;
  a.init.emplace_back();
  a.steps = [](const MsgQueue<Msg>& q, std::span<const Msg> menu) {
    std::vector<Transition<SeqAction<Msg>, MsgQueue<Msg>>> out;
    if (!q.empty()) {
      out.push_back({act::Send<Msg>{q.front()},
                     MsgQueue<Msg>(q.begin() + 1, q.end())});
    }
    for (const Msg& m : menu) {
      MsgQueue<Msg> next = q;
      next.push_back(m);
      out.push_back({act::Receive<Msg>{m}, std::move(next)});
    }
    return out;
  };
  return a;
}

// Local parallel composition `left << right`: left's receives synchronise
// with right's sends as internal steps; all other actions of left except
// receive, and all actions of right except send, interleave.
template <class S1, class S2, class Msg>
SeqAutomaton<std::pair<S1, S2>, Msg> par_steps(SeqAutomaton<S1, Msg> left,
                                               SeqAutomaton<S2, Msg> right) {
  using Pair = std::pair<S1, S2>;
  SeqAutomaton<Pair, Msg> a;
  for (const S1& l : left.init) {
    for (const S2& r : right.init) a.init.push_back({l, r});
  }
  a.steps = [left = std::move(left), right = std::move(right)](
                const Pair& s, std::span<const Msg> menu) {
    std::vector<Transition<SeqAction<Msg>, Pair>> out;
    auto rsteps = right.steps(s.second, menu);
    std::vector<Msg> sends;
    for (const auto& t : rsteps) {
      if (const auto* snd = std::get_if<act::Send<Msg>>(&t.action)) {
        if (std::find(sends.begin(), sends.end(), snd->msg) == sends.end()) {
          sends.push_back(snd->msg);
        }
      }
    }
    auto lsteps = left.steps(s.first, sends);
    for (auto& t : lsteps) {
      if (const auto* rcv = std::get_if<act::Receive<Msg>>(&t.action)) {
        for (const auto& u : rsteps) {
          const auto* snd = std::get_if<act::Send<Msg>>(&u.action);
          if (snd != nullptr && snd->msg == rcv->msg) {
            out.push_back({act::Tau{}, {t.target, u.target}});
          }
        }
      } else {
        out.push_back({std::move(t.action), {std::move(t.target), s.second}});
      }
    }
    for (auto& u : rsteps) {
      if (!std::holds_alternative<act::Send<Msg>>(u.action)) {
        out.push_back({std::move(u.action), {s.first, std::move(u.target)}});
      }
    }
    return out;
  };
  return a;
}

// <ip : P : R>
template <class S>
struct NodeState {
  Addr ip = 0;
  S proc;
  AddrSet neighbours;

  bool operator==(const NodeState&) const = default;
};

namespace detail {

inline AddrSet relink(Addr i, const AddrSet& r, const LinkOffer& l) {
  AddrSet out = r;
  Addr other;
  if (l.a == i && l.b != i) {
    other = l.b;
  } else if (l.b == i && l.a != i) {
    other = l.a;
  } else {
    return out;
  }
  if (l.connect) {
    out.insert(other);
  } else {
    out.erase(other);
  }
  return out;
}

}  // namespace detail

// Layer three: a process running at address `ip` with initial neighbours
// `r0`. Outgoing messages become casts to the current neighbours;
// incoming messages become arrivals; the neighbour set changes only on
// connect/disconnect actions that involve `ip`.
template <class S, class Msg>
NetAutomaton<NodeState<S>, Msg> node_steps(Addr ip, SeqAutomaton<S, Msg> pq,
                                           AddrSet r0) {
  using NS = NodeState<S>;
  using Traits = MessageTraits<Msg>;
  NetAutomaton<NS, Msg> a;
  a.addresses = {ip};
  for (const S& s : pq.init) a.init.push_back({ip, s, r0});

  a.steps = [ip, pq](const NS& ns, const EnvOffer& env) {
    std::vector<Transition<NetAction<Msg>, NS>> out;
    std::vector<Msg> menu;
    for (const NewpktOffer& o : env.newpkts) {
      if (o.node == ip) menu.push_back(Traits::newpkt(o.data, o.dip));
    }
    const AddrSet& r = ns.neighbours;
    for (auto& t : pq.steps(ns.proc, menu)) {
      NS next{ip, std::move(t.target), r};
      std::visit(
          [&](auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, act::Broadcast<Msg>>) {
              out.push_back({act::Cast<Msg>{r, std::move(x.msg)}, std::move(next)});
            } else if constexpr (std::is_same_v<T, act::Groupcast<Msg>>) {
              out.push_back({act::Cast<Msg>{set_intersection(r, x.dests),
                                            std::move(x.msg)},
                             std::move(next)});
            } else if constexpr (std::is_same_v<T, act::Unicast<Msg>>) {
              if (r.contains(x.dest)) {
                out.push_back(
                    {act::Cast<Msg>{AddrSet{x.dest}, std::move(x.msg)},
                     std::move(next)});
              }
            } else if constexpr (std::is_same_v<T, act::UnicastFail>) {
              if (!r.contains(x.dest)) out.push_back({act::Tau{}, std::move(next)});
            } else if constexpr (std::is_same_v<T, act::Receive<Msg>>) {
              if (auto np = Traits::as_newpkt(x.msg)) {
                out.push_back(
                    {act::Newpkt{ip, np->first, np->second}, std::move(next)});
              }
            } else if constexpr (std::is_same_v<T, act::Deliver>) {
              out.push_back({act::DeliverAt{ip, x.data}, std::move(next)});
            } else if constexpr (std::is_same_v<T, act::Tau>) {
              out.push_back({act::Tau{}, std::move(next)});
            }
            // A bare send has no meaning at node level; the local
            // composition must have consumed it.
          },
          t.action);
    }
    for (const LinkOffer& l : env.links) {
      NetAction<Msg> action = l.connect ? NetAction<Msg>{act::Connect{l.a, l.b}}
                                        : NetAction<Msg>{act::Disconnect{l.a, l.b}};
      out.push_back({std::move(action), {ip, ns.proc, detail::relink(ip, r, l)}});
    }
    return out;
  };

  a.arrive = [ip, pq](const NS& ns, const Msg& m, const AddrSet* range) {
    std::vector<Transition<NetAction<Msg>, NS>> out;
    bool may_hear = range == nullptr || range->contains(ip);
    bool may_miss = range == nullptr || !range->contains(ip);
    if (may_hear && !Traits::as_newpkt(m)) {
      for (auto& t : pq.steps(ns.proc, std::span<const Msg>(&m, 1))) {
        const auto* rcv = std::get_if<act::Receive<Msg>>(&t.action);
        if (rcv != nullptr && rcv->msg == m) {
          out.push_back({act::Arrive<Msg>{AddrSet{ip}, AddrSet{}, m},
                         {ip, std::move(t.target), ns.neighbours}});
        }
      }
    }
    if (may_miss) {
      out.push_back({act::Arrive<Msg>{AddrSet{}, AddrSet{ip}, m}, ns});
    }
    return out;
  };
  return a;
}

}  // namespace awn
