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

// A finite environment for closed networks: bounded newpkt injections and a
// scripted sequence of topology changes.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "awn_aodv/awn/automaton.hpp"

namespace awn {

struct NewpktBudget {
  Addr node;
  Datum data;
  Addr dip;
  std::uint32_t budget;
  bool operator==(const NewpktBudget&) const = default;
};

// Link changes fire in script order, interleaved arbitrarily with the
// network's own steps.
struct EnvMenu {
  std::vector<NewpktBudget> newpkts;
  std::vector<LinkOffer> link_script;
};

template <class S>
struct EnvState {
  S net;
  std::vector<std::uint32_t> newpkt_left;  // parallel to EnvMenu::newpkts
  std::uint32_t link_pos = 0;

  bool operator==(const EnvState&) const = default;
};

template <class S>
EnvOffer env_offer(const EnvMenu& menu, const EnvState<S>& s) {
  EnvOffer offer;
  for (std::size_t k = 0; k < menu.newpkts.size(); ++k) {
    const NewpktBudget& b = menu.newpkts[k];
    if (s.newpkt_left[k] == 0) continue;
    NewpktOffer o{b.node, b.data, b.dip};
    bool dup = false;
    for (const auto& x : offer.newpkts) dup = dup || x == o;
    if (!dup) offer.newpkts.push_back(o);
  }
  if (s.link_pos < menu.link_script.size()) {
    offer.links.push_back(menu.link_script[s.link_pos]);
  }
  return offer;
}

// Wraps a closed network so that the environment's remaining budget is
// part of the state; the result is an ordinary automaton.
template <class S, class Msg>
Automaton<EnvState<S>, NetAction<Msg>> with_environment(
    NetAutomaton<S, Msg> closed, EnvMenu menu) {
  using ES = EnvState<S>;
  Automaton<ES, NetAction<Msg>> a;
  std::vector<std::uint32_t> budgets;
  for (const auto& b : menu.newpkts) budgets.push_back(b.budget);
  for (const S& s : closed.init) a.init.push_back(ES{s, budgets, 0});

  a.steps = [closed = std::move(closed), menu = std::move(menu)](const ES& s) {
    std::vector<Transition<NetAction<Msg>, ES>> out;
    for (auto& t : closed.steps(s.net, env_offer(menu, s))) {
      ES next{std::move(t.target), s.newpkt_left, s.link_pos};
      if (const auto* n = std::get_if<act::Newpkt>(&t.action)) {
        for (std::size_t k = 0; k < menu.newpkts.size(); ++k) {
          const NewpktBudget& b = menu.newpkts[k];
          if (next.newpkt_left[k] > 0 && b.node == n->node &&
              b.data == n->data && b.dip == n->dip) {
            --next.newpkt_left[k];
            break;
          }
        }
      } else if (std::holds_alternative<act::Connect>(t.action) ||
                 std::holds_alternative<act::Disconnect>(t.action)) {
        ++next.link_pos;
      }
      out.push_back({std::move(t.action), std::move(next)});
    }
    return out;
  };
  return a;
}

}  // namespace awn
