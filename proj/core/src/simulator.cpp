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

#include "awn_aodv/sim/simulator.hpp"

#include <random>

namespace aodv {

namespace {

bool matches(const ForcedAction& f, const NetAction& a) {
  if (const auto* n = std::get_if<awn::NewpktOffer>(&f)) {
    const auto* x = std::get_if<awn::act::Newpkt>(&a);
    return x && x->node == n->node && x->data == n->data && x->dip == n->dip;
  }
  const auto& l = std::get<awn::LinkOffer>(f);
  if (l.connect) {
    const auto* x = std::get_if<awn::act::Connect>(&a);
    return x && x->a == l.a && x->b == l.b;
  }
  const auto* x = std::get_if<awn::act::Disconnect>(&a);
  return x && x->a == l.a && x->b == l.b;
}

std::optional<awn::Violation> violation(const Verdict& v) {
  if (v.holds) return std::nullopt;
  std::string detail = v.witness->detail;
  if (v.witness->dip) detail += " dip=" + std::to_string(*v.witness->dip);
  return awn::Violation{v.witness->property, detail};
}

}  // namespace

std::string to_string(const ForcedAction& a) {
  if (const auto* n = std::get_if<awn::NewpktOffer>(&a)) {
    return "newpkt(" + std::to_string(n->data) + "," + std::to_string(n->dip) +
           ")@" + std::to_string(n->node);
  }
  const auto& l = std::get<awn::LinkOffer>(a);
  return std::string(l.connect ? "connect(" : "disconnect(") +
         std::to_string(l.a) + "," + std::to_string(l.b) + ")";
}

SimResult simulate(const awn::NetTree& t, const awn::EnvMenu& menu,
                   const Schedule& sched, ModelConfig cfg, Suite suite,
                   const std::function<void(const SimStep&)>& on_step) {
  if (!awn::wf(t)) throw awn::ConfigError("network term is not well formed");
  System sys = aodv_system(t, menu, cfg);
  NetAutomaton net = aodv_network(t, cfg);
  Monitor monitor(suite, cfg);
  std::mt19937_64 rng(sched.seed);

  SimResult res;
  SysState s = sys.init.front();
  res.violation = violation(monitor.check_state(s.net));
  std::size_t next_event = 0;

  while (!res.violation && res.steps < sched.max_steps) {
    std::optional<awn::Transition<NetAction, SysState>> pick;
    bool forced = false;
    auto enabled = sys.steps(s);
    bool due = next_event < sched.events.size() &&
               (sched.events[next_event].step <= res.steps || enabled.empty());
    if (due) {
      const ForcedEvent& ev = sched.events[next_event++];
      awn::EnvOffer offer;
      if (const auto* n = std::get_if<awn::NewpktOffer>(&ev.action)) {
        offer.newpkts.push_back(*n);
      } else {
        offer.links.push_back(std::get<awn::LinkOffer>(ev.action));
      }
      for (auto& tr : net.steps(s.net, offer)) {
        if (matches(ev.action, tr.action)) {
          pick.emplace(std::move(tr.action),
                       SysState{std::move(tr.target), s.newpkt_left, s.link_pos});
          break;
        }
      }
      if (!pick) {
        throw SimError("forced event " + to_string(ev.action) + " at step " +
                       std::to_string(res.steps) + " is not enabled");
      }
      forced = true;
    } else if (enabled.empty()) {
      res.quiescent = true;
      break;
    } else {
      pick.emplace(std::move(enabled[rng() % enabled.size()]));
    }

    ++res.steps;
    res.violation = violation(monitor.check_step(s.net, pick->action, pick->target.net));
    if (!res.violation) res.violation = violation(monitor.check_state(pick->target.net));
    if (on_step) {
      on_step(SimStep{res.steps, changed_nodes(s.net, pick->target.net), pick->action,
                      forced, &pick->target});
    }
    s = std::move(pick->target);
  }
  res.final_state = std::move(s);
  return res;
}

}  // namespace aodv
