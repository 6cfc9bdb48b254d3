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

#include "awn_aodv/monitor/monitor.hpp"

#include <map>

namespace aodv {

namespace {

std::string s(std::uint32_t v) { return std::to_string(v); }

AddrSet keys(const GlobalState& sigma) {
  AddrSet out;
  for (const auto& [a, _] : sigma) out.insert(out.end(), a);
  return out;
}

}  // namespace

RtGraph rt_graph(const GlobalState& sigma, Addr dip, const AddrSet& nodes) {
  RtGraph g{dip, {}};
  for (Addr ip : nodes) {
    if (ip == dip) continue;
    auto it = sigma.find(ip);
    if (it == sigma.end()) continue;
    auto r = it->second.rt.find(dip);
    if (r != it->second.rt.end() && r->second.flag == Flag::val) {
      g.arcs.emplace(ip, r->second.nhip);
    }
  }
  return g;
}

std::optional<std::vector<Addr>> find_cycle(
    const std::set<std::pair<Addr, Addr>>& arcs) {
  std::map<Addr, std::vector<Addr>> succ;
  for (const auto& [a, b] : arcs) {
    succ[a].push_back(b);
    succ.try_emplace(b);
  }
  enum Colour : std::uint8_t { white, grey, black };
  std::map<Addr, Colour> colour;
  for (const auto& [v, _] : succ) colour[v] = white;

  for (const auto& [root, _] : succ) {
    if (colour[root] != white) continue;
    // Stack of (vertex, next successor index); the stack is the grey path.
    std::vector<std::pair<Addr, std::size_t>> stack{{root, 0}};
    colour[root] = grey;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      const auto& next = succ[v];
      if (i == next.size()) {
        colour[v] = black;
        stack.pop_back();
        continue;
      }
      Addr w = next[i++];
      if (colour[w] == grey) {
        std::vector<Addr> cycle;
        bool on = false;
        for (const auto& [u, _] : stack) {
          on = on || u == w;
          if (on) cycle.push_back(u);
        }
        cycle.push_back(w);
        return cycle;
      }
      if (colour[w] == white) {
        colour[w] = grey;
        stack.emplace_back(w, 0);
      }
    }
  }
  return std::nullopt;
}

Verdict loop_free(const GlobalState& sigma, const AddrSet& nodes) {
  AddrSet dips = nodes;
  for (const auto& [_, xi] : sigma) {
    for (const auto& [d, __] : xi.rt) dips.insert(d);
  }
  for (Addr dip : dips) {
    RtGraph g = rt_graph(sigma, dip, nodes);
    if (auto cycle = find_cycle(g.arcs)) {
      std::string route;
      for (Addr a : *cycle) route += (route.empty() ? "" : "->") + s(a);
      return Verdict::fail({to_string(Property::loop_free), dip, *cycle,
                            "routing loop towards " + s(dip) + ": " + route});
    }
  }
  return Verdict::ok();
}

Verdict hop_positivity(const GlobalState& sigma) {
  for (const auto& [ip, xi] : sigma) {
    for (const auto& [dip, r] : xi.rt) {
      if (r.hops < 1) {
        return Verdict::fail({to_string(Property::hop_positivity), dip, {ip},
                              "node " + s(ip) + " has a 0-hop route to " +
                                  s(dip)});
      }
    }
  }
  return Verdict::ok();
}

Verdict route_quality(const GlobalState& sigma) {
  for (const auto& [ip, xi] : sigma) {
    for (const auto& [dip, r] : xi.rt) {
      if (r.flag != Flag::val || r.nhip == dip) continue;
      auto nh = sigma.find(r.nhip);
      if (nh == sigma.end() || !is_valid(nh->second.rt, dip)) continue;
      if (!strictly_fresher(xi.rt, nh->second.rt, dip)) {
        const RouteEntry& q = nh->second.rt.at(dip);
        return Verdict::fail(
            {to_string(Property::quality), dip, {ip, r.nhip},
             "route to " + s(dip) + " at " + s(ip) + " " + to_string(r) +
                 " is not worse than at its next hop " + s(r.nhip) + " " +
                 to_string(q)});
      }
    }
  }
  return Verdict::ok();
}

Verdict sn_monotone(const GlobalState& before, const GlobalState& after) {
  for (const auto& [ip, xi] : before) {
    auto it = after.find(ip);
    if (it == after.end()) continue;
    if (it->second.sn < xi.sn) {
      return Verdict::fail({to_string(Property::sn_monotone), std::nullopt,
                            {ip},
                            "sn of " + s(ip) + " fell from " + s(xi.sn) +
                                " to " + s(it->second.sn)});
    }
  }
  return Verdict::ok();
}

Verdict nsqn_monotone(const GlobalState& before, const GlobalState& after) {
  for (const auto& [ip, xi] : before) {
    auto it = after.find(ip);
    if (it == after.end()) continue;
    const RoutingTable& rt2 = it->second.rt;
    for (const auto& [dip, _] : xi.rt) {
      if (!rt2.contains(dip)) continue;
      Sqn a = nsqn(xi.rt, dip);
      Sqn b = nsqn(rt2, dip);
      if (b < a) {
        return Verdict::fail({to_string(Property::nsqn_monotone), dip, {ip},
                              "net sequence number of " + s(ip) +
                                  " towards " + s(dip) + " fell from " +
                                  s(a) + " to " + s(b)});
      }
    }
  }
  return Verdict::ok();
}

std::string to_string(Property p) {
  switch (p) {
    case Property::hop_positivity: return "hop-positivity";
    case Property::quality: return "quality";
    case Property::loop_free: return "loop-free";
    case Property::received_msg: return "received-msg";
    case Property::sn_monotone: return "sn-monotone";
    case Property::nsqn_monotone: return "nsqn-monotone";
    case Property::count_: break;
  }
  return "?";
}

Suite Suite::all() {
  Suite out;
  out.bits_.set();
  return out;
}

Suite Suite::parse(std::string_view names) {
  Suite out;
  std::size_t pos = 0;
  while (pos <= names.size()) {
    std::size_t end = names.find(',', pos);
    if (end == std::string_view::npos) end = names.size();
    std::string_view name = names.substr(pos, end - pos);
    pos = end + 1;
    if (name.empty()) continue;
    if (name == "all") {
      out.bits_.set();
      continue;
    }
    bool found = false;
    for (std::size_t k = 0; k < static_cast<std::size_t>(Property::count_);
         ++k) {
      if (to_string(static_cast<Property>(k)) == name) {
        out.bits_.set(k);
        found = true;
      }
    }
    if (!found) {
      throw awn::ConfigError("unknown property '" + std::string(name) + "'");
    }
  }
  if (out.bits_.none()) throw awn::ConfigError("empty property suite");
  return out;
}

std::vector<Property> Suite::properties() const {
  std::vector<Property> out;
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    if (bits_.test(k)) out.push_back(static_cast<Property>(k));
  }
  return out;
}

std::string Suite::str() const {
  std::string out;
  for (Property p : properties()) {
    if (!out.empty()) out += ',';
    out += to_string(p);
  }
  return out;
}

Monitor::Monitor(Suite suite, ModelConfig cfg) : suite_(suite) {
  received_msg_ = awn::onl<AodvData, Message>(
      gamma_aodv(cfg), [](const AodvData& xi, const awn::Label& l) {
        if (l != awn::Label{kPAodv, 1}) return true;
        auto from = sender(xi.msg);
        return !from || *from != xi.ip;
      });
}

bool Monitor::received_msg_ok(const ProcState& p) const {
  return received_msg_(p);
}

Verdict Monitor::check_state(const NetState& st) const {
  GlobalState sigma = netmap(st);
  if (suite_.has(Property::hop_positivity)) {
    if (Verdict v = hop_positivity(sigma); !v.holds) return v;
  }
  if (suite_.has(Property::quality)) {
    if (Verdict v = route_quality(sigma); !v.holds) return v;
  }
  if (suite_.has(Property::loop_free)) {
    if (Verdict v = loop_free(sigma, keys(sigma)); !v.holds) return v;
  }
  if (suite_.has(Property::received_msg)) {
    std::optional<Witness> bad;
    awn::for_each_node(st, [&](const NodeState& n) {
      if (!bad && !received_msg_ok(n.proc.first)) {
        bad = Witness{to_string(Property::received_msg), std::nullopt,
                      {n.ip},
                      "node " + s(n.ip) + " dispatches its own message " +
                          to_string(n.proc.first.data.msg)};
      }
    });
    if (bad) return Verdict::fail(*bad);
  }
  return Verdict::ok();
}

Verdict Monitor::check_step(const NetState& st, const NetAction&,
                            const NetState& next) const {
  bool sn = suite_.has(Property::sn_monotone);
  bool ns = suite_.has(Property::nsqn_monotone);
  if (!sn && !ns) return Verdict::ok();
  Verdict out;
  awn::for_each_changed_node(st, next, [&](const NodeState& a,
                                           const NodeState& b) {
    if (!out.holds) return;
    GlobalState before{{a.ip, a.proc.first.data}};
    GlobalState after{{b.ip, b.proc.first.data}};
    if (sn) out = sn_monotone(before, after);
    if (out.holds && ns) out = nsqn_monotone(before, after);
  });
  return out;
}

}  // namespace aodv
