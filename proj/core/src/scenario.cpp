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

#include "awn_aodv/scenario/scenario.hpp"

#include <fstream>
#include <initializer_list>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace aodv {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw awn::ConfigError((where.empty() ? "/" : where) + ": " + what);
}

void only_keys(const json& j, const std::string& where,
               std::initializer_list<const char*> keys) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* x : keys) known = known || k == x;
    if (!known) fail(where, "unknown key \"" + k + "\"");
  }
}

const json* field(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

const json& need(const json& j, const std::string& where, const char* key) {
  const json* v = field(j, key);
  if (!v) fail(where, std::string("missing key \"") + key + "\"");
  return *v;
}

std::uint64_t uint_at(const json& v, const std::string& where,
                      std::uint64_t max = UINT32_MAX) {
  if (!v.is_number_unsigned()) fail(where, "expected a non-negative integer");
  auto x = v.get<std::uint64_t>();
  if (x > max) fail(where, "value " + std::to_string(x) + " exceeds " + std::to_string(max));
  return x;
}

Addr addr_at(const json& v, const std::string& where) {
  return static_cast<Addr>(uint_at(v, where));
}

std::string string_at(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

awn::LinkOffer link_at(const json& j, const std::string& where) {
  only_keys(j, where, {"op", "a", "b"});
  std::string op = string_at(need(j, where, "op"), where + "/op");
  if (op != "connect" && op != "disconnect") {
    fail(where + "/op", "expected \"connect\" or \"disconnect\"");
  }
  return {op == "connect", addr_at(need(j, where, "a"), where + "/a"),
          addr_at(need(j, where, "b"), where + "/b")};
}

void check_known(const std::set<Addr>& ids, Addr a, const std::string& where) {
  if (!ids.contains(a)) fail(where, "unknown node " + std::to_string(a));
}

}  // namespace

Scenario parse_scenario_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw awn::ConfigError(std::string("malformed JSON: ") + e.what());
  }
  only_keys(j, "", {"nodes", "variant", "mutation", "mode", "env", "schedule",
                    "suite", "bound", "max_states", "out"});
  Scenario sc;

  const json& nodes = need(j, "", "nodes");
  if (!nodes.is_array()) fail("/nodes", "expected an array");
  if (nodes.empty()) fail("/nodes", "at least one node is required");
  std::map<Addr, AddrSet> adj;
  std::vector<Addr> order;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    std::string w = "/nodes/" + std::to_string(k);
    only_keys(nodes[k], w, {"id", "neighbours"});
    Addr id = addr_at(need(nodes[k], w, "id"), w + "/id");
    if (adj.contains(id)) fail(w + "/id", "duplicate address " + std::to_string(id));
    AddrSet ns;
    if (const json* n = field(nodes[k], "neighbours")) {
      if (!n->is_array()) fail(w + "/neighbours", "expected an array");
      for (std::size_t i = 0; i < n->size(); ++i) {
        Addr b = addr_at((*n)[i], w + "/neighbours/" + std::to_string(i));
        if (b == id) fail(w + "/neighbours/" + std::to_string(i), "a node cannot neighbour itself");
        ns.insert(b);
      }
    }
    adj.emplace(id, std::move(ns));
    order.push_back(id);
  }
  std::set<Addr> ids(order.begin(), order.end());
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (Addr b : adj[order[k]]) {
      check_known(ids, b, "/nodes/" + std::to_string(k) + "/neighbours");
    }
  }
  for (Addr a : order) {
    for (Addr b : adj[a]) {
      if (!adj[b].contains(a)) {
        adj[b].insert(a);
        sc.warnings.push_back("neighbour relation made symmetric: added " +
                              std::to_string(a) + " to the neighbours of " +
                              std::to_string(b));
      }
    }
  }
  for (Addr a : order) sc.nodes.emplace_back(a, adj[a]);

  if (const json* v = field(j, "variant")) {
    try {
      sc.model.variant = parse_variant(string_at(*v, "/variant"));
    } catch (const awn::ConfigError& e) {
      fail("/variant", e.what());
    }
  }
  if (const json* v = field(j, "mutation")) {
    try {
      sc.model.mutation = parse_mutation(string_at(*v, "/mutation"));
    } catch (const awn::ConfigError& e) {
      fail("/mutation", e.what());
    }
  }
  if (const json* v = field(j, "mode")) {
    std::string m = string_at(*v, "/mode");
    if (m == "explore") {
      sc.mode = Mode::explore;
    } else if (m == "simulate") {
      sc.mode = Mode::simulate;
    } else {
      fail("/mode", "expected \"explore\" or \"simulate\"");
    }
  }

  if (const json* env = field(j, "env")) {
    only_keys(*env, "/env", {"newpkts", "links"});
    if (const json* np = field(*env, "newpkts")) {
      if (!np->is_array()) fail("/env/newpkts", "expected an array");
      for (std::size_t k = 0; k < np->size(); ++k) {
        std::string w = "/env/newpkts/" + std::to_string(k);
        const json& x = (*np)[k];
        only_keys(x, w, {"node", "data", "dip", "budget"});
        awn::NewpktBudget b;
        b.node = addr_at(need(x, w, "node"), w + "/node");
        check_known(ids, b.node, w + "/node");
        b.data = static_cast<Datum>(uint_at(need(x, w, "data"), w + "/data"));
        b.dip = addr_at(need(x, w, "dip"), w + "/dip");
        b.budget = 1;
        if (const json* bu = field(x, "budget")) {
          b.budget = static_cast<std::uint32_t>(uint_at(*bu, w + "/budget", kMaxBudget));
        }
        sc.env.newpkts.push_back(b);
      }
    }
    if (const json* ls = field(*env, "links")) {
      if (!ls->is_array()) fail("/env/links", "expected an array");
      for (std::size_t k = 0; k < ls->size(); ++k) {
        std::string w = "/env/links/" + std::to_string(k);
        auto l = link_at((*ls)[k], w);
        check_known(ids, l.a, w + "/a");
        check_known(ids, l.b, w + "/b");
        if (l.a == l.b) fail(w, "a link needs two distinct nodes");
        sc.env.link_script.push_back(l);
      }
    }
  }

  if (const json* sch = field(j, "schedule")) {
    only_keys(*sch, "/schedule", {"seed", "max_steps", "events"});
    if (const json* v = field(*sch, "seed")) {
      sc.schedule.seed = uint_at(*v, "/schedule/seed", UINT64_MAX);
    }
    if (const json* v = field(*sch, "max_steps")) {
      sc.schedule.max_steps = uint_at(*v, "/schedule/max_steps", UINT64_MAX);
    }
    if (const json* ev = field(*sch, "events")) {
      if (!ev->is_array()) fail("/schedule/events", "expected an array");
      for (std::size_t k = 0; k < ev->size(); ++k) {
        std::string w = "/schedule/events/" + std::to_string(k);
        const json& x = (*ev)[k];
        only_keys(x, w, {"step", "newpkt", "link"});
        ForcedEvent e;
        e.step = uint_at(need(x, w, "step"), w + "/step", UINT64_MAX);
        const json* np = field(x, "newpkt");
        const json* ln = field(x, "link");
        if ((np != nullptr) == (ln != nullptr)) {
          fail(w, "exactly one of \"newpkt\" and \"link\" is required");
        }
        if (np) {
          std::string p = w + "/newpkt";
          only_keys(*np, p, {"node", "data", "dip"});
          awn::NewpktOffer o{addr_at(need(*np, p, "node"), p + "/node"),
                             static_cast<Datum>(uint_at(need(*np, p, "data"), p + "/data")),
                             addr_at(need(*np, p, "dip"), p + "/dip")};
          check_known(ids, o.node, p + "/node");
          e.action = o;
        } else {
          auto l = link_at(*ln, w + "/link");
          check_known(ids, l.a, w + "/link/a");
          check_known(ids, l.b, w + "/link/b");
          e.action = l;
        }
        if (!sc.schedule.events.empty() && sc.schedule.events.back().step > e.step) {
          fail(w + "/step", "events must be listed in step order");
        }
        sc.schedule.events.push_back(e);
      }
    }
  }

  if (const json* v = field(j, "suite")) {
    try {
      sc.suite = Suite::parse(string_at(*v, "/suite"));
    } catch (const awn::ConfigError& e) {
      fail("/suite", e.what());
    }
  }
  if (const json* v = field(j, "bound"); v && !v->is_null()) {
    sc.bound = static_cast<std::uint32_t>(uint_at(*v, "/bound"));
  }
  if (const json* v = field(j, "max_states")) {
    sc.max_states = uint_at(*v, "/max_states", UINT64_MAX);
    if (sc.max_states == 0) fail("/max_states", "must be positive");
  }
  if (const json* v = field(j, "out")) sc.out = string_at(*v, "/out");
  return sc;
}

Scenario parse_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw awn::ConfigError("cannot read scenario file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_scenario_text(buf.str());
  } catch (const awn::ConfigError& e) {
    throw awn::ConfigError(path + ": " + e.what());
  }
}

std::string scenario_json(const Scenario& s) {
  json j;
  j["nodes"] = json::array();
  for (const auto& [id, ns] : s.nodes) {
    j["nodes"].push_back({{"id", id}, {"neighbours", std::vector<Addr>(ns.begin(), ns.end())}});
  }
  j["variant"] = to_string(s.model.variant);
  j["mutation"] = to_string(s.model.mutation);
  j["mode"] = s.mode == Mode::explore ? "explore" : "simulate";
  json np = json::array();
  for (const auto& b : s.env.newpkts) {
    np.push_back({{"node", b.node}, {"data", b.data}, {"dip", b.dip}, {"budget", b.budget}});
  }
  json links = json::array();
  for (const auto& l : s.env.link_script) {
    links.push_back({{"op", l.connect ? "connect" : "disconnect"}, {"a", l.a}, {"b", l.b}});
  }
  j["env"] = {{"newpkts", np}, {"links", links}};
  json ev = json::array();
  for (const auto& e : s.schedule.events) {
    json x{{"step", e.step}};
    if (const auto* n = std::get_if<awn::NewpktOffer>(&e.action)) {
      x["newpkt"] = {{"node", n->node}, {"data", n->data}, {"dip", n->dip}};
    } else {
      const auto& l = std::get<awn::LinkOffer>(e.action);
      x["link"] = {{"op", l.connect ? "connect" : "disconnect"}, {"a", l.a}, {"b", l.b}};
    }
    ev.push_back(x);
  }
  j["schedule"] = {{"seed", s.schedule.seed}, {"max_steps", s.schedule.max_steps}, {"events", ev}};
  j["suite"] = s.suite.str();
  j["bound"] = s.bound ? json(*s.bound) : json(nullptr);
  j["max_states"] = s.max_states;
  if (!s.out.empty()) j["out"] = s.out;
  return j.dump();
}

}  // namespace aodv
