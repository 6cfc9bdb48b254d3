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

// Layers four and five: partial networks built from network terms, and
// closed networks.

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "awn_aodv/awn/layers.hpp"

namespace awn {

// The static shape of a network: a binary tree of nodes with their initial
// neighbour sets.
struct NetTree {
  struct Node {
    Addr addr;
    AddrSet neighbours;
  };
  struct Par {
    std::shared_ptr<const NetTree> left;
    std::shared_ptr<const NetTree> right;
  };
  std::variant<Node, Par> v;

  static NetTree node(Addr a, AddrSet r) { return {Node{a, std::move(r)}}; }
  static NetTree par(NetTree l, NetTree r) {
    return {Par{std::make_shared<const NetTree>(std::move(l)),
                std::make_shared<const NetTree>(std::move(r))}};
  }
};

// Node addresses in left-to-right order, duplicates included.
inline void collect_addresses(const NetTree& t, std::vector<Addr>& out) {
  if (const auto* n = std::get_if<NetTree::Node>(&t.v)) {
    out.push_back(n->addr);
  } else {
    const auto& p = std::get<NetTree::Par>(t.v);
    collect_addresses(*p.left, out);
    collect_addresses(*p.right, out);
  }
}

inline AddrSet net_addresses(const NetTree& t) {
  std::vector<Addr> all;
  collect_addresses(t, all);
  return AddrSet(all.begin(), all.end());
}

// Well-formed iff all node addresses are distinct.
inline bool wf(const NetTree& t) {
  std::vector<Addr> all;
  collect_addresses(t, all);
  return AddrSet(all.begin(), all.end()).size() == all.size();
}

// Balanced tree over the given nodes, in order.
inline NetTree balanced_tree(const std::vector<std::pair<Addr, AddrSet>>& nodes,
                             std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return NetTree::node(nodes[lo].first, nodes[lo].second);
  std::size_t mid = lo + (hi - lo + 1) / 2;
  return NetTree::par(balanced_tree(nodes, lo, mid),
                      balanced_tree(nodes, mid, hi));
}

inline NetTree balanced_tree(const std::vector<std::pair<Addr, AddrSet>>& nodes) {
  if (nodes.empty()) throw ConfigError("network term needs at least one node");
  return balanced_tree(nodes, 0, nodes.size());
}

// Runtime state mirroring a NetTree. Subnets share unchanged children.
template <class S>
struct NetState {
  struct Subnet {
    std::shared_ptr<const NetState> left;
    std::shared_ptr<const NetState> right;
  };
  std::variant<NodeState<S>, Subnet> v;

  bool operator==(const NetState& o) const {
    if (v.index() != o.v.index()) return false;
    if (const auto* n = std::get_if<NodeState<S>>(&v)) {
      return *n == std::get<NodeState<S>>(o.v);
    }
    const auto& a = std::get<Subnet>(v);
    const auto& b = std::get<Subnet>(o.v);
    return (a.left == b.left || *a.left == *b.left) &&
           (a.right == b.right || *a.right == *b.right);
  }
};

// Visits every node state left to right.
template <class S, class F>
void for_each_node(const NetState<S>& s, F&& f) {
  if (const auto* n = std::get_if<NodeState<S>>(&s.v)) {
    f(*n);
  } else {
    const auto& sub = std::get<typename NetState<S>::Subnet>(s.v);
    for_each_node(*sub.left, f);
    for_each_node(*sub.right, f);
  }
}

// Visits the node pairs of two states of the same network whose subtrees
// are not shared.
template <class S, class F>
void for_each_changed_node(const NetState<S>& a, const NetState<S>& b, F&& f) {
  using Sub = typename NetState<S>::Subnet;
  const auto* sa = std::get_if<Sub>(&a.v);
  const auto* sb = std::get_if<Sub>(&b.v);
  if (sa == nullptr || sb == nullptr) {
    f(std::get<NodeState<S>>(a.v), std::get<NodeState<S>>(b.v));
    return;
  }
  if (sa->left != sb->left) for_each_changed_node(*sa->left, *sb->left, f);
  if (sa->right != sb->right) for_each_changed_node(*sa->right, *sb->right, f);
}

// Partial map from addresses to the exposed part of each node state.
template <class S, class X>
std::map<Addr, X> netlift(const std::function<X(const S&)>& expose,
                          const NetState<S>& s) {
  std::map<Addr, X> out;
  for_each_node(s, [&](const NodeState<S>& n) { out.emplace(n.ip, expose(n.proc)); });
  return out;
}

template <class S, class Msg>
using NetStep = Transition<NetAction<Msg>, NetState<S>>;

// Layer four: composes two partial networks over disjoint address sets.
// A cast on one side synchronises with an arrival on the other that covers
// all of that side's addresses; arrivals on both sides merge; connect and
// disconnect are taken jointly; everything else interleaves.
template <class S, class Msg>
NetAutomaton<NetState<S>, Msg> pnet_steps(NetAutomaton<NetState<S>, Msg> left,
                                          NetAutomaton<NetState<S>, Msg> right) {
  using NS = NetState<S>;
  using Sub = typename NS::Subnet;
  using Step = NetStep<S, Msg>;
  if (!disjoint(left.addresses, right.addresses)) {
    throw ConfigError("partial networks share an address");
  }
  NetAutomaton<NS, Msg> a;
  a.addresses = set_union(left.addresses, right.addresses);
  for (const NS& l : left.init) {
    for (const NS& r : right.init) {
      a.init.push_back(NS{Sub{std::make_shared<const NS>(l),
                              std::make_shared<const NS>(r)}});
    }
  }

  auto join = [](std::shared_ptr<const NS> l, std::shared_ptr<const NS> r) {
    return NS{Sub{std::move(l), std::move(r)}};
  };
  auto covers = [](const act::Arrive<Msg>& arr, const AddrSet& range,
                   const AddrSet& side) {
    return subset_of(arr.hear, range) && disjoint(arr.miss, range) &&
           set_union(arr.hear, arr.miss) == side;
  };

  a.steps = [left, right, join, covers](const NS& s, const EnvOffer& env) {
    const Sub& sub = std::get<Sub>(s.v);
    std::vector<Step> out;
    auto lsteps = left.steps(*sub.left, env);
    auto rsteps = right.steps(*sub.right, env);

    for (auto& t : lsteps) {
      auto lt = std::make_shared<const NS>(std::move(t.target));
      if (const auto* c = std::get_if<act::Cast<Msg>>(&t.action)) {
        for (auto& u : right.arrive(*sub.right, c->msg, &c->range)) {
          const auto& arr = std::get<act::Arrive<Msg>>(u.action);
          if (covers(arr, c->range, right.addresses)) {
            out.push_back({*c, join(lt, std::make_shared<const NS>(std::move(u.target)))});
          }
        }
      } else if (std::holds_alternative<act::Connect>(t.action) ||
                 std::holds_alternative<act::Disconnect>(t.action)) {
        for (const auto& u : rsteps) {
          if (u.action == t.action) {
            out.push_back({t.action, join(lt, std::make_shared<const NS>(u.target))});
          }
        }
      } else if (!is_arrive(t.action)) {
        out.push_back({std::move(t.action), join(lt, sub.right)});
      }
    }
    for (auto& u : rsteps) {
      if (const auto* c = std::get_if<act::Cast<Msg>>(&u.action)) {
        auto rt = std::make_shared<const NS>(std::move(u.target));
        for (auto& t : left.arrive(*sub.left, c->msg, &c->range)) {
          const auto& arr = std::get<act::Arrive<Msg>>(t.action);
          if (covers(arr, c->range, left.addresses)) {
            out.push_back({*c, join(std::make_shared<const NS>(std::move(t.target)), rt)});
          }
        }
      } else if (!std::holds_alternative<act::Connect>(u.action) &&
                 !std::holds_alternative<act::Disconnect>(u.action) &&
                 !is_arrive(u.action)) {
        out.push_back({std::move(u.action),
                       join(sub.left, std::make_shared<const NS>(std::move(u.target)))});
      }
    }
    return out;
  };

  a.arrive = [left, right, join](const NS& s, const Msg& m, const AddrSet* range) {
    const Sub& sub = std::get<Sub>(s.v);
    std::vector<Step> out;
    auto la = left.arrive(*sub.left, m, range);
    auto ra = right.arrive(*sub.right, m, range);
    for (const auto& t : la) {
      const auto& a1 = std::get<act::Arrive<Msg>>(t.action);
      auto lt = std::make_shared<const NS>(t.target);
      for (const auto& u : ra) {
        const auto& a2 = std::get<act::Arrive<Msg>>(u.action);
        out.push_back({act::Arrive<Msg>{set_union(a1.hear, a2.hear),
                                        set_union(a1.miss, a2.miss), m},
                       join(lt, std::make_shared<const NS>(u.target))});
      }
    }
    return out;
  };
  return a;
}

// Lifts a node automaton into the network-state representation.
template <class S, class Msg>
NetAutomaton<NetState<S>, Msg> as_network(NetAutomaton<NodeState<S>, Msg> node) {
  using NS = NetState<S>;
  NetAutomaton<NS, Msg> a;
  a.addresses = node.addresses;
  for (auto& s : node.init) a.init.push_back(NS{std::move(s)});
  auto lift = [](std::vector<Transition<NetAction<Msg>, NodeState<S>>> in) {
    std::vector<NetStep<S, Msg>> out;
    out.reserve(in.size());
    for (auto& t : in) out.push_back({std::move(t.action), NS{std::move(t.target)}});
    return out;
  };
  a.steps = [node, lift](const NS& s, const EnvOffer& env) {
    return lift(node.steps(std::get<NodeState<S>>(s.v), env));
  };
  a.arrive = [node, lift](const NS& s, const Msg& m, const AddrSet* range) {
    return lift(node.arrive(std::get<NodeState<S>>(s.v), m, range));
  };
  return a;
}

// Builds the partial network of a well-formed tree; `np` gives the local
// process run at each address.
template <class S, class Msg>
NetAutomaton<NetState<S>, Msg> pnet(
    const std::function<SeqAutomaton<S, Msg>(Addr)>& np, const NetTree& t) {
  if (!wf(t)) throw ConfigError("network term has duplicate addresses");
  if (const auto* n = std::get_if<NetTree::Node>(&t.v)) {
    return as_network(node_steps<S, Msg>(n->addr, np(n->addr), n->neighbours));
  }
  const auto& p = std::get<NetTree::Par>(t.v);
  return pnet_steps(pnet(np, *p.left), pnet(np, *p.right));
}

// Layer five: casts become internal steps and arrivals are no longer
// possible; everything else passes through.
template <class S, class Msg>
NetAutomaton<S, Msg> closed_steps(NetAutomaton<S, Msg> net) {
  NetAutomaton<S, Msg> a;
  a.init = net.init;
  a.addresses = net.addresses;
  a.steps = [net](const S& s, const EnvOffer& env) {
    std::vector<Transition<NetAction<Msg>, S>> out;
    for (auto& t : net.steps(s, env)) {
      if (is_cast(t.action)) {
        out.push_back({act::Tau{}, std::move(t.target)});
      } else if (!is_arrive(t.action)) {
        out.push_back(std::move(t));
      }
    }
    return out;
  };
  a.arrive = [](const S&, const Msg&, const AddrSet*) {
    return std::vector<Transition<NetAction<Msg>, S>>{};
  };
  return a;
}

template <class S, class Msg>
NetAutomaton<S, Msg> closed(NetAutomaton<S, Msg> net) {
  return closed_steps(std::move(net));
}

}  // namespace awn
