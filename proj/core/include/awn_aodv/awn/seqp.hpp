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

// Sequential processes: term syntax, labelling, process tables and the
// structural operational semantics of layer one.
//
// Expressions inside terms (guards, state transformers, message builders)
// are host functions over the data state. Terms are immutable and shared;
// a process state refers to its control term by pointer, so the
// ProcessSpec that owns the terms must outlive every state built from it.

#pragma once

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "awn_aodv/awn/action.hpp"
#include "awn_aodv/awn/common.hpp"

namespace awn {

// A control location, rendered "PNewPkt-:3".
struct Label {
  std::string process;
  unsigned offset = 0;

  auto operator<=>(const Label&) const = default;
  bool operator==(const Label&) const = default;

  std::string str() const { return process + "-:" + std::to_string(offset); }
};

template <class Data, class Msg>
struct Term {
  using Ptr = std::shared_ptr<const Term>;

  struct Assign {
    std::function<Data(const Data&)> update;
    Ptr next;
  };
  // The chooser yields every admissible successor state; an empty result
  // blocks.
  struct Guard {
    std::function<std::vector<Data>(const Data&)> choose;
    Ptr next;
  };
  struct Unicast {
    std::function<Addr(const Data&)> dest;
    std::function<Msg(const Data&)> msg;
    Ptr ok;
    Ptr fail;
  };
  struct Broadcast {
    std::function<Msg(const Data&)> msg;
    Ptr next;
  };
  struct Groupcast {
    std::function<AddrSet(const Data&)> dests;
    std::function<Msg(const Data&)> msg;
    Ptr next;
  };
  struct Send {
    std::function<Msg(const Data&)> msg;
    Ptr next;
  };
  struct Receive {
    std::function<Data(const Msg&, const Data&)> update;
    Ptr next;
  };
  struct Deliver {
    std::function<Datum(const Data&)> data;
    Ptr next;
  };
  struct Choice {
    Ptr left;
    Ptr right;
  };
  struct Call {
    std::string process;
  };

  using Node = std::variant<Assign, Guard, Unicast, Broadcast, Groupcast, Send,
                            Receive, Deliver, Choice, Call>;

  Node node;
  std::optional<Label> label;  // absent on Choice and Call

  bool is_prefix() const {
    return !std::holds_alternative<Choice>(node) &&
           !std::holds_alternative<Call>(node);
  }
};

template <class Data, class Msg>
using TermPtr = typename Term<Data, Msg>::Ptr;

// -- construction --------------------------------------------------------
//
// Prefixes are terms still waiting for their continuation; `>>` chains
// them and closes the chain with a complete term:
//
//   assign(f) >> when(p) >> broadcast(m) >> call("P")

template <class Data, class Msg>
struct Prefix {
  std::function<TermPtr<Data, Msg>(TermPtr<Data, Msg>)> attach;
};

template <class Data, class Msg>
struct PrefixChain {
  std::vector<Prefix<Data, Msg>> items;
};

template <class Data, class Msg>
PrefixChain<Data, Msg> operator>>(Prefix<Data, Msg> a, Prefix<Data, Msg> b) {
  return {{std::move(a), std::move(b)}};
}

template <class Data, class Msg>
PrefixChain<Data, Msg> operator>>(PrefixChain<Data, Msg> a,
                                  Prefix<Data, Msg> b) {
  a.items.push_back(std::move(b));
  return a;
}

template <class Data, class Msg>
TermPtr<Data, Msg> operator>>(const Prefix<Data, Msg>& a,
                              TermPtr<Data, Msg> tail) {
  return a.attach(std::move(tail));
}

template <class Data, class Msg>
TermPtr<Data, Msg> operator>>(const PrefixChain<Data, Msg>& chain,
                              TermPtr<Data, Msg> tail) {
  for (auto it = chain.items.rbegin(); it != chain.items.rend(); ++it) {
    tail = it->attach(std::move(tail));
  }
  return tail;
}

template <class Data, class Msg>
struct Terms {
  using T = Term<Data, Msg>;
  using Ptr = typename T::Ptr;
  using P = Prefix<Data, Msg>;

  static Ptr make(typename T::Node n) {
    return std::make_shared<const T>(T{std::move(n), std::nullopt});
  }

  static P assign(std::function<Data(const Data&)> u) {
    return {[u = std::move(u)](Ptr next) {
      return make(typename T::Assign{u, std::move(next)});
    }};
  }
  static P guard(std::function<std::vector<Data>(const Data&)> g) {
    return {[g = std::move(g)](Ptr next) {
      return make(typename T::Guard{g, std::move(next)});
    }};
  }
  // Guard that passes the state through unchanged when `p` holds.
  static P when(std::function<bool(const Data&)> p) {
    return guard([p = std::move(p)](const Data& d) {
      return p(d) ? std::vector<Data>{d} : std::vector<Data>{};
    });
  }
  static P broadcast(std::function<Msg(const Data&)> m) {
    return {[m = std::move(m)](Ptr next) {
      return make(typename T::Broadcast{m, std::move(next)});
    }};
  }
  static P groupcast(std::function<AddrSet(const Data&)> dests,
                     std::function<Msg(const Data&)> m) {
    return {[dests = std::move(dests), m = std::move(m)](Ptr next) {
      return make(typename T::Groupcast{dests, m, std::move(next)});
    }};
  }
  static P send(std::function<Msg(const Data&)> m) {
    return {[m = std::move(m)](Ptr next) {
      return make(typename T::Send{m, std::move(next)});
    }};
  }
  static P receive(std::function<Data(const Msg&, const Data&)> u) {
    return {[u = std::move(u)](Ptr next) {
      return make(typename T::Receive{u, std::move(next)});
    }};
  }
  static P deliver(std::function<Datum(const Data&)> d) {
    return {[d = std::move(d)](Ptr next) {
      return make(typename T::Deliver{d, std::move(next)});
    }};
  }
  static Ptr unicast(std::function<Addr(const Data&)> dest,
                     std::function<Msg(const Data&)> m, Ptr ok, Ptr fail) {
    return make(typename T::Unicast{std::move(dest), std::move(m),
                                    std::move(ok), std::move(fail)});
  }
  static Ptr choice(Ptr l, Ptr r) {
    return make(typename T::Choice{std::move(l), std::move(r)});
  }
  // Right-nested choice over two or more alternatives.
  static Ptr choice(std::vector<Ptr> alts) {
    if (alts.empty()) throw ConfigError("choice over no alternatives");
    Ptr acc = alts.back();
    for (auto it = alts.rbegin() + 1; it != alts.rend(); ++it) {
      acc = choice(*it, acc);
    }
    return acc;
  }
  static Ptr call(std::string name) {
    return make(typename T::Call{std::move(name)});
  }
};

// -- labelling -----------------------------------------------------------

namespace detail {

template <class Data, class Msg>
TermPtr<Data, Msg> relabel(const TermPtr<Data, Msg>& t,
                           const std::string& pname, unsigned& next,
                           std::optional<unsigned>* shared_head) {
  using T = Term<Data, Msg>;
  auto take = [&]() -> unsigned {
    if (shared_head == nullptr) return next++;
    if (!shared_head->has_value()) *shared_head = next++;
    return **shared_head;
  };
  auto labelled_node = [&](typename T::Node n, unsigned off) {
    return std::make_shared<const T>(T{std::move(n), Label{pname, off}});
  };

  return std::visit(
      [&](const auto& n) -> TermPtr<Data, Msg> {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, typename T::Choice>) {
          // Every alternative of a choice starts at the same location.
          std::optional<unsigned> local;
          std::optional<unsigned>* head =
              shared_head != nullptr ? shared_head : &local;
          auto l = relabel<Data, Msg>(n.left, pname, next, head);
          auto r = relabel<Data, Msg>(n.right, pname, next, head);
          return std::make_shared<const T>(
              T{typename T::Choice{std::move(l), std::move(r)}, std::nullopt});
        } else if constexpr (std::is_same_v<N, typename T::Call>) {
          return t;
        } else if constexpr (std::is_same_v<N, typename T::Unicast>) {
          unsigned off = take();
          auto ok = relabel<Data, Msg>(n.ok, pname, next, nullptr);
          auto fail = relabel<Data, Msg>(n.fail, pname, next, nullptr);
          return labelled_node(
              typename T::Unicast{n.dest, n.msg, std::move(ok), std::move(fail)},
              off);
        } else {
          unsigned off = take();
          N copy = n;
          copy.next = relabel<Data, Msg>(n.next, pname, next, nullptr);
          return labelled_node(std::move(copy), off);
        }
      },
      t->node);
}

}  // namespace detail

// Labels the prefixes of `body` pname-:0, pname-:1, ... in left-to-right
// preorder. The alternatives of a choice share the label of the choice
// point; Choice and Call carry no label of their own.
template <class Data, class Msg>
TermPtr<Data, Msg> labelled(const std::string& pname,
                            const TermPtr<Data, Msg>& body) {
  unsigned next = 0;
  return detail::relabel<Data, Msg>(body, pname, next, nullptr);
}

// -- process tables --------------------------------------------------------

// A recursive specification: process names mapped to (labelled) bodies.
template <class Data, class Msg>
class ProcessSpec {
 public:
  using T = Term<Data, Msg>;
  using Ptr = typename T::Ptr;

  explicit ProcessSpec(std::vector<std::pair<std::string, Ptr>> bodies)
      : order_(std::move(bodies)) {
    for (const auto& [name, body] : order_) {
      if (!body) throw ConfigError("process " + name + " has no body");
      if (!table_.emplace(name, body).second) {
        throw ConfigError("process " + name + " declared twice");
      }
    }
    for (const auto& [name, body] : order_) index_terms(body.get(), name);
  }

  const T& body(std::string_view name) const {
    auto it = table_.find(name);
    if (it == table_.end()) {
      throw ConfigError("call to undefined process " + std::string(name));
    }
    return *it->second;
  }

  const Ptr& body_ptr(std::string_view name) const {
    auto it = table_.find(name);
    if (it == table_.end()) {
      throw ConfigError("call to undefined process " + std::string(name));
    }
    return it->second;
  }

  bool declares(std::string_view name) const {
    return table_.find(name) != table_.end();
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& [n, _] : order_) out.push_back(n);
    return out;
  }

  // Stable preorder index of a term owned by this table.
  std::uint32_t index_of(const T* t) const {
    auto it = index_.find(t);
    if (it == index_.end()) {
      throw ConfigError("term does not belong to this process table");
    }
    return it->second;
  }

  const T* term_at(std::uint32_t i) const { return terms_.at(i); }
  std::size_t term_count() const { return terms_.size(); }

  // Every label occurring in any body.
  std::set<Label> all_labels() const {
    std::set<Label> out;
    for (const T* t : terms_) {
      if (t->label) out.insert(*t->label);
    }
    return out;
  }

 private:
  void index_terms(const T* t, const std::string& owner) {
    if (index_.contains(t)) return;
    index_.emplace(t, static_cast<std::uint32_t>(terms_.size()));
    terms_.push_back(t);
    std::visit(
        [&](const auto& n) {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, typename T::Choice>) {
            index_terms(n.left.get(), owner);
            index_terms(n.right.get(), owner);
          } else if constexpr (std::is_same_v<N, typename T::Call>) {
            if (!declares(n.process)) {
              throw ConfigError("process " + owner +
                                " calls undefined process " + n.process);
            }
          } else if constexpr (std::is_same_v<N, typename T::Unicast>) {
            index_terms(n.ok.get(), owner);
            index_terms(n.fail.get(), owner);
          } else {
            index_terms(n.next.get(), owner);
          }
        },
        t->node);
  }

  std::vector<std::pair<std::string, Ptr>> order_;
  std::map<std::string, Ptr, std::less<>> table_;
  std::unordered_map<const T*, std::uint32_t> index_;
  std::vector<const T*> terms_;
};

// State of a sequential process: data record plus control term.
template <class Data, class Msg>
struct ProcState {
  Data data;
  const Term<Data, Msg>* term = nullptr;

  bool operator==(const ProcState& o) const {
    return term == o.term && data == o.data;
  }
};

// -- semantics -------------------------------------------------------------

template <class Data, class Msg>
using SeqTransition = Transition<SeqAction<Msg>, ProcState<Data, Msg>>;

namespace detail {

template <class Data, class Msg>
void seqp_collect(const ProcessSpec<Data, Msg>& spec, const Data& xi,
                  const Term<Data, Msg>& t, std::span<const Msg> menu,
                  std::vector<SeqTransition<Data, Msg>>& out,
                  std::size_t call_depth) {
  using T = Term<Data, Msg>;
  std::visit(
      [&](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, typename T::Assign>) {
          out.push_back({act::Tau{}, {n.update(xi), n.next.get()}});
        } else if constexpr (std::is_same_v<N, typename T::Guard>) {
          for (Data& d : n.choose(xi)) {
            out.push_back({act::Tau{}, {std::move(d), n.next.get()}});
          }
        } else if constexpr (std::is_same_v<N, typename T::Unicast>) {
          Addr dest = n.dest(xi);
          out.push_back({act::Unicast<Msg>{dest, n.msg(xi)}, {xi, n.ok.get()}});
          out.push_back({act::UnicastFail{dest}, {xi, n.fail.get()}});
        } else if constexpr (std::is_same_v<N, typename T::Broadcast>) {
          out.push_back({act::Broadcast<Msg>{n.msg(xi)}, {xi, n.next.get()}});
        } else if constexpr (std::is_same_v<N, typename T::Groupcast>) {
          out.push_back({act::Groupcast<Msg>{n.dests(xi), n.msg(xi)},
                         {xi, n.next.get()}});
        } else if constexpr (std::is_same_v<N, typename T::Send>) {
          out.push_back({act::Send<Msg>{n.msg(xi)}, {xi, n.next.get()}});
        } else if constexpr (std::is_same_v<N, typename T::Receive>) {
          for (const Msg& m : menu) {
            out.push_back({act::Receive<Msg>{m}, {n.update(m, xi), n.next.get()}});
          }
        } else if constexpr (std::is_same_v<N, typename T::Deliver>) {
          out.push_back({act::Deliver{n.data(xi)}, {xi, n.next.get()}});
        } else if constexpr (std::is_same_v<N, typename T::Choice>) {
          seqp_collect(spec, xi, *n.left, menu, out, call_depth);
          seqp_collect(spec, xi, *n.right, menu, out, call_depth);
        } else {
          if (call_depth > spec.term_count()) {
            throw ConfigError("unguarded recursion through process " +
                              n.process);
          }
          seqp_collect(spec, xi, spec.body(n.process), menu, out,
                       call_depth + 1);
        }
      },
      t.node);
}

}  // namespace detail

// All transitions of a sequential process state. Receive prefixes are
// instantiated once per message of `menu`, the messages the synchronising
// context can currently offer.
template <class Data, class Msg>
std::vector<SeqTransition<Data, Msg>> seqp_steps(
    const ProcessSpec<Data, Msg>& spec, const ProcState<Data, Msg>& s,
    std::span<const Msg> menu = {}) {
  std::vector<SeqTransition<Data, Msg>> out;
  detail::seqp_collect(spec, s.data, *s.term, menu, out, 0);
  return out;
}

template <class Data, class Msg>
std::vector<SeqTransition<Data, Msg>> seqp_steps(
    const ProcessSpec<Data, Msg>& spec, const ProcState<Data, Msg>& s,
    const std::vector<Msg>& menu) {
  return seqp_steps(spec, s, std::span<const Msg>(menu));
}

// Labels of a control term: the head label of a prefix, the union over a
// choice, the labels of the called body for a call.
template <class Data, class Msg>
std::set<Label> labels(const ProcessSpec<Data, Msg>& spec,
                       const Term<Data, Msg>& t) {
  using T = Term<Data, Msg>;
  std::set<Label> out;
  std::set<std::string, std::less<>> visited;
  std::vector<const T*> todo{&t};
  while (!todo.empty()) {
    const T* cur = todo.back();
    todo.pop_back();
    if (const auto* c = std::get_if<typename T::Choice>(&cur->node)) {
      todo.push_back(c->right.get());
      todo.push_back(c->left.get());
    } else if (const auto* call = std::get_if<typename T::Call>(&cur->node)) {
      if (visited.insert(call->process).second) {
        todo.push_back(&spec.body(call->process));
      }
    } else if (cur->label) {
      out.insert(*cur->label);
    }
  }
  return out;
}

// Lifts a predicate over (data, label) to process states: it holds iff it
// holds for every label of the control term.
template <class Data, class Msg>
std::function<bool(const ProcState<Data, Msg>&)> onl(
    std::shared_ptr<const ProcessSpec<Data, Msg>> spec,
    std::function<bool(const Data&, const Label&)> pred) {
  return [spec = std::move(spec), pred = std::move(pred)](
             const ProcState<Data, Msg>& s) {
    for (const Label& l : labels(*spec, *s.term)) {
      if (!pred(s.data, l)) return false;
    }
    return true;
  };
}

}  // namespace awn
