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

// Bounded breadth-first reachability with state and transition checks.
//
// The visited set holds 128-bit fingerprints of canonical encodings; each
// discovered state keeps only its parent and the index of the transition
// that produced it, so counterexamples are rebuilt by replaying steps from
// an initial state. Only the current and the next BFS layer are held in
// full, as encodings when a decoder is supplied.
//
// Successor generation and checking may run on several threads; results
// are merged in frontier order, so reports do not depend on the thread
// count.

#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "awn_aodv/awn/automaton.hpp"
#include "awn_aodv/explore/bytes.hpp"

namespace awn {

struct Violation {
  std::string property;
  std::string detail;
};

template <class S, class A>
struct Problem {
  Automaton<S, A> automaton;
  // Canonical encoding; equal states must encode equally.
  std::function<std::string(const S&)> encode;
  // Optional; lets the frontier be kept as bytes.
  std::function<S(std::string_view)> decode;
  // Transitions whose action fails `admit` are not followed.
  std::function<bool(const A&)> admit;
  std::function<std::optional<Violation>(const S&)> check_state;
  std::function<std::optional<Violation>(const S&, const A&, const S&)>
      check_step;
};

struct Limits {
  // Maximum BFS depth; states at this depth are not expanded.
  std::optional<std::uint32_t> depth;
  std::uint64_t max_states = 10'000'000;
  unsigned threads = 1;
};

template <class S, class A>
struct TraceStep {
  A action;
  S state;
};

template <class S, class A>
struct Trace {
  S init;
  std::vector<TraceStep<S, A>> steps;
};

template <class S, class A>
struct Counterexample {
  Violation violation;
  Trace<S, A> trace;
};

template <class S, class A>
struct Report {
  std::uint64_t states = 0;
  std::uint64_t transitions = 0;
  std::uint32_t depth = 0;  // deepest layer reached
  bool truncated = false;   // depth bound left states unexpanded
  bool capped = false;      // max_states hit; exploration incomplete
  double seconds = 0;
  std::optional<Counterexample<S, A>> counterexample;

  bool complete() const { return !truncated && !capped; }
};

// Replays a path given as (initial index, transition indices).
template <class S, class A>
Trace<S, A> replay(const Automaton<S, A>& a, std::size_t init_index,
                   const std::vector<std::uint32_t>& choices,
                   const std::function<bool(const A&)>& admit = {}) {
  Trace<S, A> tr{a.init.at(init_index), {}};
  const S* cur = &tr.init;
  for (std::uint32_t c : choices) {
    auto ts = a.steps(*cur);
    if (admit) {
      std::erase_if(ts, [&](const auto& t) { return !admit(t.action); });
    }
    if (c >= ts.size()) throw std::runtime_error("replay diverged");
    tr.steps.push_back({std::move(ts[c].action), std::move(ts[c].target)});
    cur = &tr.steps.back().state;
  }
  return tr;
}

template <class S, class A>
class Explorer {
 public:
  Explorer(Problem<S, A> p, Limits limits)
      : p_(std::move(p)), limits_(limits) {}

  Report<S, A> run() {
    auto t0 = std::chrono::steady_clock::now();
    Report<S, A> rep;
    visited_.clear();
    nodes_.clear();

    std::vector<Entry> frontier;
    for (std::size_t k = 0; k < p_.automaton.init.size(); ++k) {
      const S& s = p_.automaton.init[k];
      std::string bytes = p_.encode(s);
      if (!visited_.insert(fingerprint(bytes)).second) continue;
      auto id = add_node(kRoot, static_cast<std::uint32_t>(k));
      if (p_.check_state) {
        if (auto v = p_.check_state(s)) {
          rep.counterexample = counterexample(*v, id, std::nullopt);
          return finish(rep, t0);
        }
      }
      frontier.push_back(make_entry(id, s, std::move(bytes)));
    }

    std::uint32_t depth = 0;
    while (!frontier.empty()) {
      rep.depth = depth;
      if (limits_.depth && depth >= *limits_.depth) {
        rep.truncated = true;
        break;
      }
      std::vector<Entry> next;
      constexpr std::size_t kChunk = 2048;
      for (std::size_t lo = 0; lo < frontier.size(); lo += kChunk) {
        std::size_t hi = std::min(frontier.size(), lo + kChunk);
        if (expand_chunk(frontier, lo, hi, next, rep)) return finish(rep, t0);
        if (rep.capped) return finish(rep, t0);
      }
      frontier = std::move(next);
      ++depth;
    }
    return finish(rep, t0);
  }

 private:
  static constexpr std::uint32_t kRoot = std::numeric_limits<std::uint32_t>::max();

  struct Node {
    std::uint32_t parent;
    std::uint32_t choice;  // transition index, or init index for roots
  };

  struct Entry {
    std::uint32_t id;
    std::optional<S> state;  // kept when there is no decoder
    std::string bytes;
  };

  struct Succ {
    std::uint32_t choice;
    A action;
    std::optional<S> state;
    std::string bytes;
    Fingerprint fp;
    std::optional<Violation> step_violation;
    std::optional<Violation> state_violation;
    bool fresh = false;
  };

  Entry make_entry(std::uint32_t id, const S& s, std::string bytes) const {
    Entry e{id, std::nullopt, std::move(bytes)};
    if (!p_.decode) e.state = s;
    return e;
  }

  std::uint32_t add_node(std::uint32_t parent, std::uint32_t choice) {
    nodes_.push_back({parent, choice});
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }

  std::vector<Succ> successors(const Entry& e) const {
    S s = e.state ? *e.state : p_.decode(e.bytes);
    auto ts = p_.automaton.steps(s);
    std::vector<Succ> out;
    std::uint32_t c = 0;
    for (auto& t : ts) {
      if (p_.admit && !p_.admit(t.action)) continue;
      Succ x{c++, t.action, std::nullopt, p_.encode(t.target), {}, {}, {}};
      x.fp = fingerprint(x.bytes);
      if (p_.check_step) x.step_violation = p_.check_step(s, t.action, t.target);
      x.state = std::move(t.target);
      out.push_back(std::move(x));
    }
    return out;
  }

  template <class F>
  void parallel_for(std::size_t n, F&& f) const {
    unsigned workers = std::max(1u, limits_.threads);
    if (workers == 1 || n < 2) {
      for (std::size_t i = 0; i < n; ++i) f(i);
      return;
    }
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::size_t i = cursor++; i < n && !failed; i = cursor++) f(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  // Returns true when a violation ends the search.
  bool expand_chunk(const std::vector<Entry>& frontier, std::size_t lo,
                    std::size_t hi, std::vector<Entry>& next,
                    Report<S, A>& rep) {
    std::vector<std::vector<Succ>> out(hi - lo);
    parallel_for(hi - lo, [&](std::size_t i) {
      out[i] = successors(frontier[lo + i]);
    });

    // Sequential merge in frontier order.
    std::vector<Succ*> fresh;
    for (auto& succs : out) {
      for (auto& x : succs) {
        ++rep.transitions;
        if (x.step_violation) continue;
        if (visited_.insert(x.fp).second) {
          x.fresh = true;
          fresh.push_back(&x);
        }
      }
    }
    if (p_.check_state) {
      parallel_for(fresh.size(), [&](std::size_t i) {
        fresh[i]->state_violation = p_.check_state(*fresh[i]->state);
      });
    }

    for (std::size_t i = 0; i < out.size(); ++i) {
      std::uint32_t parent = frontier[lo + i].id;
      for (auto& x : out[i]) {
        if (x.step_violation) {
          rep.states = nodes_.size();
          rep.counterexample =
              counterexample(*x.step_violation, parent, x.choice);
          return true;
        }
        if (!x.fresh) continue;
        std::uint32_t id = add_node(parent, x.choice);
        if (x.state_violation) {
          rep.states = nodes_.size();
          rep.counterexample = counterexample(*x.state_violation, id, std::nullopt);
          return true;
        }
        if (nodes_.size() >= limits_.max_states) {
          rep.capped = true;
          rep.states = nodes_.size();
          return false;
        }
        Entry e{id, std::nullopt, std::move(x.bytes)};
        if (!p_.decode) e.state = std::move(x.state);
        next.push_back(std::move(e));
      }
    }
    rep.states = nodes_.size();
    return false;
  }

  Counterexample<S, A> counterexample(const Violation& v, std::uint32_t id,
                                      std::optional<std::uint32_t> last) const {
    std::vector<std::uint32_t> choices;
    if (last) choices.push_back(*last);
    std::uint32_t cur = id;
    while (nodes_[cur].parent != kRoot) {
      choices.push_back(nodes_[cur].choice);
      cur = nodes_[cur].parent;
    }
    std::reverse(choices.begin(), choices.end());
    return {v, replay(p_.automaton, nodes_[cur].choice, choices, p_.admit)};
  }

  Report<S, A> finish(Report<S, A>& rep,
                      std::chrono::steady_clock::time_point t0) const {
    rep.states = nodes_.size();
    rep.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return std::move(rep);
  }

  Problem<S, A> p_;
  Limits limits_;
  std::unordered_set<Fingerprint, FingerprintHash> visited_;
  std::vector<Node> nodes_;
};

template <class S, class A>
Report<S, A> explore(Problem<S, A> p, Limits limits = {}) {
  return Explorer<S, A>(std::move(p), limits).run();
}

// The set of reachable states, for small systems and tests.
template <class S, class A>
std::vector<S> reachable(const Automaton<S, A>& a,
                         const std::function<bool(const A&)>& admit,
                         std::optional<std::uint32_t> depth,
                         const std::function<std::string(const S&)>& encode) {
  std::vector<S> out;
  Problem<S, A> p;
  p.automaton = a;
  p.encode = encode;
  p.admit = admit;
  p.check_state = [&out](const S& s) -> std::optional<Violation> {
    out.push_back(s);
    return std::nullopt;
  };
  Limits l;
  l.depth = depth;
  explore(std::move(p), l);
  return out;
}

}  // namespace awn
