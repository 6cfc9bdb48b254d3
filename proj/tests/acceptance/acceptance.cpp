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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "algebra_checks.hpp"
#include "awn_aodv/explore/check.hpp"
#include "awn_aodv/scenario/scenario.hpp"
#include "tree4.hpp"
#include "toy_oracle.hpp"

namespace {

using namespace aodv;
using Clock = std::chrono::steady_clock;

// Pinned limits.
constexpr double kExampleSeconds = 1.0;
constexpr double kLoopFreedomSeconds = 15 * 60;
constexpr std::uint64_t kStateCap = 10'000'000;
constexpr double kAlgebraSeconds = 10.0;
constexpr std::size_t kMinLabels = 90, kMaxLabels = 115;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << " [failed: " << what << "]";
    }
  }
};

Scenario scenario(const std::string& name) {
  return parse_scenario(std::string(AWN_AODV_SCENARIO_DIR "/") + name + ".scn");
}

awn::Limits limits() {
  awn::Limits l;
  l.max_states = kStateCap;
  l.threads = threads_from_env();
  return l;
}

// -- 1 --------------------------------------------------------------------------

void example_reproduction(Outcome& o) {
  auto t0 = Clock::now();
  auto t = tree4::tree();

  // Every interleaving of the unscripted run.
  auto sys = aodv_system(t, tree4::menu());
  StateCodec codec(t, {});
  std::set<std::string> problems;
  std::uint64_t terminal = 0, handled = 0;
  awn::Problem<SysState, NetAction> p;
  p.automaton = sys;
  p.encode = [&](const SysState& s) { return codec.encode(s); };
  p.check_state = [&](const SysState& s) -> std::optional<awn::Violation> {
    for (auto& m : tree4::settled_problems(s.net)) problems.insert(m);
    handled += tree4::request_handled(s.net);
    if (sys.steps(s).empty()) {
      ++terminal;
      for (auto& m : tree4::final_problems(netmap(s.net))) problems.insert(m);
    }
    return std::nullopt;
  };
  auto rep = awn::explore(p);

  // The scripted run: the request is injected at step 0.
  Schedule sched;
  sched.seed = 1;
  sched.max_steps = 1000;
  sched.events.push_back({0, awn::NewpktOffer{tree4::A, tree4::kData, tree4::C}});
  bool delivered = false;
  auto run = simulate(t, {}, sched, {}, Suite::all(), [&](const SimStep& st) {
    if (const auto* d = std::get_if<awn::act::DeliverAt>(&st.action)) {
      delivered |= d->node == tree4::C && d->data == tree4::kData;
    }
  });
  for (auto& m : tree4::final_problems(netmap(run.final_state.net))) problems.insert(m);

  double secs = since(t0);
  o.notes << rep.states << " states, " << terminal << " final states, scripted run "
          << run.steps << " steps, " << secs << " s";
  o.require(rep.complete() && terminal > 0, "exhaustive run incomplete");
  o.require(handled > 0, "request-handled state never reached");
  o.require(run.quiescent && delivered && !run.violation, "scripted run did not deliver cleanly");
  for (const auto& m : problems) o.require(false, m);
  o.require(secs < kExampleSeconds, "runtime over 1 s");
}

// -- 2 --------------------------------------------------------------------------

void loop_freedom_at_desk_scale(Outcome& o) {
  for (const char* name : {"pair", "chain"}) {
    auto sc = scenario(name);
    auto rep = check_loop_freedom(sc.tree(), sc.env, sc.model, limits(), Suite::all());
    o.notes << name << ": " << rep.states << " states, depth " << rep.depth << ", "
            << rep.seconds << " s; ";
    o.require(!rep.counterexample,
              std::string(name) + " violates " +
                  (rep.counterexample ? rep.counterexample->violation.property : ""));
    o.require(rep.complete(), std::string(name) + " not fully explored");
    o.require(rep.states < kStateCap, std::string(name) + " over the state cap");
    o.require(rep.seconds < kLoopFreedomSeconds, std::string(name) + " over 15 minutes");
  }
  o.notes << "chain budgets tightened to originators 1 and 3 (three originators "
             "exceed the state cap)";
}

// -- 3 --------------------------------------------------------------------------

bool replays(const Scenario& sc, const Counterexample& cx) {
  auto sys = aodv_system(sc.tree(), sc.env, sc.model);
  StateCodec codec(sc.tree(), sc.model);
  if (codec.encode(sys.init.at(0)) != codec.encode(cx.trace.init)) return false;
  SysState cur = cx.trace.init;
  for (const auto& st : cx.trace.steps) {
    bool found = false;
    for (const auto& t : sys.steps(cur)) {
      if (to_string(t.action) == to_string(st.action) &&
          codec.encode(t.target) == codec.encode(st.state)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
    cur = st.state;
  }
  Monitor m(sc.suite, sc.model);
  return !m.check_state(cur.net).holds;
}

void mutation_sensitivity(Outcome& o) {
  auto sc = scenario("broken");
  auto rep = check_loop_freedom(sc.tree(), sc.env, sc.model, limits(), sc.suite);
  o.notes << rep.states << " states, " << rep.seconds << " s";
  if (!rep.counterexample) {
    o.require(false, "no violation found");
    return;
  }
  const auto& v = rep.counterexample->violation;
  o.notes << ", " << v.property << " violation after " << rep.counterexample->trace.steps.size()
          << " steps";
  o.require(v.property == "quality" || v.property == "loop-free", "unexpected property");
  o.require(replays(sc, *rep.counterexample), "counterexample does not replay");
}

// -- 4 --------------------------------------------------------------------------

std::uint64_t originator_left_without_route(Variant v) {
  auto t = awn::balanced_tree({{1, {2}}, {2, {1, 3}}, {3, {2}}});
  awn::EnvMenu menu;
  menu.newpkts = {{1, 0, 3, 1}, {2, 0, 3, 1}};
  ModelConfig cfg{v, Mutation::none};
  auto sys = aodv_system(t, menu, cfg);
  StateCodec codec(t, cfg);
  std::uint64_t stuck = 0;
  awn::Problem<SysState, NetAction> p;
  p.automaton = sys;
  p.encode = [&](const SysState& s) { return codec.encode(s); };
  p.check_state = [&](const SysState& s) -> std::optional<awn::Violation> {
    if (sys.steps(s).empty() && !is_valid(netmap(s.net).at(1).rt, 3)) ++stuck;
    return std::nullopt;
  };
  awn::explore(p, limits());
  return stuck;
}

void variants(Outcome& o) {
  for (auto v : {Variant::no_rreqid, Variant::fwd_rrep, Variant::bcast_rerr, Variant::fwd_rreq}) {
    o.notes << to_string(v) << ":";
    for (const char* name : {"pair", "chain"}) {
      auto sc = scenario(name);
      sc.model.variant = v;
      auto rep = check_loop_freedom(sc.tree(), sc.env, sc.model, limits(), Suite::all());
      o.notes << " " << name << " " << rep.states;
      o.require(!rep.counterexample && rep.complete(), to_string(v) + " on " + name);
    }
    o.notes << "; ";
  }
  auto base = originator_left_without_route(Variant::base);
  auto fwd = originator_left_without_route(Variant::fwd_rrep);
  o.notes << "reply dropped in " << base << " base final states, " << fwd << " fwd-rrep";
  o.require(base > 0 && fwd == 0, "fwd-rrep does not differ from base");
}

// -- 5 --------------------------------------------------------------------------

void table_algebra(Outcome& o) {
  auto t0 = Clock::now();
  std::uint64_t cases = 0;
  auto take = [&](const algebra::Result& r, const char* what) {
    cases += r.cases;
    for (const auto& f : r.failures) o.require(false, std::string(what) + ": " + f);
  };
  take(algebra::definitions_match_oracle(), "oracle");
  take(algebra::order_is_strict_partial_order(), "order");
  take(algebra::update_monotone(), "update");
  take(algebra::invalidate_preserves_kd(), "invalidate");
  double secs = since(t0);
  o.notes << cases << " cases, " << secs << " s";
  o.require(secs < kAlgebraSeconds, "runtime over 10 s");
}

// -- 6 --------------------------------------------------------------------------

void semantics_oracle(Outcome& o) {
  for (auto c : {toy::Case::unicast_fail, toy::Case::choice, toy::Case::recursion}) {
    auto cmp = toy::compare(c);
    o.notes << toy::name(c) << " " << cmp.library_states << "/" << cmp.oracle_states << "; ";
    o.require(cmp.agree(), std::string(toy::name(c)) + ": " +
                               (cmp.mismatches.empty() ? "state counts differ" : cmp.mismatches[0]));
  }
  auto n = gamma_aodv()->all_labels().size();
  o.notes << n << " control locations";
  o.require(n >= kMinLabels && n <= kMaxLabels, "location count out of range");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> all{
      {1, "example network tables", example_reproduction},
      {2, "loop freedom at desk scale", loop_freedom_at_desk_scale},
      {3, "checker catches stale updates", mutation_sensitivity},
      {4, "protocol variants", variants},
      {5, "routing-table algebra", table_algebra},
      {6, "semantics against product oracle", semantics_oracle},
  };
  bool ok = true;
  for (const auto& c : all) {
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    ok = ok && o.pass;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title
              << "  (" << o.notes.str() << ")" << std::endl;
  }
  return ok ? 0 : 1;
}
