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


#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "awn_aodv/scenario/trace.hpp"
#include "tree4.hpp"

namespace aodv {
namespace {

std::string run_to_text(const Scenario& sc) {
  std::ostringstream out;
  TraceWriter w(out, sc, "simulate", true);
  w.initial(aodv_system(sc.tree(), sc.env, sc.model).init.front());
  auto r = simulate(sc.tree(), sc.env, sc.schedule, sc.model, sc.suite,
                    [&](const SimStep& st) { w.step(st.index, st.actors, st.action, *st.state); });
  w.verdict(!r.violation, r.steps, r.quiescent ? "quiescent" : "limit", r.violation);
  return out.str();
}

Scenario tree4_scenario() {
  return parse_scenario(AWN_AODV_SCENARIO_DIR "/tree4.scn");
}

TEST(Simulate, SameSeedSameBytes) {
  auto sc = tree4_scenario();
  auto a = run_to_text(sc);
  auto b = run_to_text(sc);
  EXPECT_EQ(a, b);
  sc.schedule.seed = 8;
  EXPECT_NE(run_to_text(sc), a);
}

TEST(Simulate, Tree4TablesForManySeeds) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Schedule s;
    s.seed = seed;
    s.max_steps = 1000;
    auto r = simulate(tree4::tree(), tree4::menu(), s);
    ASSERT_TRUE(r.quiescent) << "seed " << seed;
    EXPECT_FALSE(r.violation);
    for (const auto& m : tree4::final_problems(netmap(r.final_state.net))) {
      ADD_FAILURE() << "seed " << seed << ": " << m;
    }
  }
}

TEST(Simulate, ScriptedRequest) {
  // No environment budget; the packet is injected by the schedule.
  Schedule s;
  s.seed = 1;
  s.max_steps = 1000;
  s.events.push_back({0, awn::NewpktOffer{tree4::A, tree4::kData, tree4::C}});
  std::vector<std::string> delivered;
  bool first_forced = false;
  auto r = simulate(tree4::tree(), {}, s, {}, Suite::all(), [&](const SimStep& st) {
    if (st.index == 1) first_forced = st.forced;
    if (const auto* d = std::get_if<awn::act::DeliverAt>(&st.action)) {
      delivered.push_back(std::to_string(d->node) + ":" + std::to_string(d->data));
    }
  });
  EXPECT_TRUE(first_forced);
  EXPECT_TRUE(r.quiescent);
  EXPECT_EQ(delivered, std::vector<std::string>{"3:7"});
  EXPECT_TRUE(tree4::final_problems(netmap(r.final_state.net)).empty());
}

TEST(Simulate, ForcedEventMustBeEnabled) {
  Schedule s;
  s.events.push_back({0, awn::NewpktOffer{9, 1, 1}});
  EXPECT_THROW(simulate(tree4::tree(), tree4::menu(), s), SimError);
}

TEST(Simulate, StepLimitIsNotAnError) {
  Schedule s;
  s.max_steps = 5;
  auto r = simulate(tree4::tree(), tree4::menu(), s);
  EXPECT_EQ(r.steps, 5u);
  EXPECT_FALSE(r.quiescent);
  EXPECT_FALSE(r.violation);
}

TEST(Simulate, PendingEventFiresWhenIdle) {
  Schedule s;
  s.events.push_back({900, awn::LinkOffer{false, tree4::A, tree4::B}});
  std::uint64_t fired_at = 0;
  auto r = simulate(tree4::tree(), {}, s, {}, Suite::all(), [&](const SimStep& st) {
    if (st.forced) fired_at = st.index;
  });
  EXPECT_EQ(fired_at, 1u);
  EXPECT_TRUE(r.quiescent);
}

TEST(Simulate, MutantRunsStayCheckable) {
  auto sc = parse_scenario(AWN_AODV_SCENARIO_DIR "/broken.scn");
  // Random runs of the mutant may or may not hit the bad interleaving; the
  // step invariants must at least stay checkable for thousands of steps.
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Schedule s = sc.schedule;
    s.seed = seed;
    s.max_steps = 2000;
    EXPECT_NO_THROW(simulate(sc.tree(), sc.env, s, sc.model, Suite::all()));
  }
}

// Ring of ten with random chords, five busy originators and a few link
// changes along the way.
Scenario random_ten(std::uint64_t seed) {
  std::mt19937 g(static_cast<unsigned>(seed));
  Scenario sc;
  std::map<Addr, AddrSet> adj;
  auto link = [&](Addr a, Addr b) {
    adj[a].insert(b);
    adj[b].insert(a);
  };
  for (Addr a = 1; a <= 10; ++a) link(a, a % 10 + 1);
  std::vector<std::pair<Addr, Addr>> chords;
  while (chords.size() < 4) {
    Addr a = 1 + g() % 10, b = 1 + g() % 10;
    if (a == b || adj[a].contains(b)) continue;
    link(a, b);
    chords.emplace_back(a, b);
  }
  for (auto& [a, r] : adj) sc.nodes.emplace_back(a, r);
  for (Addr o : {1u, 3u, 5u, 7u, 9u}) {
    Addr d = 1 + g() % 10;
    if (d == o) d = o % 10 + 1;
    sc.env.newpkts.push_back({o, o, d, 200});
  }
  sc.schedule.seed = seed;
  sc.schedule.max_steps = 10000;
  std::uint64_t at = 1000;
  for (auto [a, b] : chords) {
    sc.schedule.events.push_back({at, awn::LinkOffer{false, a, b}});
    sc.schedule.events.push_back({at + 1500, awn::LinkOffer{true, a, b}});
    at += 500;
  }
  std::stable_sort(sc.schedule.events.begin(), sc.schedule.events.end(),
                   [](const auto& x, const auto& y) { return x.step < y.step; });
  return sc;
}

TEST(Simulate, TenNodesTenThousandSteps) {
  auto sc = random_ten(2026);
  auto r = simulate(sc.tree(), sc.env, sc.schedule, sc.model, Suite::all());
  EXPECT_EQ(r.steps, 10000u);
  EXPECT_FALSE(r.quiescent);
  EXPECT_FALSE(r.violation) << r.violation->property << ": " << r.violation->detail;
}

TEST(Trace, ReplayReproducesEveryState) {
  auto sc = tree4_scenario();
  sc.schedule.seed = 3;
  std::ostringstream out;
  TraceWriter w(out, sc, "simulate", false);
  StateCodec codec(sc.tree(), sc.model);
  auto sys = aodv_system(sc.tree(), sc.env, sc.model);
  std::vector<std::string> seen{codec.encode(sys.init.front())};
  w.initial(sys.init.front());
  auto r = simulate(sc.tree(), sc.env, sc.schedule, sc.model, sc.suite, [&](const SimStep& st) {
    w.step(st.index, st.actors, st.action, *st.state);
    seen.push_back(codec.encode(*st.state));
  });
  w.verdict(true, r.steps, "quiescent", std::nullopt);

  std::istringstream in(out.str());
  auto tf = read_trace(in);
  EXPECT_EQ(tf.kind, "simulate");
  EXPECT_EQ(tf.steps.size(), r.steps);
  EXPECT_EQ(tf.holds, true);
  auto states = replay_trace(tf);
  ASSERT_EQ(states.size(), seen.size());
  for (std::size_t k = 0; k < states.size(); ++k) {
    EXPECT_EQ(codec.encode(states[k]), seen[k]) << "state " << k;
  }
  EXPECT_EQ(replay_trace(tf, 10).size(), 11u);
}

TEST(Trace, TamperedDigestRejected) {
  auto text = run_to_text(tree4_scenario());
  std::istringstream in(text);
  auto tf = read_trace(in);
  ASSERT_GT(tf.steps.size(), 3u);
  tf.steps[2].digest = std::string(16, '0');
  EXPECT_THROW(replay_trace(tf), awn::ConfigError);
}

}  // namespace
}  // namespace aodv
