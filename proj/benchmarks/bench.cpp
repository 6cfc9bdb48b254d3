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


#include <benchmark/benchmark.h>

#include "awn_aodv/explore/check.hpp"
#include "awn_aodv/sim/simulator.hpp"

namespace {

awn::NetTree pair_tree() { return awn::balanced_tree({{1, {2}}, {2, {1}}}); }

awn::EnvMenu pair_menu(std::uint32_t budget) {
  awn::EnvMenu m;
  m.newpkts = {{1, 0, 2, budget}, {2, 0, 1, budget}};
  return m;
}

void BM_ExplorePair(benchmark::State& st) {
  awn::Limits l;
  l.threads = static_cast<unsigned>(st.range(1));
  std::uint64_t states = 0;
  for (auto _ : st) {
    auto rep = aodv::check_loop_freedom(pair_tree(), pair_menu(static_cast<std::uint32_t>(st.range(0))),
                                    {}, l);
    states = rep.states;
  }
  st.counters["states"] = static_cast<double>(states);
  st.counters["states/s"] =
      benchmark::Counter(static_cast<double>(states) * st.iterations(), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_ExplorePair)->Args({1, 1})->Args({2, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);

void BM_Update(benchmark::State& st) {
  aodv::RoutingTable rt;
  for (aodv::Addr d = 1; d <= static_cast<aodv::Addr>(st.range(0)); ++d) {
    rt.emplace(d, aodv::RouteEntry{2, aodv::Dsk::kno, aodv::Flag::val, 3, 1, aodv::AddrSet{}});
  }
  aodv::RouteEntry fresh{3, aodv::Dsk::kno, aodv::Flag::val, 2, 2, aodv::AddrSet{4}};
  for (auto _ : st) {
    benchmark::DoNotOptimize(aodv::update(rt, 1, fresh, aodv::Mutation::none));
  }
}
BENCHMARK(BM_Update)->Arg(4)->Arg(64);

void BM_SimulateRing(benchmark::State& st) {
  std::vector<std::pair<aodv::Addr, aodv::AddrSet>> nodes;
  const aodv::Addr n = static_cast<aodv::Addr>(st.range(0));
  for (aodv::Addr a = 1; a <= n; ++a) {
    nodes.emplace_back(a, aodv::AddrSet{a % n + 1, (a + n - 2) % n + 1});
  }
  awn::EnvMenu menu;
  for (aodv::Addr a = 1; a <= n; a += 2) menu.newpkts.push_back({a, a, (a + n / 2 - 1) % n + 1, 1000});
  aodv::Schedule sched;
  sched.seed = 1;
  sched.max_steps = 2000;
  for (auto _ : st) {
    auto r = aodv::simulate(awn::balanced_tree(nodes), menu, sched);
    benchmark::DoNotOptimize(r.steps);
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(sched.max_steps));
}
BENCHMARK(BM_SimulateRing)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
