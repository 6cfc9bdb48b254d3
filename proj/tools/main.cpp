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

// awn-aodv: explore, simulate and inspect AODV network scenarios.
//
// Exit codes: 0 every property holds, 1 violation (trace written),
// 2 usage or configuration error, 3 resource cap hit.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "awn_aodv/explore/check.hpp"
#include "awn_aodv/scenario/scenario.hpp"
#include "awn_aodv/scenario/trace.hpp"
#include "awn_aodv/sim/simulator.hpp"

namespace {

enum Exit : int { kHolds = 0, kViolation = 1, kConfig = 2, kCapped = 3 };

struct Overrides {
  std::string scenario;
  std::string variant;
  std::optional<std::uint32_t> bound;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> steps;
  std::optional<std::uint64_t> max_states;
  std::string suite;
  std::string out;
  bool dump_sigma = false;
};

aodv::Scenario load(const Overrides& o) {
  aodv::Scenario sc = aodv::parse_scenario(o.scenario);
  for (const auto& w : sc.warnings) std::cerr << "warning: " << w << '\n';
  if (!o.variant.empty()) sc.model.variant = aodv::parse_variant(o.variant);
  if (o.bound) sc.bound = o.bound;
  if (o.seed) sc.schedule.seed = *o.seed;
  if (o.steps) sc.schedule.max_steps = *o.steps;
  if (o.max_states) sc.max_states = *o.max_states;
  if (!o.suite.empty()) sc.suite = aodv::Suite::parse(o.suite);
  if (!o.out.empty()) sc.out = o.out;
  return sc;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw awn::ConfigError("cannot write " + path);
  return f;
}

int run_explore(aodv::Scenario sc, bool dump_sigma) {
  awn::Limits limits;
  limits.depth = sc.bound;
  limits.max_states = sc.max_states;
  limits.threads = aodv::threads_from_env();
  aodv::Report rep = aodv::check_loop_freedom(sc.tree(), sc.env, sc.model, limits, sc.suite);

  std::cout << "states " << rep.states << "\ntransitions " << rep.transitions
            << "\ndepth " << rep.depth << "\ntruncated " << rep.truncated
            << "\ncapped " << rep.capped << "\nmilliseconds "
            << static_cast<std::uint64_t>(rep.seconds * 1000) << '\n';
  if (rep.counterexample) {
    const auto& cex = *rep.counterexample;
    std::string path = sc.out.empty() ? "counterexample.jsonl" : sc.out;
    std::ofstream f = open_out(path);
    aodv::TraceWriter w(f, sc, "counterexample", dump_sigma);
    w.initial(cex.trace.init);
    const aodv::SysState* prev = &cex.trace.init;
    std::uint64_t k = 0;
    for (const auto& st : cex.trace.steps) {
      w.step(++k, aodv::changed_nodes(prev->net, st.state.net), st.action, st.state);
      prev = &st.state;
    }
    w.verdict(false, k, "violation", cex.violation);
    std::cout << "violation " << cex.violation.property << ": " << cex.violation.detail
              << "\ncounterexample " << path << " (" << k << " steps)\n";
    return kViolation;
  }
  if (rep.capped) {
    std::cout << "incomplete: state cap of " << sc.max_states << " reached\n";
    return kCapped;
  }
  std::cout << "holds " << sc.suite.str() << '\n';
  return kHolds;
}

int run_simulate(aodv::Scenario sc, bool dump_sigma) {
  std::string path = sc.out.empty() ? "trace.jsonl" : sc.out;
  std::ofstream f = open_out(path);
  aodv::TraceWriter w(f, sc, "simulate", dump_sigma);
  w.initial(aodv::aodv_system(sc.tree(), sc.env, sc.model).init.front());
  aodv::SimResult res;
  try {
    res = aodv::simulate(sc.tree(), sc.env, sc.schedule, sc.model, sc.suite,
                         [&](const aodv::SimStep& st) {
                           w.step(st.index, st.actors, st.action, *st.state);
                         });
  } catch (const aodv::SimError& e) {
    w.verdict(false, 0, std::string("aborted: ") + e.what(), std::nullopt);
    throw awn::ConfigError(e.what());
  }
  std::string reason = res.violation ? "violation" : res.quiescent ? "quiescent" : "step limit";
  w.verdict(!res.violation, res.steps, reason, res.violation);
  std::cout << "steps " << res.steps << "\nstopped " << reason << "\ntrace " << path << '\n';
  if (res.violation) {
    std::cout << "violation " << res.violation->property << ": " << res.violation->detail << '\n';
    return kViolation;
  }
  std::cout << "holds " << sc.suite.str() << '\n';
  return kHolds;
}

int run_graph(const std::string& trace_path, std::optional<std::uint64_t> step,
              std::optional<aodv::Addr> dip) {
  std::ifstream in(trace_path);
  if (!in) throw awn::ConfigError("cannot read trace " + trace_path);
  aodv::TraceFile tr = aodv::read_trace(in);
  if (step && *step > tr.steps.size()) {
    throw awn::ConfigError("trace has only " + std::to_string(tr.steps.size()) + " steps");
  }
  auto states = aodv::replay_trace(tr, step);
  const aodv::SysState& s = states.back();
  aodv::GlobalState sigma = aodv::netmap(s.net);
  aodv::AddrSet nodes;
  std::set<aodv::Addr> dips;
  for (const auto& [ip, xi] : sigma) {
    nodes.insert(ip);
    dips.insert(ip);
    for (const auto& [d, e] : xi.rt) dips.insert(d);
  }
  if (dip) dips = {*dip};
  std::cout << "// step " << states.size() - 1 << '\n';
  for (aodv::Addr d : dips) {
    aodv::RtGraph g = aodv::rt_graph(sigma, d, nodes);
    std::cout << "digraph rt_" << d << " {\n";
    for (const auto& [a, b] : g.arcs) std::cout << "  " << a << " -> " << b << ";\n";
    std::cout << "}\n";
  }
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explore and simulate AODV networks"};
  app.require_subcommand(1);

  Overrides o;
  auto add_common = [&](CLI::App* c) {
    c->add_option("scenario", o.scenario, "Scenario file (JSON)")->required();
    c->add_option("--variant", o.variant, "base, no-rreqid, fwd-rrep, bcast-rerr or fwd-rreq");
    c->add_option("--suite", o.suite, "Comma-separated properties, or all");
    c->add_option("--out", o.out, "Trace or counterexample output path");
    c->add_flag("--dump-sigma", o.dump_sigma, "Include routing data in trace records");
  };
  auto* explore = app.add_subcommand("explore", "Exhaustive bounded exploration");
  add_common(explore);
  explore->add_option("--bound", o.bound, "Maximum depth");
  explore->add_option("--max-states", o.max_states, "State cap (exit 3 when hit)");

  auto* simulate = app.add_subcommand("simulate", "Seeded random run");
  add_common(simulate);
  simulate->add_option("--seed", o.seed, "Random seed");
  simulate->add_option("--steps", o.steps, "Step limit");

  auto* run = app.add_subcommand("run", "Explore or simulate as the scenario's mode says");
  add_common(run);

  std::string trace;
  std::optional<std::uint64_t> step;
  std::optional<aodv::Addr> dip;
  auto* graph = app.add_subcommand("graph", "Print routing graphs of a trace state as DOT");
  graph->add_option("trace", trace, "Trace file")->required();
  graph->add_option("--step", step, "Step index (default: last)");
  graph->add_option("--dip", dip, "Only this destination");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kConfig;
  }

  try {
    if (graph->parsed()) return run_graph(trace, step, dip);
    aodv::Scenario sc = load(o);
    if (explore->parsed()) return run_explore(std::move(sc), o.dump_sigma);
    if (simulate->parsed()) return run_simulate(std::move(sc), o.dump_sigma);
    return sc.mode == aodv::Mode::explore ? run_explore(std::move(sc), o.dump_sigma)
                                          : run_simulate(std::move(sc), o.dump_sigma);
  } catch (const awn::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kCapped;
  }
}
