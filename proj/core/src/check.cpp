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

#include "awn_aodv/explore/check.hpp"

#include <cstdlib>
#include <memory>
#include <string>

namespace aodv {

namespace {

std::optional<awn::Violation> to_violation(const Verdict& v) {
  if (v.holds) return std::nullopt;
  const Witness& w = *v.witness;
  std::string detail = w.detail;
  if (w.dip) detail += " dip=" + std::to_string(*w.dip);
  if (!w.path.empty()) {
    detail += " path=";
    for (std::size_t k = 0; k < w.path.size(); ++k) {
      if (k) detail += "->";
      detail += std::to_string(w.path[k]);
    }
  }
  return awn::Violation{w.property, detail};
}

}  // namespace

unsigned threads_from_env() {
  const char* v = std::getenv("AWN_AODV_THREADS");
  if (!v || !*v) return 1;
  char* end = nullptr;
  unsigned long n = std::strtoul(v, &end, 10);
  if (*end != '\0' || n == 0 || n > 256) {
    throw awn::ConfigError("AWN_AODV_THREADS must be an integer in [1, 256]");
  }
  return static_cast<unsigned>(n);
}

awn::Problem<SysState, NetAction> loop_freedom_problem(const awn::NetTree& t,
                                                    const awn::EnvMenu& menu,
                                                    ModelConfig cfg,
                                                    Suite suite) {
  auto codec = std::make_shared<const StateCodec>(t, cfg);
  auto monitor = std::make_shared<const Monitor>(suite, cfg);
  awn::Problem<SysState, NetAction> p;
  p.automaton = aodv_system(t, menu, cfg);
  p.encode = [codec](const SysState& s) { return codec->encode(s); };
  p.decode = [codec](std::string_view b) { return codec->decode(b); };
  p.check_state = [monitor](const SysState& s) {
    return to_violation(monitor->check_state(s.net));
  };
  p.check_step = [monitor](const SysState& s, const NetAction& a,
                           const SysState& n) {
    return to_violation(monitor->check_step(s.net, a, n.net));
  };
  return p;
}

Report check_loop_freedom(const awn::NetTree& t, const awn::EnvMenu& menu,
                      ModelConfig cfg, awn::Limits limits, Suite suite) {
  if (!awn::wf(t)) throw awn::ConfigError("network term is not well formed");
  return awn::explore(loop_freedom_problem(t, menu, cfg, suite), limits);
}

}  // namespace aodv
