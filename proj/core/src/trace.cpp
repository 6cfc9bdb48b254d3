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

#include "awn_aodv/scenario/trace.hpp"

#include <istream>
#include <ostream>

#include "json.hpp"

namespace aodv {

using nlohmann::json;

namespace {

json entry_json(const RouteEntry& e) {
  json j{{"dsn", e.dsn},
         {"dsk", to_string(e.dsk)},
         {"flag", to_string(e.flag)},
         {"hops", e.hops},
         {"nhip", e.nhip}};
  if (e.pre) j["pre"] = std::vector<Addr>(e.pre->begin(), e.pre->end());
  return j;
}

json sigma_object(const GlobalState& sigma) {
  json out = json::object();
  for (const auto& [ip, xi] : sigma) {
    json rt = json::object();
    for (const auto& [dip, e] : xi.rt) rt[std::to_string(dip)] = entry_json(e);
    json rreqs = json::array();
    for (const auto& [o, id] : xi.rreqs) rreqs.push_back({o, id});
    json store = json::object();
    for (const auto& [dip, q] : xi.store) {
      store[std::to_string(dip)] = {{"req", q.flag == ReqFlag::req}, {"data", q.data}};
    }
    out[std::to_string(ip)] = {{"sn", xi.sn}, {"rt", rt}, {"rreqs", rreqs}, {"store", store}};
  }
  return out;
}

}  // namespace

std::string sigma_json(const GlobalState& sigma) { return sigma_object(sigma).dump(); }

TraceWriter::TraceWriter(std::ostream& out, const Scenario& sc, std::string kind,
                         bool dump_sigma)
    : out_(out), codec_(sc.tree(), sc.model), dump_sigma_(dump_sigma) {
  json h{{"type", "header"},
         {"kind", std::move(kind)},
         {"scenario", json::parse(scenario_json(sc))}};
  out_ << h.dump() << '\n';
}

void TraceWriter::initial(const SysState& s) {
  json j{{"type", "init"}, {"digest", digest(codec_, s)}};
  if (dump_sigma_) j["sigma"] = sigma_object(netmap(s.net));
  out_ << j.dump() << '\n';
}

void TraceWriter::step(std::uint64_t index, const std::vector<Addr>& actors,
                       const NetAction& a, const SysState& s) {
  json j{{"type", "step"},
         {"step", index},
         {"actors", actors},
         {"action", to_string(a)},
         {"digest", digest(codec_, s)}};
  if (dump_sigma_) j["sigma"] = sigma_object(netmap(s.net));
  out_ << j.dump() << '\n';
}

void TraceWriter::verdict(bool holds, std::uint64_t steps, const std::string& reason,
                          const std::optional<awn::Violation>& v) {
  json j{{"type", "verdict"}, {"holds", holds}, {"steps", steps}, {"reason", reason}};
  if (v) j["violation"] = {{"property", v->property}, {"detail", v->detail}};
  out_ << j.dump() << '\n';
  out_.flush();
}

TraceFile read_trace(std::istream& in) {
  TraceFile tr;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  auto bad = [&](const std::string& what) {
    throw awn::ConfigError("trace line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
      std::string type = j.at("type").get<std::string>();
      if (!header) {
        if (type != "header") bad("expected a header record");
        tr.kind = j.at("kind").get<std::string>();
        tr.scenario = parse_scenario_text(j.at("scenario").dump());
        header = true;
      } else if (type == "init") {
        tr.init_digest = j.at("digest").get<std::string>();
      } else if (type == "step") {
        TraceStepRecord r{j.at("step").get<std::uint64_t>(),
                          j.at("action").get<std::string>(),
                          j.at("digest").get<std::string>()};
        if (r.step != tr.steps.size() + 1) bad("steps out of sequence");
        tr.steps.push_back(std::move(r));
      } else if (type == "verdict") {
        tr.holds = j.at("holds").get<bool>();
      } else {
        bad("unknown record type \"" + type + "\"");
      }
    } catch (const json::exception& e) {
      bad(e.what());
    } catch (const awn::ConfigError& e) {
      if (!header) bad(std::string("bad scenario in header: ") + e.what());
      throw;
    }
  }
  if (!header) throw awn::ConfigError("trace has no header record");
  return tr;
}

std::vector<SysState> replay_trace(const TraceFile& tr, std::optional<std::uint64_t> upto) {
  const Scenario& sc = tr.scenario;
  awn::NetTree t = sc.tree();
  StateCodec codec(t, sc.model);
  System sys = aodv_system(t, sc.env, sc.model);
  NetAutomaton net = aodv_network(t, sc.model);
  awn::EnvOffer forced;
  for (const auto& e : sc.schedule.events) {
    if (const auto* n = std::get_if<awn::NewpktOffer>(&e.action)) {
      forced.newpkts.push_back(*n);
    } else {
      forced.links.push_back(std::get<awn::LinkOffer>(e.action));
    }
  }

  std::vector<SysState> out{sys.init.front()};
  if (!tr.init_digest.empty() && digest(codec, out.back()) != tr.init_digest) {
    throw awn::ConfigError("trace initial state does not match its scenario");
  }
  std::uint64_t n = upto ? std::min<std::uint64_t>(*upto, tr.steps.size()) : tr.steps.size();
  for (std::uint64_t k = 0; k < n; ++k) {
    const TraceStepRecord& r = tr.steps[k];
    const SysState& s = out.back();
    std::optional<SysState> hit;
    for (auto& x : sys.steps(s)) {
      if (to_string(x.action) == r.action && digest(codec, x.target) == r.digest) {
        hit = std::move(x.target);
        break;
      }
    }
    if (!hit && (!forced.newpkts.empty() || !forced.links.empty())) {
      for (auto& x : net.steps(s.net, forced)) {
        SysState cand{std::move(x.target), s.newpkt_left, s.link_pos};
        if (to_string(x.action) == r.action && digest(codec, cand) == r.digest) {
          hit = std::move(cand);
          break;
        }
      }
    }
    if (!hit) {
      throw awn::ConfigError("trace diverges at step " + std::to_string(r.step) +
                             ": no enabled " + r.action + " reaches digest " + r.digest);
    }
    out.push_back(std::move(*hit));
  }
  return out;
}

}  // namespace aodv
