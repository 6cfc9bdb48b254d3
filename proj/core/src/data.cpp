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

#include "awn_aodv/aodv/data.hpp"

#include <algorithm>

namespace aodv {

AodvData clear_locals(const AodvData& xi) {
  AodvData out;
  out.ip = xi.ip;
  out.sn = xi.sn;
  out.rreqs = xi.rreqs;
  out.store = xi.store;
  out.rt = xi.rt;
  // Any fixed address other than ip will do.
  out.sip = xi.ip + 1;
  return out;
}

AodvData aodv_init(Addr ip) {
  AodvData xi;
  xi.ip = ip;
  xi.sn = 1;
  return clear_locals(xi);
}

Store add(Datum d, Addr dip, const Store& s) {
  Store out = s;
  auto [it, inserted] = out.try_emplace(dip);
  if (inserted) it->second.flag = ReqFlag::req;
  it->second.data.push_back(d);
  return out;
}

Store drop(Addr dip, const Store& s) {
  Store out = s;
  auto it = out.find(dip);
  if (it == out.end()) return out;
  auto& q = it->second.data;
  if (!q.empty()) q.erase(q.begin());
  if (q.empty()) out.erase(it);
  return out;
}

Store set_rrf(const Store& s, const Dests& dests) {
  Store out = s;
  for (const auto& [d, _] : dests) {
    auto it = out.find(d);
    if (it != out.end()) it->second.flag = ReqFlag::req;
  }
  return out;
}

Store unset_rrf(const Store& s, Addr dip) {
  Store out = s;
  auto it = out.find(dip);
  if (it != out.end()) it->second.flag = ReqFlag::noreq;
  return out;
}

AddrSet qD(const Store& s) {
  AddrSet out;
  for (const auto& [d, _] : s) out.insert(out.end(), d);
  return out;
}

std::optional<Datum> queue_head(const Store& s, Addr dip) {
  auto it = s.find(dip);
  if (it == s.end() || it->second.data.empty()) return std::nullopt;
  return it->second.data.front();
}

std::optional<ReqFlag> req_flag(const Store& s, Addr dip) {
  auto it = s.find(dip);
  if (it == s.end()) return std::nullopt;
  return it->second.flag;
}

std::uint32_t nrreqid(const RreqSet& rreqs, Addr ip) {
  std::uint32_t best = 0;
  for (const auto& [o, id] : rreqs) {
    if (o == ip) best = std::max(best, id);
  }
  return best + 1;
}

}  // namespace aodv
