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

#include "awn_aodv/aodv/message.hpp"

namespace aodv {

namespace {

std::string s(std::uint32_t v) { return std::to_string(v); }

std::string dests_str(const awn::FlatMap<Addr, Sqn>& d) {
  std::string out = "{";
  bool first = true;
  for (const auto& [a, n] : d) {
    if (!first) out += ',';
    out += s(a) + ":" + s(n);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string msg::to_string(const Message& m) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, msg::Newpkt>) {
          return "newpkt(" + s(x.data) + "," + s(x.dip) + ")";
        } else if constexpr (std::is_same_v<T, msg::Pkt>) {
          return "pkt(" + s(x.data) + "," + s(x.dip) + "," + s(x.sip) + ")";
        } else if constexpr (std::is_same_v<T, msg::Rreq>) {
          std::string out = "rreq(" + s(x.hops) + ",";
          if (x.rreqid) out += s(*x.rreqid) + ",";
          out += s(x.dip) + "," + s(x.dsn) + "," + to_string(x.dsk) + "," +
                 s(x.oip) + "," + s(x.osn) + "," + s(x.sip);
          if (x.handled) out += *x.handled ? ",handled" : ",unhandled";
          return out + ")";
        } else if constexpr (std::is_same_v<T, msg::Rrep>) {
          return "rrep(" + s(x.hops) + "," + s(x.dip) + "," + s(x.dsn) + "," +
                 s(x.oip) + "," + s(x.sip) + ")";
        } else {
          return "rerr(" + dests_str(x.dests) + "," + s(x.sip) + ")";
        }
      },
      m);
}

std::size_t arity(const Message& m) {
  return std::visit(
      [](const auto& x) -> std::size_t {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, msg::Newpkt>) {
          return 2;
        } else if constexpr (std::is_same_v<T, msg::Pkt>) {
          return 3;
        } else if constexpr (std::is_same_v<T, msg::Rreq>) {
          return 7 + (x.rreqid ? 1 : 0) + (x.handled ? 1 : 0);
        } else if constexpr (std::is_same_v<T, msg::Rrep>) {
          return 5;
        } else {
          return 2;
        }
      },
      m);
}

std::optional<Addr> sender(const Message& m) {
  return std::visit(
      [](const auto& x) -> std::optional<Addr> {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, msg::Newpkt>) {
          return std::nullopt;
        } else {
          return x.sip;
        }
      },
      m);
}

}  // namespace aodv
