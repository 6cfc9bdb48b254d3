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

// Canonical encoding of AODV network states. Sets and maps are written in
// key order and queues front to back; control terms by their index in the
// process table. Decoding needs the network shape and the model the state
// came from.

#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "awn_aodv/aodv/instance.hpp"
#include "awn_aodv/explore/bytes.hpp"

namespace aodv {

void encode(awn::ByteWriter& w, const Message& m);
void encode(awn::ByteWriter& w, const AodvData& xi);

class StateCodec {
 public:
  StateCodec(awn::NetTree tree, ModelConfig cfg);

  std::string encode(const NetState& s) const;
  std::string encode(const SysState& s) const;
  NetState decode_net(std::string_view bytes) const;
  SysState decode(std::string_view bytes) const;

 private:
  void put(awn::ByteWriter& w, const NetState& s) const;
  NetState get(awn::ByteReader& r, const awn::NetTree& t) const;

  awn::NetTree tree_;
  std::shared_ptr<const Spec> spec_;
};

// Short hex digest of a system state, as written to traces.
std::string digest(const StateCodec& codec, const SysState& s);

}  // namespace aodv
