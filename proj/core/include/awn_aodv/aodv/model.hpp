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

// The AODV process specification and its variants.

#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "awn_aodv/aodv/data.hpp"
#include "awn_aodv/aodv/message.hpp"
#include "awn_aodv/awn/seqp.hpp"

namespace aodv {

enum class Variant : std::uint8_t {
  base,
  // Requests identified by (originator, originator sequence number).
  no_rreqid,
  // Intermediate nodes forward every route reply they can.
  fwd_rrep,
  // No precursor lists; route errors are broadcast.
  bcast_rerr,
  // Requests keep travelling after an intermediate reply, flagged handled.
  fwd_rreq,
};

struct ModelConfig {
  Variant variant = Variant::base;
  Mutation mutation = Mutation::none;
  bool operator==(const ModelConfig&) const = default;
};

std::string to_string(Variant v);
// Accepts base, no-rreqid, fwd-rrep, bcast-rerr, fwd-rreq.
Variant parse_variant(std::string_view name);
std::string to_string(Mutation m);
Mutation parse_mutation(std::string_view name);

using Spec = awn::ProcessSpec<AodvData, Message>;
using ProcState = awn::ProcState<AodvData, Message>;

// Process names.
inline constexpr const char* kPAodv = "PAodv";
inline constexpr const char* kPNewPkt = "PNewPkt";
inline constexpr const char* kPPkt = "PPkt";
inline constexpr const char* kPRreq = "PRreq";
inline constexpr const char* kPRrep = "PRrep";
inline constexpr const char* kPRerr = "PRerr";

// The six-process specification for one configuration. Specs are built
// once per configuration and shared, so control-term pointers of states
// built from the same configuration are comparable.
std::shared_ptr<const Spec> gamma_aodv(ModelConfig cfg = {});

inline std::shared_ptr<const Spec> apply_variant(Variant v) {
  return gamma_aodv({v, Mutation::none});
}

// Route entries as the given configuration stores them.
RouteEntry make_entry(ModelConfig cfg, Sqn dsn, Dsk dsk, Flag flag,
                      std::uint32_t hops, Addr nhip);

// Number of fields of a route entry under the variant.
std::size_t route_entry_arity(Variant v);

}  // namespace aodv
