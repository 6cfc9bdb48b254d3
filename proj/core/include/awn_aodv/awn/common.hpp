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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/container/flat_map.hpp>
#include <boost/container/flat_set.hpp>

namespace awn {

// Node addresses and data tokens are plain naturals.
using Addr = std::uint32_t;
using Datum = std::uint32_t;

// Sorted, so iteration order is canonical.
using AddrSet = boost::container::flat_set<Addr>;

template <class K, class V>
using FlatMap = boost::container::flat_map<K, V>;

// Raised for malformed models or scenarios: undefined process names,
// ill-formed network terms, unknown property names.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline AddrSet set_union(const AddrSet& a, const AddrSet& b) {
  AddrSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline AddrSet set_intersection(const AddrSet& a, const AddrSet& b) {
  AddrSet out;
  for (Addr x : a) {
    if (b.contains(x)) out.insert(out.end(), x);
  }
  return out;
}

inline bool disjoint(const AddrSet& a, const AddrSet& b) {
  for (Addr x : a) {
    if (b.contains(x)) return false;
  }
  return true;
}

inline bool subset_of(const AddrSet& a, const AddrSet& b) {
  for (Addr x : a) {
    if (!b.contains(x)) return false;
  }
  return true;
}

inline std::string to_string(const AddrSet& s) {
  std::string out = "{";
  bool first = true;
  for (Addr a : s) {
    if (!first) out += ',';
    out += std::to_string(a);
    first = false;
  }
  return out + "}";
}

}  // namespace awn
