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

#include "awn_aodv/aodv/codec.hpp"

namespace aodv {

using awn::ByteReader;
using awn::ByteWriter;

namespace {

void put_set(ByteWriter& w, const AddrSet& s) {
  w.u(s.size());
  for (Addr a : s) w.u(a);
}

AddrSet get_set(ByteReader& r) {
  AddrSet s;
  std::size_t n = r.u();
  s.reserve(n);
  for (std::size_t k = 0; k < n; ++k) s.insert(s.end(), r.u32());
  return s;
}

void put_dests(ByteWriter& w, const Dests& d) {
  w.u(d.size());
  for (const auto& [a, n] : d) {
    w.u(a);
    w.u(n);
  }
}

Dests get_dests(ByteReader& r) {
  Dests d;
  std::size_t n = r.u();
  d.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Addr a = r.u32();
    d.emplace_hint(d.end(), a, r.u32());
  }
  return d;
}

template <class T>
void put_opt(ByteWriter& w, const std::optional<T>& v) {
  w.flag(v.has_value());
  if (v) w.u(static_cast<std::uint64_t>(*v));
}

Message get_message(ByteReader& r) {
  switch (r.u()) {
    case 0: {
      msg::Newpkt m;
      m.data = r.u32();
      m.dip = r.u32();
      return m;
    }
    case 1: {
      msg::Pkt m;
      m.data = r.u32();
      m.dip = r.u32();
      m.sip = r.u32();
      return m;
    }
    case 2: {
      msg::Rreq m;
      m.hops = r.u32();
      if (r.flag()) m.rreqid = r.u32();
      m.dip = r.u32();
      m.dsn = r.u32();
      m.dsk = static_cast<Dsk>(r.u());
      m.oip = r.u32();
      m.osn = r.u32();
      m.sip = r.u32();
      if (r.flag()) m.handled = r.u() != 0;
      return m;
    }
    case 3: {
      msg::Rrep m;
      m.hops = r.u32();
      m.dip = r.u32();
      m.dsn = r.u32();
      m.oip = r.u32();
      m.sip = r.u32();
      return m;
    }
    case 4: {
      msg::Rerr m;
      m.dests = get_dests(r);
      m.sip = r.u32();
      return m;
    }
    default:
      throw std::runtime_error("bad message tag in state encoding");
  }
}

AodvData get_data(ByteReader& r) {
  AodvData xi;
  xi.ip = r.u32();
  xi.sn = r.u32();
  std::size_t n = r.u();
  xi.rreqs.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Addr o = r.u32();
    xi.rreqs.insert(xi.rreqs.end(), RreqKey{o, r.u32()});
  }
  n = r.u();
  xi.store.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Addr d = r.u32();
    Queue q;
    q.flag = static_cast<ReqFlag>(r.u());
    std::size_t len = r.u();
    for (std::size_t j = 0; j < len; ++j) q.data.push_back(r.u32());
    xi.store.emplace_hint(xi.store.end(), d, std::move(q));
  }
  n = r.u();
  xi.rt.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Addr d = r.u32();
    RouteEntry e;
    e.dsn = r.u32();
    e.dsk = static_cast<Dsk>(r.u());
    e.flag = static_cast<Flag>(r.u());
    e.hops = r.u32();
    e.nhip = r.u32();
    if (r.flag()) {
      e.pre = get_set(r);
    } else {
      e.pre.reset();
    }
    xi.rt.emplace_hint(xi.rt.end(), d, std::move(e));
  }
  xi.msg = get_message(r);
  xi.data = r.u32();
  xi.dests = get_dests(r);
  xi.pre = get_set(r);
  xi.rreqid = r.u32();
  xi.dip = r.u32();
  xi.oip = r.u32();
  xi.sip = r.u32();
  xi.dsn = r.u32();
  xi.osn = r.u32();
  xi.dsk = static_cast<Dsk>(r.u());
  xi.hops = r.u32();
  xi.handled = r.flag();
  return xi;
}

}  // namespace

void encode(ByteWriter& w, const Message& m) {
  w.u(m.index());
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, msg::Newpkt>) {
          w.u(x.data);
          w.u(x.dip);
        } else if constexpr (std::is_same_v<T, msg::Pkt>) {
          w.u(x.data);
          w.u(x.dip);
          w.u(x.sip);
        } else if constexpr (std::is_same_v<T, msg::Rreq>) {
          w.u(x.hops);
          put_opt(w, x.rreqid);
          w.u(x.dip);
          w.u(x.dsn);
          w.u(static_cast<std::uint64_t>(x.dsk));
          w.u(x.oip);
          w.u(x.osn);
          w.u(x.sip);
          put_opt(w, x.handled);
        } else if constexpr (std::is_same_v<T, msg::Rrep>) {
          w.u(x.hops);
          w.u(x.dip);
          w.u(x.dsn);
          w.u(x.oip);
          w.u(x.sip);
        } else {
          put_dests(w, x.dests);
          w.u(x.sip);
        }
      },
      m);
}

void encode(ByteWriter& w, const AodvData& xi) {
  w.u(xi.ip);
  w.u(xi.sn);
  w.u(xi.rreqs.size());
  for (const auto& [o, id] : xi.rreqs) {
    w.u(o);
    w.u(id);
  }
  w.u(xi.store.size());
  for (const auto& [d, q] : xi.store) {
    w.u(d);
    w.u(static_cast<std::uint64_t>(q.flag));
    w.u(q.data.size());
    for (Datum x : q.data) w.u(x);
  }
  w.u(xi.rt.size());
  for (const auto& [d, e] : xi.rt) {
    w.u(d);
    w.u(e.dsn);
    w.u(static_cast<std::uint64_t>(e.dsk));
    w.u(static_cast<std::uint64_t>(e.flag));
    w.u(e.hops);
    w.u(e.nhip);
    w.flag(e.pre.has_value());
    if (e.pre) put_set(w, *e.pre);
  }
  encode(w, xi.msg);
  w.u(xi.data);
  put_dests(w, xi.dests);
  put_set(w, xi.pre);
  w.u(xi.rreqid);
  w.u(xi.dip);
  w.u(xi.oip);
  w.u(xi.sip);
  w.u(xi.dsn);
  w.u(xi.osn);
  w.u(static_cast<std::uint64_t>(xi.dsk));
  w.u(xi.hops);
  w.flag(xi.handled);
}

StateCodec::StateCodec(awn::NetTree tree, ModelConfig cfg)
    : tree_(std::move(tree)), spec_(gamma_aodv(cfg)) {}

void StateCodec::put(ByteWriter& w, const NetState& s) const {
  awn::for_each_node(s, [&](const NodeState& n) {
    w.u(n.ip);
    put_set(w, n.neighbours);
    w.u(spec_->index_of(n.proc.first.term));
    aodv::encode(w, n.proc.first.data);
    w.u(n.proc.second.size());
    for (const Message& m : n.proc.second) aodv::encode(w, m);
  });
}

NetState StateCodec::get(ByteReader& r, const awn::NetTree& t) const {
  if (const auto* leaf = std::get_if<awn::NetTree::Node>(&t.v)) {
    NodeState n;
    n.ip = r.u32();
    if (n.ip != leaf->addr) {
      throw std::runtime_error("state encoding does not match network shape");
    }
    n.neighbours = get_set(r);
    n.proc.first.term = spec_->term_at(r.u32());
    n.proc.first.data = get_data(r);
    std::size_t len = r.u();
    for (std::size_t k = 0; k < len; ++k) n.proc.second.push_back(get_message(r));
    return NetState{std::move(n)};
  }
  const auto& p = std::get<awn::NetTree::Par>(t.v);
  auto l = std::make_shared<const NetState>(get(r, *p.left));
  auto rr = std::make_shared<const NetState>(get(r, *p.right));
  return NetState{NetState::Subnet{std::move(l), std::move(rr)}};
}

std::string StateCodec::encode(const NetState& s) const {
  ByteWriter w;
  put(w, s);
  return w.take();
}

std::string StateCodec::encode(const SysState& s) const {
  ByteWriter w;
  w.u(s.newpkt_left.size());
  for (auto b : s.newpkt_left) w.u(b);
  w.u(s.link_pos);
  put(w, s.net);
  return w.take();
}

NetState StateCodec::decode_net(std::string_view bytes) const {
  ByteReader r(bytes);
  NetState s = get(r, tree_);
  if (!r.done()) throw std::runtime_error("trailing bytes in state encoding");
  return s;
}

SysState StateCodec::decode(std::string_view bytes) const {
  ByteReader r(bytes);
  SysState s;
  std::size_t n = r.u();
  for (std::size_t k = 0; k < n; ++k) s.newpkt_left.push_back(r.u32());
  s.link_pos = r.u32();
  s.net = get(r, tree_);
  if (!r.done()) throw std::runtime_error("trailing bytes in state encoding");
  return s;
}

std::string digest(const StateCodec& codec, const SysState& s) {
  return awn::hex64(awn::fnv1a64(codec.encode(s)));
}

}  // namespace aodv
