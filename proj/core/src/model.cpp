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

#include "awn_aodv/aodv/model.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace aodv {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::base: return "base";
    case Variant::no_rreqid: return "no-rreqid";
    case Variant::fwd_rrep: return "fwd-rrep";
    case Variant::bcast_rerr: return "bcast-rerr";
    case Variant::fwd_rreq: return "fwd-rreq";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  for (Variant v : {Variant::base, Variant::no_rreqid, Variant::fwd_rrep,
                    Variant::bcast_rerr, Variant::fwd_rreq}) {
    if (to_string(v) == name) return v;
  }
  throw awn::ConfigError("unknown variant '" + std::string(name) + "'");
}

std::string to_string(Mutation m) {
  return m == Mutation::stale_update ? "stale-update" : "none";
}

Mutation parse_mutation(std::string_view name) {
  if (name == "none") return Mutation::none;
  if (name == "stale-update") return Mutation::stale_update;
  throw awn::ConfigError("unknown mutation '" + std::string(name) + "'");
}

RouteEntry make_entry(ModelConfig cfg, Sqn dsn, Dsk dsk, Flag flag,
                      std::uint32_t hops, Addr nhip) {
  RouteEntry r{dsn, dsk, flag, hops, nhip, AddrSet{}};
  if (cfg.variant == Variant::bcast_rerr) r.pre.reset();
  return r;
}

std::size_t route_entry_arity(Variant v) {
  return v == Variant::bcast_rerr ? 5 : 6;
}

namespace {

using D = AodvData;
using X = awn::Terms<D, Message>;
using Ptr = X::Ptr;
using P = X::P;

Addr the_nhop(const RoutingTable& rt, Addr dip) {
  auto n = nhop(rt, dip);
  if (!n) throw UndefinedRoute(dip);
  return *n;
}

class Builder {
 public:
  explicit Builder(ModelConfig cfg) : cfg_(cfg) {}

  bool precursors() const { return cfg_.variant != Variant::bcast_rerr; }

  RouteEntry entry(Sqn dsn, Dsk dsk, std::uint32_t hops, Addr nhip) const {
    return make_entry(cfg_, dsn, dsk, Flag::val, hops, nhip);
  }

  RoutingTable upd(const RoutingTable& rt, Addr dip,
                   const RouteEntry& r) const {
    return update(rt, dip, r, cfg_.mutation);
  }

  Ptr done() const {
    return X::assign([](const D& x) { return clear_locals(x); }) >>
           X::call(kPAodv);
  }

  // Route error towards the interested neighbours: a groupcast to the
  // precursors, or a broadcast when precursors are not kept.
  P rerr_cast(std::function<AddrSet(const D&)> to) const {
    auto m = [](const D& x) -> Message { return msg::Rerr{x.dests, x.ip}; };
    if (precursors()) return X::groupcast(std::move(to), m);
    return X::broadcast(m);
  }

  // Handling of a failed unicast to the next hop `hop`: every valid route
  // over that hop is invalidated, requests are re-armed for those
  // destinations, and the affected neighbours are told.
  Ptr link_break(std::function<Addr(const D&)> hop) const {
    auto compute = X::assign([hop](D x) {
      Addr h = hop(x);
      Dests d;
      for (const auto& [rip, r] : x.rt) {
        if (r.flag == Flag::val && r.nhip == h) d.emplace(rip, inc(r.dsn));
      }
      x.dests = std::move(d);
      return x;
    });
    auto inval = X::assign([](D x) {
      x.rt = invalidate(x.rt, x.dests);
      return x;
    });
    auto rearm = X::assign([](D x) {
      x.store = set_rrf(x.store, x.dests);
      return x;
    });
    if (!precursors()) {
      return compute >> inval >> rearm >> rerr_cast(nullptr) >> done();
    }
    return compute >> inval >> rearm >> collect_pre() >> filter_dests() >>
           rerr_cast([](const D& x) { return x.pre; }) >> done();
  }

  P collect_pre() const {
    return X::assign([](D x) {
      AddrSet pre;
      for (const auto& [rip, _] : x.dests) {
        AddrSet p = precs(x.rt, rip);
        pre.insert(p.begin(), p.end());
      }
      x.pre = std::move(pre);
      return x;
    });
  }

  // Only destinations somebody depends on are reported.
  P filter_dests() const {
    return X::assign([](D x) {
      Dests keep;
      for (const auto& [rip, s] : x.dests) {
        if (!precs(x.rt, rip).empty()) keep.emplace(rip, s);
      }
      x.dests = std::move(keep);
      return x;
    });
  }

  P update_sender() const {
    return X::assign([self = *this](D x) {
      x.rt = self.upd(x.rt, x.sip, self.entry(0, Dsk::unk, 1, x.sip));
      return x;
    });
  }

  Ptr paodv() const {
    auto on_receive =
        X::receive([](const Message& m, D x) {
          x.msg = m;
          return x;
        }) >>
        X::choice({
            X::guard([](const D& x) {
              std::vector<D> out;
              if (const auto* n = std::get_if<msg::Newpkt>(&x.msg)) {
                D y = x;
                y.data = n->data;
                y.dip = n->dip;
                out.push_back(std::move(y));
              }
              return out;
            }) >> X::call(kPNewPkt),
            X::guard([](const D& x) {
              std::vector<D> out;
              if (const auto* p = std::get_if<msg::Pkt>(&x.msg)) {
                D y = x;
                y.data = p->data;
                y.dip = p->dip;
                y.sip = p->sip;
                out.push_back(std::move(y));
              }
              return out;
            }) >> X::call(kPPkt),
            X::guard([](const D& x) {
              std::vector<D> out;
              if (const auto* q = std::get_if<msg::Rreq>(&x.msg)) {
                D y = x;
                y.hops = q->hops;
                y.rreqid = q->rreqid.value_or(0);
                y.dip = q->dip;
                y.dsn = q->dsn;
                y.dsk = q->dsk;
                y.oip = q->oip;
                y.osn = q->osn;
                y.sip = q->sip;
                y.handled = q->handled.value_or(false);
                out.push_back(std::move(y));
              }
              return out;
            }) >> update_sender() >> X::call(kPRreq),
            X::guard([](const D& x) {
              std::vector<D> out;
              if (const auto* r = std::get_if<msg::Rrep>(&x.msg)) {
                D y = x;
                y.hops = r->hops;
                y.dip = r->dip;
                y.dsn = r->dsn;
                y.oip = r->oip;
                y.sip = r->sip;
                out.push_back(std::move(y));
              }
              return out;
            }) >> update_sender() >> X::call(kPRrep),
            X::guard([](const D& x) {
              std::vector<D> out;
              if (const auto* e = std::get_if<msg::Rerr>(&x.msg)) {
                D y = x;
                y.dests = e->dests;
                y.sip = e->sip;
                out.push_back(std::move(y));
              }
              return out;
            }) >> update_sender() >> X::call(kPRerr),
        });

    auto send_data =
        X::guard([](const D& x) {
          std::vector<D> out;
          for (Addr d : awn::set_intersection(qD(x.store), vD(x.rt))) {
            D y = x;
            y.dip = d;
            out.push_back(std::move(y));
          }
          return out;
        }) >>
        X::assign([](D x) {
          x.data = *queue_head(x.store, x.dip);
          return x;
        }) >>
        X::unicast([](const D& x) { return the_nhop(x.rt, x.dip); },
                   [](const D& x) -> Message {
                     return msg::Pkt{x.data, x.dip, x.ip};
                   },
                   X::assign([](D x) {
                     x.store = drop(x.dip, x.store);
                     return x;
                   }) >> done(),
                   link_break([](const D& x) { return the_nhop(x.rt, x.dip); }));

    bool with_id = cfg_.variant != Variant::no_rreqid;
    bool with_flag = cfg_.variant == Variant::fwd_rreq;
    auto originate_head =
        X::guard([](const D& x) {
          std::vector<D> out;
          AddrSet valid = vD(x.rt);
          for (const auto& [d, q] : x.store) {
            if (!valid.contains(d) && q.flag == ReqFlag::req) {
              D y = x;
              y.dip = d;
              out.push_back(std::move(y));
            }
          }
          return out;
        }) >>
        X::assign([](D x) {
          x.store = unset_rrf(x.store, x.dip);
          return x;
        }) >>
        X::assign([](D x) {
          x.sn = x.sn + 1;
          return x;
        });
    auto rreq_msg = [with_id, with_flag](const D& x) -> Message {
      msg::Rreq q;
      q.hops = 0;
      if (with_id) q.rreqid = x.rreqid;
      q.dip = x.dip;
      q.dsn = sqn(x.rt, x.dip);
      q.dsk = sqnf(x.rt, x.dip).value_or(Dsk::unk);
      q.oip = x.ip;
      q.osn = x.sn;
      q.sip = x.ip;
      if (with_flag) q.handled = false;
      return q;
    };
    Ptr originate;
    if (with_id) {
      originate = originate_head >>
                  X::assign([](D x) {
                    x.rreqid = nrreqid(x.rreqs, x.ip);
                    return x;
                  }) >>
                  X::assign([](D x) {
                    x.rreqs.insert(RreqKey{x.ip, x.rreqid});
                    return x;
                  }) >>
                  X::broadcast(rreq_msg) >> done();
    } else {
      originate = originate_head >>
                  X::assign([](D x) {
                    x.rreqs.insert(RreqKey{x.ip, x.sn});
                    return x;
                  }) >>
                  X::broadcast(rreq_msg) >> done();
    }

    return X::choice({on_receive, send_data, originate});
  }

  Ptr pnewpkt() const {
    return X::choice(
        X::when([](const D& x) { return x.dip == x.ip; }) >>
            X::deliver([](const D& x) { return x.data; }) >> done(),
        X::when([](const D& x) { return x.dip != x.ip; }) >>
            X::assign([](D x) {
              x.store = add(x.data, x.dip, x.store);
              return x;
            }) >>
            done());
  }

  Ptr ppkt() const {
    auto forward = X::when([](const D& x) { return is_valid(x.rt, x.dip); }) >>
                   X::unicast([](const D& x) { return the_nhop(x.rt, x.dip); },
                              [](const D& x) -> Message {
                                return msg::Pkt{x.data, x.dip, x.ip};
                              },
                              done(),
                              link_break([](const D& x) {
                                return the_nhop(x.rt, x.dip);
                              }));
    auto report =
        X::when([](const D& x) { return iD(x.rt).contains(x.dip); }) >>
        X::assign([](D x) {
          x.dests = Dests{{x.dip, sqn(x.rt, x.dip)}};
          return x;
        }) >>
        rerr_cast([](const D& x) { return precs(x.rt, x.dip); }) >> done();
    auto discard =
        X::when([](const D& x) { return !iD(x.rt).contains(x.dip); }) >> done();
    auto no_route =
        X::when([](const D& x) { return !is_valid(x.rt, x.dip); }) >>
        X::choice(report, discard);

    return X::choice(
        X::when([](const D& x) { return x.dip == x.ip; }) >>
            X::deliver([](const D& x) { return x.data; }) >> done(),
        X::when([](const D& x) { return x.dip != x.ip; }) >>
            X::choice(forward, no_route));
  }

  Ptr prreq() const {
    bool by_id = cfg_.variant != Variant::no_rreqid;
    bool with_flag = cfg_.variant == Variant::fwd_rreq;
    auto key = [by_id](const D& x) {
      return by_id ? RreqKey{x.oip, x.rreqid} : RreqKey{x.oip, x.osn};
    };
    auto to_oip = [](const D& x) { return the_nhop(x.rt, x.oip); };

    auto dest_reply =
        X::assign([](D x) {
          x.sn = std::max(x.sn, x.dsn);
          return x;
        }) >>
        X::unicast(to_oip,
                   [](const D& x) -> Message {
                     return msg::Rrep{0, x.ip, x.sn, x.oip, x.ip};
                   },
                   done(), link_break(to_oip));

    auto can_reply = [](const D& x) {
      return is_valid(x.rt, x.dip) && x.dsn <= sqn(x.rt, x.dip) &&
             sqnf(x.rt, x.dip) == Dsk::kno;
    };
    auto rrep_msg = [](const D& x) -> Message {
      return msg::Rrep{*dhops(x.rt, x.dip), x.dip, sqn(x.rt, x.dip), x.oip,
                       x.ip};
    };
    auto forward_msg = [by_id, with_flag](bool mark) {
      return [by_id, with_flag, mark](const D& x) -> Message {
        msg::Rreq q;
        q.hops = x.hops + 1;
        if (by_id) q.rreqid = x.rreqid;
        q.dip = x.dip;
        q.dsn = std::max(sqn(x.rt, x.dip), x.dsn);
        q.dsk = x.dsk;
        q.oip = x.oip;
        q.osn = x.osn;
        q.sip = x.ip;
        if (with_flag) q.handled = mark || x.handled;
        return q;
      };
    };
    auto add_reply_pre = [this]() -> std::vector<P> {
      if (!precursors()) return {};
      return {X::assign([](D x) {
                x.rt = addpre(x.rt, x.dip, {x.sip});
                return x;
              }),
              X::assign([](D x) {
                x.rt = addpre(x.rt, x.oip, {the_nhop(x.rt, x.dip)});
                return x;
              })};
    };
    auto chain = [](std::vector<P> prefixes, Ptr tail) {
      for (auto it = prefixes.rbegin(); it != prefixes.rend(); ++it) {
        tail = *it >> tail;
      }
      return tail;
    };

    Ptr at_dest;
    Ptr elsewhere;
    if (!with_flag) {
      at_dest = X::when([](const D& x) { return x.dip == x.ip; }) >> dest_reply;
      auto reply = X::when(can_reply) >>
                   chain(add_reply_pre(),
                         X::unicast(to_oip, rrep_msg, done(), link_break(to_oip)));
      auto forward = X::when([can_reply](const D& x) { return !can_reply(x); }) >>
                     X::broadcast(forward_msg(false)) >> done();
      elsewhere = X::when([](const D& x) { return x.dip != x.ip; }) >>
                  X::choice(reply, forward);
    } else {
      at_dest = X::when([](const D& x) { return x.dip == x.ip; }) >>
                X::choice(X::when([](const D& x) { return !x.handled; }) >>
                              dest_reply,
                          X::when([](const D& x) { return x.handled; }) >> done());
      auto fresh = [can_reply](const D& x) { return can_reply(x) && !x.handled; };
      auto reply =
          X::when(fresh) >>
          chain(add_reply_pre(),
                X::unicast(to_oip, rrep_msg,
                           X::broadcast(forward_msg(true)) >> done(),
                           link_break(to_oip)));
      auto forward = X::when([fresh](const D& x) { return !fresh(x); }) >>
                     X::broadcast(forward_msg(false)) >> done();
      elsewhere = X::when([](const D& x) { return x.dip != x.ip; }) >>
                  X::choice(reply, forward);
    }

    return X::choice(
        X::when([key](const D& x) { return x.rreqs.contains(key(x)); }) >> done(),
        X::when([key](const D& x) { return !x.rreqs.contains(key(x)); }) >>
            X::assign([self = *this](D x) {
              x.rt = self.upd(x.rt, x.oip,
                              self.entry(x.osn, Dsk::kno, x.hops + 1, x.sip));
              return x;
            }) >>
            X::assign([key](D x) {
              x.rreqs.insert(key(x));
              return x;
            }) >>
            X::choice(at_dest, elsewhere));
  }

  Ptr prrep() const {
    auto to_oip = [](const D& x) { return the_nhop(x.rt, x.oip); };
    auto learned = [self = *this](const D& x) {
      return self.upd(x.rt, x.dip, self.entry(x.dsn, Dsk::kno, x.hops + 1, x.sip));
    };
    auto install = X::assign([learned](D x) {
      x.rt = learned(x);
      return x;
    });

    if (cfg_.variant == Variant::fwd_rrep) {
      // Always pass on the best route known, whether or not this reply
      // improved it.
      auto relay =
          X::when([](const D& x) {
            return is_valid(x.rt, x.oip) && is_valid(x.rt, x.dip);
          }) >>
          X::assign([](D x) {
            x.rt = addpre(x.rt, x.dip, {the_nhop(x.rt, x.oip)});
            return x;
          }) >>
          X::unicast(to_oip,
                     [](const D& x) -> Message {
                       return msg::Rrep{*dhops(x.rt, x.dip), x.dip,
                                        sqn(x.rt, x.dip), x.oip, x.ip};
                     },
                     done(), link_break(to_oip));
      auto stuck = X::when([](const D& x) {
                     return !is_valid(x.rt, x.oip) || !is_valid(x.rt, x.dip);
                   }) >>
                   done();
      return install >>
             X::choice(X::when([](const D& x) { return x.oip == x.ip; }) >> done(),
                       X::when([](const D& x) { return x.oip != x.ip; }) >>
                           X::choice(relay, stuck));
    }

    std::vector<P> pre;
    if (precursors()) {
      pre.push_back(X::assign([](D x) {
        x.rt = addpre(x.rt, x.dip, {the_nhop(x.rt, x.oip)});
        return x;
      }));
    }
    Ptr send = X::unicast(to_oip,
                          [](const D& x) -> Message {
                            return msg::Rrep{x.hops + 1, x.dip, x.dsn, x.oip,
                                             x.ip};
                          },
                          done(), link_break(to_oip));
    for (auto it = pre.rbegin(); it != pre.rend(); ++it) send = *it >> send;

    auto relay = X::when([](const D& x) { return is_valid(x.rt, x.oip); }) >> send;
    auto stuck = X::when([](const D& x) { return !is_valid(x.rt, x.oip); }) >>
                 done();
    return X::choice(
        X::when([learned](const D& x) { return learned(x) != x.rt; }) >>
            install >>
            X::choice(X::when([](const D& x) { return x.oip == x.ip; }) >> done(),
                      X::when([](const D& x) { return x.oip != x.ip; }) >>
                          X::choice(relay, stuck)),
        X::when([learned](const D& x) { return learned(x) == x.rt; }) >> done());
  }

  Ptr prerr() const {
    auto select = X::assign([](D x) {
      Dests keep;
      for (const auto& [rip, rsn] : x.dests) {
        auto it = x.rt.find(rip);
        if (it != x.rt.end() && it->second.flag == Flag::val &&
            it->second.nhip == x.sip && it->second.dsn < rsn) {
          keep.emplace(rip, rsn);
        }
      }
      x.dests = std::move(keep);
      return x;
    });
    auto inval = X::assign([](D x) {
      x.rt = invalidate(x.rt, x.dests);
      return x;
    });
    auto rearm = X::assign([](D x) {
      x.store = set_rrf(x.store, x.dests);
      return x;
    });
    if (precursors()) {
      return select >> inval >> rearm >> collect_pre() >> filter_dests() >>
             rerr_cast([](const D& x) { return x.pre; }) >> done();
    }
    // Broadcasting needs its own guard: nothing is sent when no route was
    // affected.
    return select >> inval >> rearm >>
           X::choice(X::when([](const D& x) { return !x.dests.empty(); }) >>
                         rerr_cast(nullptr) >> done(),
                     X::when([](const D& x) { return x.dests.empty(); }) >>
                         done());
  }

  std::shared_ptr<const Spec> build() const {
    using awn::labelled;
    return std::make_shared<const Spec>(std::vector<std::pair<std::string, Ptr>>{
        {kPAodv, labelled<D, Message>(kPAodv, paodv())},
        {kPNewPkt, labelled<D, Message>(kPNewPkt, pnewpkt())},
        {kPPkt, labelled<D, Message>(kPPkt, ppkt())},
        {kPRreq, labelled<D, Message>(kPRreq, prreq())},
        {kPRrep, labelled<D, Message>(kPRrep, prrep())},
        {kPRerr, labelled<D, Message>(kPRerr, prerr())},
    });
  }

 private:
  ModelConfig cfg_;
};

}  // namespace

std::shared_ptr<const Spec> gamma_aodv(ModelConfig cfg) {
  static std::mutex mu;
  static std::map<std::pair<Variant, Mutation>, std::shared_ptr<const Spec>>
      cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{cfg.variant, cfg.mutation}];
  if (!slot) slot = Builder(cfg).build();
  return slot;
}

}  // namespace aodv
