#include "hscheck/semantics.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace hscheck {

ValidationError::ValidationError(std::vector<ModelError> errs)
    : std::runtime_error([&] {
        std::string msg = "system validation failed:";
        for (const auto& e : errs) msg += "\n  " + to_string(e);
        return msg;
      }()),
      errors(std::move(errs)) {}

namespace {

// Slot-resolved expression. Arrays evaluate their index at runtime with
// a dynamic bounds check; everything else is direct slot access.
struct CExpr {
  enum class K {
    Const,
    GlobalSlot,
    LocalSlot,
    ClockSlot,
    GlobalArr,
    LocalArr,
    Binder,
    Add,
    Sub,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    And,
    Or,
    Not,
    Imply,
  };

  K k = K::Const;
  int64_t c = 0;
  int slot = 0;  // scalar slot, or array base
  int size = 0;  // array slot count
  std::string display;  // array name for diagnostics
  std::unique_ptr<CExpr> a, b;  // operands; `a` holds the index for arrays
};

using CExprPtr = std::unique_ptr<CExpr>;

struct CAssign {
  bool global = false;
  int base = 0;       // absolute slot (plus index for arrays)
  int size = 1;       // 1 for scalars
  CExprPtr index;     // null for scalars
  CExprPtr value;
  int64_t lo = 0, hi = 0;
  std::string display;
};

struct CReset {
  int slot = 0;
};

struct CFirstMatch {
  int64_t lo = 0, hi = -1;
  CExprPtr pred;
  std::vector<CAssign> assigns;
};

using CItem = std::variant<CAssign, CReset, CFirstMatch>;

struct CEdge {
  int source = 0;
  int target = 0;
  CExprPtr guard;  // null = true
  SyncKind sync = SyncKind::None;
  int channel = -1;
  std::vector<CItem> update;
};

struct CProc {
  int tmpl = 0;
  std::string name;
  int initial = 0;
  int local_base = 0, local_count = 0;
  int clock_base = 0, clock_count = 0;
  std::vector<uint8_t> committed;    // per location
  std::vector<CExprPtr> invariants;  // per location, null = true
  std::vector<CEdge> edges;
  std::map<std::string, int> local_slot;  // absolute
  std::map<std::string, int> clock_slot;  // absolute
  std::map<std::string, int64_t> params;
};

int64_t eval_c(const CExpr& e, const SystemState& s, int64_t binder) {
  switch (e.k) {
    case CExpr::K::Const: return e.c;
    case CExpr::K::GlobalSlot: return s.globals[static_cast<size_t>(e.slot)];
    case CExpr::K::LocalSlot: return s.locals[static_cast<size_t>(e.slot)];
    case CExpr::K::ClockSlot: return s.clocks[static_cast<size_t>(e.slot)];
    case CExpr::K::Binder: return binder;
    case CExpr::K::GlobalArr:
    case CExpr::K::LocalArr: {
      const int64_t idx = eval_c(*e.a, s, binder);
      if (idx < 0 || idx >= e.size)
        throw ModelRuntimeError("index " + std::to_string(idx) + " out of bounds for '" +
                                e.display + "'");
      const auto slot = static_cast<size_t>(e.slot + idx);
      return e.k == CExpr::K::GlobalArr ? s.globals[slot] : s.locals[slot];
    }
    case CExpr::K::Add: return eval_c(*e.a, s, binder) + eval_c(*e.b, s, binder);
    case CExpr::K::Sub: return eval_c(*e.a, s, binder) - eval_c(*e.b, s, binder);
    case CExpr::K::Eq: return eval_c(*e.a, s, binder) == eval_c(*e.b, s, binder);
    case CExpr::K::Ne: return eval_c(*e.a, s, binder) != eval_c(*e.b, s, binder);
    case CExpr::K::Lt: return eval_c(*e.a, s, binder) < eval_c(*e.b, s, binder);
    case CExpr::K::Le: return eval_c(*e.a, s, binder) <= eval_c(*e.b, s, binder);
    case CExpr::K::Gt: return eval_c(*e.a, s, binder) > eval_c(*e.b, s, binder);
    case CExpr::K::Ge: return eval_c(*e.a, s, binder) >= eval_c(*e.b, s, binder);
    case CExpr::K::And: return eval_c(*e.a, s, binder) && eval_c(*e.b, s, binder);
    case CExpr::K::Or: return eval_c(*e.a, s, binder) || eval_c(*e.b, s, binder);
    case CExpr::K::Not: return !eval_c(*e.a, s, binder);
    case CExpr::K::Imply: return !eval_c(*e.a, s, binder) || eval_c(*e.b, s, binder);
  }
  return 0;
}

bool eval_guard(const CExprPtr& g, const SystemState& s, int64_t binder = 0) {
  return !g || eval_c(*g, s, binder) != 0;
}

int byte_width(int64_t span) {
  if (span < 0x100) return 1;
  if (span < 0x10000) return 2;
  return 4;
}

}  // namespace

struct Engine::Impl {
  SystemDef sys;

  struct SlotInfo {
    std::string name;
    int64_t lo = 0, hi = 0;
  };

  std::vector<SlotInfo> global_slots;
  std::vector<SlotInfo> local_slots;
  std::vector<int64_t> clock_ceilings;
  std::vector<std::string> clock_display;
  std::map<std::string, std::pair<int, int>> global_addr;  // name -> (base, size)
  std::map<std::string, int> channel_idx;
  std::vector<CProc> procs;
  std::vector<int32_t> global_init, local_init;
  size_t key_width = 0;

  const CProc& proc(int p) const { return procs[static_cast<size_t>(p)]; }
  const ProcessTemplate& tmpl(const CProc& p) const {
    return sys.templates[static_cast<size_t>(p.tmpl)];
  }

  // --- linking -------------------------------------------------------------

  CExprPtr compile(const Expr& e, const CProc* pr, const FirstMatch* binder) const {
    auto node = std::make_unique<CExpr>();
    switch (e.kind) {
      case ExprKind::IntLit:
      case ExprKind::BoolLit:
        node->k = CExpr::K::Const;
        node->c = e.literal;
        return node;
      case ExprKind::Name: {
        if (binder && binder->binder == e.name) {
          node->k = CExpr::K::Binder;
          return node;
        }
        if (pr) {
          if (auto it = pr->params.find(e.name); it != pr->params.end()) {
            node->k = CExpr::K::Const;
            node->c = it->second;
            return node;
          }
          if (auto it = pr->local_slot.find(e.name); it != pr->local_slot.end()) {
            node->k = CExpr::K::LocalSlot;
            node->slot = it->second;
            return node;
          }
          if (auto it = pr->clock_slot.find(e.name); it != pr->clock_slot.end()) {
            node->k = CExpr::K::ClockSlot;
            node->slot = it->second;
            return node;
          }
        }
        if (auto it = global_addr.find(e.name); it != global_addr.end()) {
          node->k = CExpr::K::GlobalSlot;
          node->slot = it->second.first;
          return node;
        }
        if (auto it = sys.constants.find(e.name); it != sys.constants.end()) {
          node->k = CExpr::K::Const;
          node->c = it->second;
          return node;
        }
        throw ModelRuntimeError("link: unbound name '" + e.name + "'");
      }
      case ExprKind::Index: {
        const VariableDecl* decl = nullptr;
        bool global = true;
        if (pr) {
          const auto& t = tmpl(*pr);
          for (const auto& v : t.locals)
            if (v.name == e.name) {
              decl = &v;
              global = false;
            }
        }
        if (!decl) decl = sys.find_global(e.name);
        if (!decl || !decl->is_array())
          throw ModelRuntimeError("link: '" + e.name + "' is not an array");
        node->k = global ? CExpr::K::GlobalArr : CExpr::K::LocalArr;
        node->slot = global ? global_addr.at(e.name).first : pr->local_slot.at(e.name);
        node->size = static_cast<int>(decl->slot_count());
        node->display = e.name;
        node->a = compile(*e.index, pr, binder);
        return node;
      }
      case ExprKind::Not:
        node->k = CExpr::K::Not;
        node->a = compile(*e.lhs, pr, binder);
        return node;
      default: {
        switch (e.kind) {
          case ExprKind::Add: node->k = CExpr::K::Add; break;
          case ExprKind::Sub: node->k = CExpr::K::Sub; break;
          case ExprKind::Eq: node->k = CExpr::K::Eq; break;
          case ExprKind::Ne: node->k = CExpr::K::Ne; break;
          case ExprKind::Lt: node->k = CExpr::K::Lt; break;
          case ExprKind::Le: node->k = CExpr::K::Le; break;
          case ExprKind::Gt: node->k = CExpr::K::Gt; break;
          case ExprKind::Ge: node->k = CExpr::K::Ge; break;
          case ExprKind::And: node->k = CExpr::K::And; break;
          case ExprKind::Or: node->k = CExpr::K::Or; break;
          case ExprKind::Imply: node->k = CExpr::K::Imply; break;
          default: throw ModelRuntimeError("link: unexpected expression node");
        }
        node->a = compile(*e.lhs, pr, binder);
        node->b = compile(*e.rhs, pr, binder);
        return node;
      }
    }
  }

  CAssign compile_assign(const Assignment& a, const CProc& pr, const FirstMatch* binder) const {
    CAssign out;
    const VariableDecl* decl = nullptr;
    out.global = true;
    for (const auto& v : tmpl(pr).locals)
      if (v.name == a.target) {
        decl = &v;
        out.global = false;
      }
    if (!decl) decl = sys.find_global(a.target);
    if (!decl) throw ModelRuntimeError("link: unbound assignment target '" + a.target + "'");
    out.base = out.global ? global_addr.at(a.target).first : pr.local_slot.at(a.target);
    out.size = static_cast<int>(decl->slot_count());
    out.lo = decl->lo;
    out.hi = decl->hi;
    out.display = a.target;
    if (a.index) out.index = compile(*a.index, &pr, binder);
    out.value = compile(*a.value, &pr, binder);
    return out;
  }

  std::vector<CItem> compile_update(const Update& u, const CProc& pr) const {
    std::vector<CItem> items;
    for (const auto& item : u.items) {
      if (const auto* a = std::get_if<Assignment>(&item)) {
        items.emplace_back(compile_assign(*a, pr, nullptr));
      } else if (const auto* r = std::get_if<ClockReset>(&item)) {
        items.emplace_back(CReset{pr.clock_slot.at(r->clock)});
      } else if (const auto* f = std::get_if<FirstMatch>(&item)) {
        CFirstMatch cf;
        cf.lo = f->lo;
        cf.hi = f->hi;
        cf.pred = compile(*f->pred, &pr, f);
        for (const auto& a : f->assigns) cf.assigns.push_back(compile_assign(a, pr, f));
        items.emplace_back(std::move(cf));
      }
    }
    return items;
  }

  // --- execution -----------------------------------------------------------

  void run_assign(const CAssign& a, SystemState& s, int64_t binder) const {
    int64_t offset = 0;
    if (a.index) {
      offset = eval_c(*a.index, s, binder);
      if (offset < 0 || offset >= a.size)
        throw ModelRuntimeError("index " + std::to_string(offset) + " out of bounds for '" +
                                a.display + "'");
    }
    const int64_t v = eval_c(*a.value, s, binder);
    if (v < a.lo || v > a.hi)
      throw ModelRuntimeError("assignment leaves '" + a.display + "' = " + std::to_string(v) +
                              " outside its declared range [" + std::to_string(a.lo) + "," +
                              std::to_string(a.hi) + "]");
    auto& vec = a.global ? s.globals : s.locals;
    vec[static_cast<size_t>(a.base + offset)] = static_cast<int32_t>(v);
  }

  void run_update(const std::vector<CItem>& items, SystemState& s) const {
    for (const auto& item : items) {
      if (const auto* a = std::get_if<CAssign>(&item)) {
        run_assign(*a, s, 0);
      } else if (const auto* r = std::get_if<CReset>(&item)) {
        s.clocks[static_cast<size_t>(r->slot)] = 0;
      } else if (const auto* f = std::get_if<CFirstMatch>(&item)) {
        for (int64_t v = f->lo; v <= f->hi; ++v) {
          if (eval_c(*f->pred, s, v) != 0) {
            for (const auto& a : f->assigns) run_assign(a, s, v);
            break;
          }
        }
      }
    }
  }

  void take_edge(int p, const CEdge& e, SystemState& s) const {
    run_update(e.update, s);
    s.locations[static_cast<size_t>(p)] = e.target;
  }

  bool committed_at(int p, const SystemState& s) const {
    return proc(p).committed[static_cast<size_t>(s.locations[static_cast<size_t>(p)])] != 0;
  }

  bool invariant_holds(const SystemState& s) const {
    for (size_t p = 0; p < procs.size(); ++p) {
      const auto& inv = procs[p].invariants[static_cast<size_t>(s.locations[p])];
      if (inv && eval_c(*inv, s, 0) == 0) return false;
    }
    return true;
  }

  // Expands receiver choices for a broadcast in ascending process order;
  // each receiver's enabledness is judged against the partially updated
  // state, so it sees the sender's (and earlier receivers') writes.
  void expand_receivers(int next, int sender, int channel, const SystemState& st,
                        std::vector<std::pair<int, int>>& receivers,
                        const TransitionLabel& base_label,
                        std::vector<Successor>& out) const {
    if (next == static_cast<int>(procs.size())) {
      TransitionLabel label = base_label;
      label.receivers = receivers;
      out.emplace_back(std::move(label), st);
      return;
    }
    if (next == sender) {
      expand_receivers(next + 1, sender, channel, st, receivers, base_label, out);
      return;
    }
    const CProc& pr = procs[static_cast<size_t>(next)];
    const int loc = st.locations[static_cast<size_t>(next)];
    bool any = false;
    for (size_t eid = 0; eid < pr.edges.size(); ++eid) {
      const CEdge& e = pr.edges[eid];
      if (e.sync != SyncKind::Receive || e.channel != channel || e.source != loc) continue;
      if (!eval_guard(e.guard, st)) continue;
      any = true;
      SystemState nxt = st;
      take_edge(next, e, nxt);
      receivers.emplace_back(next, static_cast<int>(eid));
      expand_receivers(next + 1, sender, channel, nxt, receivers, base_label, out);
      receivers.pop_back();
    }
    if (!any)  // message dropped for this process
      expand_receivers(next + 1, sender, channel, st, receivers, base_label, out);
  }
};

Engine::Engine(SystemDef sys) : impl_(std::make_unique<Impl>()) {
  auto errors = validate_system(sys);
  if (!errors.empty()) throw ValidationError(std::move(errors));
  impl_->sys = std::move(sys);
  Impl& im = *impl_;
  const SystemDef& def = im.sys;

  for (size_t i = 0; i < def.channels.size(); ++i)
    im.channel_idx[def.channels[i].name] = static_cast<int>(i);

  for (const auto& g : def.globals) {
    im.global_addr[g.name] = {static_cast<int>(im.global_slots.size()),
                              static_cast<int>(g.slot_count())};
    for (int64_t k = 0; k < g.slot_count(); ++k) {
      std::string label = g.is_array() ? g.name + "[" + std::to_string(k) + "]" : g.name;
      im.global_slots.push_back({std::move(label), g.lo, g.hi});
      im.global_init.push_back(static_cast<int32_t>(g.initial));
    }
  }

  for (const auto& inst : def.processes) {
    CProc pr;
    const ProcessTemplate* t = nullptr;
    for (size_t ti = 0; ti < def.templates.size(); ++ti)
      if (def.templates[ti].name == inst.template_name) {
        t = &def.templates[ti];
        pr.tmpl = static_cast<int>(ti);
      }
    pr.name = inst.display_name();
    for (size_t k = 0; k < t->parameters.size(); ++k)
      pr.params[t->parameters[k].name] = inst.arguments[k];

    pr.local_base = static_cast<int>(im.local_slots.size());
    for (const auto& v : t->locals) {
      pr.local_slot[v.name] = static_cast<int>(im.local_slots.size());
      for (int64_t k = 0; k < v.slot_count(); ++k) {
        std::string label = pr.name + "." + v.name +
                            (v.is_array() ? "[" + std::to_string(k) + "]" : "");
        im.local_slots.push_back({std::move(label), v.lo, v.hi});
        im.local_init.push_back(static_cast<int32_t>(v.initial));
      }
    }
    pr.local_count = static_cast<int>(im.local_slots.size()) - pr.local_base;

    pr.clock_base = static_cast<int>(im.clock_ceilings.size());
    for (const auto& c : t->clocks) {
      pr.clock_slot[c.name] = static_cast<int>(im.clock_ceilings.size());
      im.clock_ceilings.push_back(c.ceiling);
      im.clock_display.push_back(pr.name + "." + c.name);
    }
    pr.clock_count = static_cast<int>(im.clock_ceilings.size()) - pr.clock_base;

    for (size_t li = 0; li < t->locations.size(); ++li) {
      const auto& loc = t->locations[li];
      if (loc.initial) pr.initial = static_cast<int>(li);
      pr.committed.push_back(loc.kind == LocationKind::Committed ? 1 : 0);
      pr.invariants.push_back(loc.invariant ? im.compile(*loc.invariant, &pr, nullptr)
                                            : nullptr);
    }

    for (const auto& e : t->edges) {
      CEdge ce;
      auto loc_index = [&](const std::string& n) {
        for (size_t li = 0; li < t->locations.size(); ++li)
          if (t->locations[li].name == n) return static_cast<int>(li);
        return -1;
      };
      ce.source = loc_index(e.source);
      ce.target = loc_index(e.target);
      ce.sync = e.sync.kind;
      if (e.sync.kind != SyncKind::None) ce.channel = im.channel_idx.at(e.sync.channel);
      if (e.guard) ce.guard = im.compile(*e.guard, &pr, nullptr);
      ce.update = im.compile_update(e.update, pr);
      pr.edges.push_back(std::move(ce));
    }
    im.procs.push_back(std::move(pr));
  }

  // fixed encoding width per system
  size_t w = 0;
  for (const auto& pr : im.procs)
    w += static_cast<size_t>(byte_width(static_cast<int64_t>(pr.committed.size())));
  for (const auto& s : im.global_slots) w += static_cast<size_t>(byte_width(s.hi - s.lo));
  for (const auto& s : im.local_slots) w += static_cast<size_t>(byte_width(s.hi - s.lo));
  for (int64_t c : im.clock_ceilings) w += static_cast<size_t>(byte_width(c));
  im.key_width = w;
}

Engine::~Engine() = default;
Engine::Engine(Engine&&) noexcept = default;
Engine& Engine::operator=(Engine&&) noexcept = default;

const SystemDef& Engine::system() const { return impl_->sys; }

SystemState Engine::initial_state() const {
  const Impl& im = *impl_;
  SystemState s;
  s.locations.reserve(im.procs.size());
  for (const auto& pr : im.procs) s.locations.push_back(pr.initial);
  s.globals = im.global_init;
  s.locals = im.local_init;
  s.clocks.assign(im.clock_ceilings.size(), 0);
  return s;
}

bool Engine::is_committed_active(const SystemState& s) const {
  for (size_t p = 0; p < impl_->procs.size(); ++p)
    if (impl_->committed_at(static_cast<int>(p), s)) return true;
  return false;
}

std::optional<SystemState> Engine::apply_delay(const SystemState& s) const {
  const Impl& im = *impl_;
  if (is_committed_active(s)) return std::nullopt;
  SystemState next = s;
  for (size_t c = 0; c < next.clocks.size(); ++c)
    next.clocks[c] = static_cast<int32_t>(
        std::min<int64_t>(next.clocks[c] + 1, im.clock_ceilings[c]));
  if (!im.invariant_holds(next)) return std::nullopt;
  return next;
}

std::vector<Successor> Engine::fire_broadcast_all(const SystemState& s, int process,
                                                  int edge) const {
  const Impl& im = *impl_;
  const CProc& pr = im.proc(process);
  const CEdge& e = pr.edges.at(static_cast<size_t>(edge));
  if (e.sync != SyncKind::Send || e.source != s.locations[static_cast<size_t>(process)] ||
      !eval_guard(e.guard, s))
    throw ModelRuntimeError("fire_broadcast precondition violated for " + pr.name + " edge " +
                            std::to_string(edge));

  SystemState after = s;
  im.take_edge(process, e, after);

  TransitionLabel base;
  base.kind = TransitionLabel::Kind::Broadcast;
  base.process = process;
  base.edge = edge;
  base.channel = e.channel;

  std::vector<Successor> out;
  std::vector<std::pair<int, int>> receivers;
  im.expand_receivers(0, process, e.channel, after, receivers, base, out);
  return out;
}

Successor Engine::fire_broadcast(const SystemState& s, int process, int edge) const {
  auto all = fire_broadcast_all(s, process, edge);
  assert(!all.empty());
  return std::move(all.front());
}

std::vector<Successor> Engine::successors(const SystemState& s) const {
  const Impl& im = *impl_;
  std::vector<Successor> out;
  const bool committed = is_committed_active(s);

  for (size_t p = 0; p < im.procs.size(); ++p) {
    if (committed && !im.committed_at(static_cast<int>(p), s)) continue;
    const CProc& pr = im.procs[p];
    const int loc = s.locations[p];
    for (size_t eid = 0; eid < pr.edges.size(); ++eid) {
      const CEdge& e = pr.edges[eid];
      if (e.source != loc || e.sync == SyncKind::Receive) continue;
      if (!eval_guard(e.guard, s)) continue;
      if (e.sync == SyncKind::None) {
        SystemState nxt = s;
        im.take_edge(static_cast<int>(p), e, nxt);
        TransitionLabel label;
        label.kind = TransitionLabel::Kind::Internal;
        label.process = static_cast<int>(p);
        label.edge = static_cast<int>(eid);
        out.emplace_back(std::move(label), std::move(nxt));
      } else {
        auto fired = fire_broadcast_all(s, static_cast<int>(p), static_cast<int>(eid));
        std::move(fired.begin(), fired.end(), std::back_inserter(out));
      }
    }
  }

  if (auto delayed = apply_delay(s)) {
    TransitionLabel label;
    label.kind = TransitionLabel::Kind::Delay;
    out.emplace_back(std::move(label), std::move(*delayed));
  }
  return out;
}

StateKey Engine::encode(const SystemState& s) const {
  const Impl& im = *impl_;
  std::string key;
  key.reserve(im.key_width);
  auto put = [&key](int64_t value, int width) {
    auto u = static_cast<uint64_t>(value);
    for (int i = 0; i < width; ++i) {
      key.push_back(static_cast<char>(u & 0xff));
      u >>= 8;
    }
  };
  for (size_t p = 0; p < im.procs.size(); ++p)
    put(s.locations[p], byte_width(static_cast<int64_t>(im.procs[p].committed.size())));
  for (size_t i = 0; i < im.global_slots.size(); ++i)
    put(s.globals[i] - im.global_slots[i].lo, byte_width(im.global_slots[i].hi - im.global_slots[i].lo));
  for (size_t i = 0; i < im.local_slots.size(); ++i)
    put(s.locals[i] - im.local_slots[i].lo, byte_width(im.local_slots[i].hi - im.local_slots[i].lo));
  for (size_t i = 0; i < im.clock_ceilings.size(); ++i)
    put(s.clocks[i], byte_width(im.clock_ceilings[i]));
  return key;
}

SystemState Engine::decode(const StateKey& key) const {
  const Impl& im = *impl_;
  if (key.size() != im.key_width)
    throw DecodeError("state key has length " + std::to_string(key.size()) + ", expected " +
                      std::to_string(im.key_width));
  size_t pos = 0;
  auto take = [&](int width) {
    uint64_t u = 0;
    for (int i = 0; i < width; ++i)
      u |= static_cast<uint64_t>(static_cast<unsigned char>(key[pos++])) << (8 * i);
    return static_cast<int64_t>(u);
  };
  SystemState s;
  for (const auto& pr : im.procs) {
    const int64_t loc = take(byte_width(static_cast<int64_t>(pr.committed.size())));
    if (loc >= static_cast<int64_t>(pr.committed.size()))
      throw DecodeError("location index out of range in state key");
    s.locations.push_back(static_cast<int32_t>(loc));
  }
  for (const auto& slot : im.global_slots) {
    const int64_t v = slot.lo + take(byte_width(slot.hi - slot.lo));
    if (v > slot.hi) throw DecodeError("value out of range for " + slot.name);
    s.globals.push_back(static_cast<int32_t>(v));
  }
  for (const auto& slot : im.local_slots) {
    const int64_t v = slot.lo + take(byte_width(slot.hi - slot.lo));
    if (v > slot.hi) throw DecodeError("value out of range for " + slot.name);
    s.locals.push_back(static_cast<int32_t>(v));
  }
  for (int64_t ceiling : im.clock_ceilings) {
    const int64_t v = take(byte_width(ceiling));
    if (v > ceiling) throw DecodeError("clock value above ceiling in state key");
    s.clocks.push_back(static_cast<int32_t>(v));
  }
  return s;
}

int Engine::process_count() const { return static_cast<int>(impl_->procs.size()); }

const std::string& Engine::process_name(int process) const {
  return impl_->proc(process).name;
}

const ProcessTemplate& Engine::process_template(int process) const {
  return impl_->sys.templates[static_cast<size_t>(impl_->proc(process).tmpl)];
}

int Engine::find_process(const std::string& template_name, std::optional<int64_t> argument) const {
  for (size_t p = 0; p < impl_->sys.processes.size(); ++p) {
    const auto& inst = impl_->sys.processes[p];
    if (inst.template_name != template_name) continue;
    if (!argument && inst.arguments.empty()) return static_cast<int>(p);
    if (argument && !inst.arguments.empty() && inst.arguments.front() == *argument)
      return static_cast<int>(p);
    if (argument && inst.arguments.empty()) continue;
    if (!argument && !inst.arguments.empty()) continue;
  }
  // tolerate `Name` for a unique instance even when parameterized
  if (!argument) {
    int found = -1;
    for (size_t p = 0; p < impl_->sys.processes.size(); ++p)
      if (impl_->sys.processes[p].template_name == template_name)
        found = found == -1 ? static_cast<int>(p) : -2;
    if (found >= 0) return found;
  }
  return -1;
}

const std::string& Engine::location_name(int process, int location) const {
  return impl_->tmpl(impl_->proc(process)).locations[static_cast<size_t>(location)].name;
}

bool Engine::location_committed(int process, int location) const {
  return impl_->proc(process).committed[static_cast<size_t>(location)] != 0;
}

int Engine::global_slot(const std::string& name, int64_t index) const {
  auto it = impl_->global_addr.find(name);
  if (it == impl_->global_addr.end()) throw std::out_of_range("unknown global '" + name + "'");
  if (index < 0 || index >= it->second.second)
    throw std::out_of_range("index " + std::to_string(index) + " out of bounds for '" + name + "'");
  return it->second.first + static_cast<int>(index);
}

int Engine::local_slot(int process, const std::string& name) const {
  const auto& pr = impl_->proc(process);
  auto it = pr.local_slot.find(name);
  if (it == pr.local_slot.end())
    throw std::out_of_range("process " + pr.name + " has no variable '" + name + "'");
  return it->second;
}

std::pair<int64_t, int64_t> Engine::global_range(const std::string& name) const {
  const auto* decl = impl_->sys.find_global(name);
  if (!decl) throw std::out_of_range("unknown global '" + name + "'");
  return {decl->lo, decl->hi};
}

std::pair<int64_t, int64_t> Engine::local_range(int process, const std::string& name) const {
  for (const auto& v : process_template(process).locals)
    if (v.name == name) return {v.lo, v.hi};
  throw std::out_of_range("process has no variable '" + name + "'");
}

int64_t Engine::global_value(const SystemState& s, const std::string& name, int64_t index) const {
  return s.globals[static_cast<size_t>(global_slot(name, index))];
}

int64_t Engine::local_value(const SystemState& s, int process, const std::string& name) const {
  return s.locals[static_cast<size_t>(local_slot(process, name))];
}

int64_t Engine::clock_value(const SystemState& s, int process, const std::string& name) const {
  const auto& pr = impl_->proc(process);
  auto it = pr.clock_slot.find(name);
  if (it == pr.clock_slot.end())
    throw std::out_of_range("process " + pr.name + " has no clock '" + name + "'");
  return s.clocks[static_cast<size_t>(it->second)];
}

std::vector<std::string> Engine::local_names(int process) const {
  std::vector<std::string> names;
  for (const auto& v : process_template(process).locals) names.push_back(v.name);
  return names;
}

std::vector<std::string> Engine::clock_names(int process) const {
  std::vector<std::string> names;
  for (const auto& c : process_template(process).clocks) names.push_back(c.name);
  return names;
}

int Engine::channel_index(const std::string& name) const {
  auto it = impl_->channel_idx.find(name);
  return it == impl_->channel_idx.end() ? -1 : it->second;
}

const std::string& Engine::channel_name(int channel) const {
  return impl_->sys.channels[static_cast<size_t>(channel)].name;
}

std::string Engine::describe_label(const TransitionLabel& label) const {
  std::ostringstream out;
  switch (label.kind) {
    case TransitionLabel::Kind::Delay:
      out << "delay +1";
      break;
    case TransitionLabel::Kind::Internal: {
      const auto& t = process_template(label.process);
      const auto& e = t.edges[static_cast<size_t>(label.edge)];
      out << process_name(label.process) << ": " << (e.name.empty() ? "internal" : e.name) << " ("
          << e.source << " -> " << e.target << ")";
      break;
    }
    case TransitionLabel::Kind::Broadcast: {
      const auto& t = process_template(label.process);
      const auto& e = t.edges[static_cast<size_t>(label.edge)];
      out << process_name(label.process) << ": " << channel_name(label.channel) << "! (" << e.source
          << " -> " << e.target << ") recv";
      if (label.receivers.empty()) {
        out << ": none (dropped)";
      } else {
        out << ':';
        for (size_t i = 0; i < label.receivers.size(); ++i)
          out << (i ? ", " : " ") << process_name(label.receivers[i].first);
      }
      break;
    }
  }
  return out.str();
}

}  // namespace hscheck
