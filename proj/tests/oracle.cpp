#include "oracle.hpp"

#include <algorithm>

namespace hscheck::testing {

// Name-resolution environment over a concrete state, for eval_expr.
class Oracle::Env : public EvalEnv {
 public:
  Env(const Oracle& oracle, const SystemState& state, size_t process)
      : oracle_(oracle), state_(state), process_(process) {}

  void bind(const std::string& name, int64_t value) {
    binder_name_ = name;
    binder_value_ = value;
  }

  std::optional<int64_t> lookup(const std::string& name) const override {
    if (!binder_name_.empty() && name == binder_name_) return binder_value_;
    const auto& pr = oracle_.procs_[process_];
    if (auto it = pr.params.find(name); it != pr.params.end()) return it->second;
    if (auto it = pr.var_base.find(name); it != pr.var_base.end())
      return state_.locals[static_cast<size_t>(it->second)];
    if (auto it = pr.clock_base.find(name); it != pr.clock_base.end())
      return state_.clocks[static_cast<size_t>(it->second)];
    if (auto it = oracle_.global_base_.find(name); it != oracle_.global_base_.end())
      return state_.globals[static_cast<size_t>(it->second.first)];
    if (auto it = oracle_.sys_->constants.find(name); it != oracle_.sys_->constants.end())
      return it->second;
    return std::nullopt;
  }

  std::optional<int64_t> lookup_indexed(const std::string& name, int64_t index) const override {
    const auto& pr = oracle_.procs_[process_];
    if (auto it = pr.var_base.find(name); it != pr.var_base.end())
      return state_.locals[static_cast<size_t>(it->second + index)];
    if (auto it = oracle_.global_base_.find(name); it != oracle_.global_base_.end()) {
      if (index < 0 || index >= it->second.second)
        throw EvalError("index out of bounds for " + name);
      return state_.globals[static_cast<size_t>(it->second.first + index)];
    }
    return std::nullopt;
  }

 private:
  const Oracle& oracle_;
  const SystemState& state_;
  size_t process_;
  std::string binder_name_;
  int64_t binder_value_ = 0;
};

Oracle::Oracle(const SystemDef& sys) : sys_(&sys) {
  int gbase = 0;
  for (const auto& g : sys.globals) {
    global_base_[g.name] = {gbase, static_cast<int>(g.slot_count())};
    gbase += static_cast<int>(g.slot_count());
  }
  int lbase = 0, cbase = 0;
  for (const auto& inst : sys.processes) {
    ProcInfo info;
    info.tmpl = sys.find_template(inst.template_name);
    for (size_t k = 0; k < info.tmpl->parameters.size(); ++k)
      info.params[info.tmpl->parameters[k].name] = inst.arguments[k];
    for (const auto& v : info.tmpl->locals) {
      info.var_base[v.name] = lbase;
      lbase += static_cast<int>(v.slot_count());
    }
    for (const auto& c : info.tmpl->clocks) {
      info.clock_base[c.name] = cbase;
      clock_ceilings_.push_back(c.ceiling);
      ++cbase;
    }
    for (size_t li = 0; li < info.tmpl->locations.size(); ++li)
      if (info.tmpl->locations[li].initial) info.initial_location = static_cast<int>(li);
    procs_.push_back(std::move(info));
  }
}

SystemState Oracle::initial_state() const {
  SystemState s;
  for (const auto& pr : procs_) s.locations.push_back(pr.initial_location);
  for (const auto& g : sys_->globals)
    for (int64_t k = 0; k < g.slot_count(); ++k) s.globals.push_back(static_cast<int32_t>(g.initial));
  for (const auto& pr : procs_)
    for (const auto& v : pr.tmpl->locals)
      for (int64_t k = 0; k < v.slot_count(); ++k)
        s.locals.push_back(static_cast<int32_t>(v.initial));
  s.clocks.assign(clock_ceilings_.size(), 0);
  return s;
}

bool Oracle::committed(const SystemState& s, size_t p) const {
  const auto& loc =
      procs_[p].tmpl->locations[static_cast<size_t>(s.locations[p])];
  return loc.kind == LocationKind::Committed;
}

bool Oracle::any_committed(const SystemState& s) const {
  for (size_t p = 0; p < procs_.size(); ++p)
    if (committed(s, p)) return true;
  return false;
}

bool Oracle::invariants_hold(const SystemState& s) const {
  for (size_t p = 0; p < procs_.size(); ++p) {
    const auto& loc = procs_[p].tmpl->locations[static_cast<size_t>(s.locations[p])];
    if (!loc.invariant) continue;
    Env env(*this, s, p);
    if (!eval_expr(loc.invariant, env).as_bool()) return false;
  }
  return true;
}

bool Oracle::guard_holds(const SystemState& s, size_t p, const Edge& e) const {
  Env env(*this, s, p);
  return eval_expr(e.guard, env).as_bool();
}

void Oracle::run_update(const Update& u, SystemState& s, size_t p) const {
  const auto& pr = procs_[p];
  auto write = [&](const Assignment& a, const Env& env) {
    const int64_t value = eval_expr(a.value, env).as_int();
    int64_t index = 0;
    const VariableDecl* decl = nullptr;
    bool global = false;
    for (const auto& v : pr.tmpl->locals)
      if (v.name == a.target) decl = &v;
    if (!decl) {
      decl = sys_->find_global(a.target);
      global = true;
    }
    if (a.index) index = eval_expr(a.index, env).as_int();
    if (index < 0 || index >= decl->slot_count())
      throw ModelRuntimeError("oracle: index out of bounds for " + a.target);
    if (value < decl->lo || value > decl->hi)
      throw ModelRuntimeError("oracle: range violation on " + a.target);
    const int base =
        global ? global_base_.at(a.target).first : pr.var_base.at(a.target);
    auto& vec = global ? s.globals : s.locals;
    vec[static_cast<size_t>(base + index)] = static_cast<int32_t>(value);
  };

  for (const auto& item : u.items) {
    if (const auto* a = std::get_if<Assignment>(&item)) {
      Env env(*this, s, p);
      write(*a, env);
    } else if (const auto* r = std::get_if<ClockReset>(&item)) {
      s.clocks[static_cast<size_t>(pr.clock_base.at(r->clock))] = 0;
    } else if (const auto* f = std::get_if<FirstMatch>(&item)) {
      for (int64_t v = f->lo; v <= f->hi; ++v) {
        Env env(*this, s, p);
        env.bind(f->binder, v);
        if (eval_expr(f->pred, env).as_bool()) {
          for (const auto& a : f->assigns) {
            Env wenv(*this, s, p);
            wenv.bind(f->binder, v);
            write(a, wenv);
          }
          break;
        }
      }
    }
  }
}

SystemState Oracle::apply_edge(const SystemState& s, size_t p, const Edge& e) const {
  SystemState next = s;
  run_update(e.update, next, p);
  const auto& locs = procs_[p].tmpl->locations;
  for (size_t li = 0; li < locs.size(); ++li)
    if (locs[li].name == e.target) next.locations[p] = static_cast<int32_t>(li);
  return next;
}

void Oracle::receivers_from(size_t next, size_t sender, const std::string& channel,
                            const SystemState& st, std::vector<std::pair<int, int>>& acc,
                            const TransitionLabel& base, std::vector<Successor>& out) const {
  if (next == procs_.size()) {
    TransitionLabel label = base;
    label.receivers = acc;
    out.emplace_back(std::move(label), st);
    return;
  }
  if (next == sender) {
    receivers_from(next + 1, sender, channel, st, acc, base, out);
    return;
  }
  const auto& pr = procs_[next];
  const std::string& at = pr.tmpl->locations[static_cast<size_t>(st.locations[next])].name;
  bool any = false;
  for (size_t eid = 0; eid < pr.tmpl->edges.size(); ++eid) {
    const Edge& e = pr.tmpl->edges[eid];
    if (e.sync.kind != SyncKind::Receive || e.sync.channel != channel || e.source != at) continue;
    if (!guard_holds(st, next, e)) continue;
    any = true;
    acc.emplace_back(static_cast<int>(next), static_cast<int>(eid));
    receivers_from(next + 1, sender, channel, apply_edge(st, next, e), acc, base, out);
    acc.pop_back();
  }
  if (!any) receivers_from(next + 1, sender, channel, st, acc, base, out);
}

std::vector<Successor> Oracle::successors(const SystemState& s) const {
  std::vector<Successor> out;
  const bool restricted = any_committed(s);

  for (size_t p = 0; p < procs_.size(); ++p) {
    if (restricted && !committed(s, p)) continue;
    const auto& pr = procs_[p];
    const std::string& at = pr.tmpl->locations[static_cast<size_t>(s.locations[p])].name;
    for (size_t eid = 0; eid < pr.tmpl->edges.size(); ++eid) {
      const Edge& e = pr.tmpl->edges[eid];
      if (e.source != at || e.sync.kind == SyncKind::Receive) continue;
      if (!guard_holds(s, p, e)) continue;
      if (e.sync.kind == SyncKind::None) {
        TransitionLabel label;
        label.kind = TransitionLabel::Kind::Internal;
        label.process = static_cast<int>(p);
        label.edge = static_cast<int>(eid);
        out.emplace_back(label, apply_edge(s, p, e));
      } else {
        TransitionLabel base;
        base.kind = TransitionLabel::Kind::Broadcast;
        base.process = static_cast<int>(p);
        base.edge = static_cast<int>(eid);
        for (size_t ci = 0; ci < sys_->channels.size(); ++ci)
          if (sys_->channels[ci].name == e.sync.channel) base.channel = static_cast<int>(ci);
        std::vector<std::pair<int, int>> acc;
        receivers_from(0, p, e.sync.channel, apply_edge(s, p, e), acc, base, out);
      }
    }
  }

  if (!restricted) {
    SystemState delayed = s;
    for (size_t c = 0; c < delayed.clocks.size(); ++c)
      delayed.clocks[c] =
          static_cast<int32_t>(std::min<int64_t>(delayed.clocks[c] + 1, clock_ceilings_[c]));
    if (invariants_hold(delayed)) {
      TransitionLabel label;
      label.kind = TransitionLabel::Kind::Delay;
      out.emplace_back(label, std::move(delayed));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random model generator

namespace {

int irand(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(std::mt19937& rng, double p) {
  return std::uniform_real_distribution<double>(0, 1)(rng) < p;
}

struct GenCtx {
  std::vector<VariableDecl> locals;
  std::optional<ClockDecl> clock;
  const SystemDef* sys = nullptr;
};

// comparison guaranteed type-correct: int vs int, or clock vs constant
ExprPtr random_leaf(std::mt19937& rng, const GenCtx& ctx) {
  ExprKind ops[] = {ExprKind::Eq, ExprKind::Ne, ExprKind::Lt,
                    ExprKind::Le, ExprKind::Gt, ExprKind::Ge};
  const ExprKind op = ops[irand(rng, 0, 5)];

  std::vector<std::pair<std::string, const VariableDecl*>> vars;
  for (const auto& v : ctx.locals)
    if (!v.is_array()) vars.push_back({v.name, &v});
  for (const auto& g : ctx.sys->globals)
    if (!g.is_array()) vars.push_back({g.name, &g});

  if (ctx.clock && chance(rng, 0.3)) {
    const int64_t bound = irand(rng, 0, static_cast<int>(ctx.clock->ceiling));
    return binop(op, name_ref(ctx.clock->name), int_lit(bound));
  }
  const auto* arr = [&]() -> const VariableDecl* {
    for (const auto& g : ctx.sys->globals)
      if (g.is_array()) return &g;
    return nullptr;
  }();
  if (arr && chance(rng, 0.25)) {
    const int64_t idx = irand(rng, 0, static_cast<int>(*arr->array_size) - 1);
    return binop(op, index_ref(arr->name, int_lit(idx)),
                 int_lit(irand(rng, static_cast<int>(arr->lo), static_cast<int>(arr->hi))));
  }
  if (vars.empty()) return bool_lit(chance(rng, 0.5));
  const auto& [name, decl] = vars[static_cast<size_t>(irand(rng, 0, static_cast<int>(vars.size()) - 1))];
  if (chance(rng, 0.3) && vars.size() > 1) {
    const auto& other = vars[static_cast<size_t>(irand(rng, 0, static_cast<int>(vars.size()) - 1))];
    return binop(op, name_ref(name), name_ref(other.first));
  }
  return binop(op, name_ref(name),
               int_lit(irand(rng, static_cast<int>(decl->lo), static_cast<int>(decl->hi))));
}

ExprPtr random_guard(std::mt19937& rng, const GenCtx& ctx, int depth) {
  if (depth == 0 || chance(rng, 0.5)) return random_leaf(rng, ctx);
  switch (irand(rng, 0, 3)) {
    case 0: return land(random_guard(rng, ctx, depth - 1), random_guard(rng, ctx, depth - 1));
    case 1: return lor(random_guard(rng, ctx, depth - 1), random_guard(rng, ctx, depth - 1));
    case 2: return negate(random_guard(rng, ctx, depth - 1));
    default: return imply(random_guard(rng, ctx, depth - 1), random_guard(rng, ctx, depth - 1));
  }
}

Update random_update(std::mt19937& rng, const GenCtx& ctx) {
  Update u;
  const int items = irand(rng, 0, 2);
  const auto* arr = [&]() -> const VariableDecl* {
    for (const auto& g : ctx.sys->globals)
      if (g.is_array()) return &g;
    return nullptr;
  }();
  for (int k = 0; k < items; ++k) {
    if (ctx.clock && chance(rng, 0.3)) {
      u.items.push_back(ClockReset{ctx.clock->name});
      continue;
    }
    if (arr && chance(rng, 0.25)) {
      if (chance(rng, 0.5)) {
        FirstMatch fm;
        fm.binder = "b";
        fm.lo = 0;
        fm.hi = *arr->array_size - 1;
        fm.pred = eq(index_ref(arr->name, name_ref("b")),
                     int_lit(irand(rng, static_cast<int>(arr->lo), static_cast<int>(arr->hi))));
        fm.assigns.push_back(
            {arr->name, name_ref("b"),
             int_lit(irand(rng, static_cast<int>(arr->lo), static_cast<int>(arr->hi)))});
        u.items.push_back(std::move(fm));
      } else {
        u.items.push_back(Assignment{
            arr->name, int_lit(irand(rng, 0, static_cast<int>(*arr->array_size) - 1)),
            int_lit(irand(rng, static_cast<int>(arr->lo), static_cast<int>(arr->hi)))});
      }
      continue;
    }
    std::vector<const VariableDecl*> targets;
    for (const auto& v : ctx.locals)
      if (!v.is_array()) targets.push_back(&v);
    for (const auto& g : ctx.sys->globals)
      if (!g.is_array()) targets.push_back(&g);
    if (targets.empty()) continue;
    const auto* t = targets[static_cast<size_t>(irand(rng, 0, static_cast<int>(targets.size()) - 1))];
    u.items.push_back(Assignment{
        t->name, nullptr, int_lit(irand(rng, static_cast<int>(t->lo), static_cast<int>(t->hi)))});
  }
  return u;
}

}  // namespace

SystemDef random_system(std::mt19937& rng) {
  SystemDef sys;
  const int n_channels = irand(rng, 1, 2);
  for (int c = 0; c < n_channels; ++c) sys.channels.push_back({"ch" + std::to_string(c)});

  if (chance(rng, 0.5)) {
    VariableDecl g;
    g.name = "g0";
    g.lo = 0;
    g.hi = irand(rng, 1, 2);
    g.initial = irand(rng, 0, static_cast<int>(g.hi));
    sys.globals.push_back(g);
  }
  if (chance(rng, 0.3)) {
    VariableDecl arr;
    arr.name = "slots";
    arr.lo = 0;
    arr.hi = 1;
    arr.initial = 0;
    arr.array_size = 2;
    sys.globals.push_back(arr);
  }

  const int n_templates = irand(rng, 1, 3);
  for (int t = 0; t < n_templates; ++t) {
    ProcessTemplate tmpl;
    tmpl.name = "P" + std::to_string(t);

    const int n_locs = irand(rng, 1, 4);
    for (int l = 0; l < n_locs; ++l) {
      Location loc;
      loc.name = "L" + std::to_string(l);
      loc.initial = l == 0;
      if (chance(rng, 0.15)) loc.kind = LocationKind::Committed;
      tmpl.locations.push_back(loc);
    }

    GenCtx ctx;
    ctx.sys = &sys;
    const int n_vars = irand(rng, 0, 2);
    for (int v = 0; v < n_vars; ++v) {
      VariableDecl var;
      var.name = "x" + std::to_string(v);
      var.lo = 0;
      var.hi = irand(rng, 1, 2);
      var.initial = irand(rng, 0, static_cast<int>(var.hi));
      tmpl.locals.push_back(var);
      ctx.locals.push_back(var);
    }
    if (chance(rng, 0.5)) {
      ClockDecl clock{"c0", irand(rng, 1, 3)};
      tmpl.clocks.push_back(clock);
      ctx.clock = clock;
      if (chance(rng, 0.4)) {
        auto& loc = tmpl.locations[static_cast<size_t>(irand(rng, 0, n_locs - 1))];
        loc.invariant = le(name_ref("c0"), int_lit(irand(rng, 1, static_cast<int>(clock.ceiling))));
      }
    }

    const int n_edges = irand(rng, 1, 5);
    for (int e = 0; e < n_edges; ++e) {
      Edge edge;
      edge.source = "L" + std::to_string(irand(rng, 0, n_locs - 1));
      edge.target = "L" + std::to_string(irand(rng, 0, n_locs - 1));
      const int s = irand(rng, 0, 3);
      if (s == 0 || s == 1) {
        edge.sync = no_sync();
      } else {
        const std::string ch = "ch" + std::to_string(irand(rng, 0, n_channels - 1));
        edge.sync = s == 2 ? send(ch) : receive(ch);
      }
      if (chance(rng, 0.6)) edge.guard = random_guard(rng, ctx, 2);
      edge.update = random_update(rng, ctx);
      tmpl.edges.push_back(std::move(edge));
    }
    sys.templates.push_back(std::move(tmpl));
    sys.processes.push_back({"P" + std::to_string(t), {}});
  }
  return sys;
}

}  // namespace hscheck::testing
