#include "hscheck/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hscheck {

ExprPtr int_lit(int64_t v) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::IntLit;
  e->literal = v;
  return e;
}

ExprPtr bool_lit(bool v) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::BoolLit;
  e->literal = v ? 1 : 0;
  return e;
}

ExprPtr name_ref(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Name;
  e->name = std::move(name);
  return e;
}

ExprPtr index_ref(std::string array, ExprPtr idx) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Index;
  e->name = std::move(array);
  e->index = std::move(idx);
  return e;
}

ExprPtr binop(ExprKind op, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = op;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

ExprPtr negate(ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Not;
  e->lhs = std::move(a);
  return e;
}

namespace {

// Precedence levels for printing: imply binds loosest, then or, and,
// not, comparisons, additive, atoms.
int precedence(ExprKind k) {
  switch (k) {
    case ExprKind::Imply: return 1;
    case ExprKind::Or: return 2;
    case ExprKind::And: return 3;
    case ExprKind::Not: return 4;
    case ExprKind::Eq:
    case ExprKind::Ne:
    case ExprKind::Lt:
    case ExprKind::Le:
    case ExprKind::Gt:
    case ExprKind::Ge: return 5;
    case ExprKind::Add:
    case ExprKind::Sub: return 6;
    default: return 7;
  }
}

const char* op_text(ExprKind k) {
  switch (k) {
    case ExprKind::Add: return "+";
    case ExprKind::Sub: return "-";
    case ExprKind::Eq: return "==";
    case ExprKind::Ne: return "!=";
    case ExprKind::Lt: return "<";
    case ExprKind::Le: return "<=";
    case ExprKind::Gt: return ">";
    case ExprKind::Ge: return ">=";
    case ExprKind::And: return "and";
    case ExprKind::Or: return "or";
    case ExprKind::Imply: return "imply";
    default: return "?";
  }
}

void print_expr(const Expr& e, int parent_prec, std::ostream& out) {
  const int prec = precedence(e.kind);
  switch (e.kind) {
    case ExprKind::IntLit:
      out << e.literal;
      return;
    case ExprKind::BoolLit:
      out << (e.literal ? "true" : "false");
      return;
    case ExprKind::Name:
      out << e.name;
      return;
    case ExprKind::Index:
      out << e.name << '[';
      print_expr(*e.index, 0, out);
      out << ']';
      return;
    case ExprKind::Not:
      if (prec < parent_prec) out << '(';
      out << "not ";
      print_expr(*e.lhs, prec, out);
      if (prec < parent_prec) out << ')';
      return;
    default: {
      if (prec < parent_prec) out << '(';
      print_expr(*e.lhs, prec + 1, out);
      out << ' ' << op_text(e.kind) << ' ';
      // right-associative chains print without parens on the right
      print_expr(*e.rhs, e.kind == ExprKind::Imply ? prec : prec + 1, out);
      if (prec < parent_prec) out << ')';
      return;
    }
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  std::ostringstream out;
  print_expr(e, 0, out);
  return out.str();
}

std::string to_string(const ExprPtr& e) {
  return e ? to_string(*e) : std::string("true");
}

std::string ProcessInstance::display_name() const {
  if (arguments.empty()) return template_name;
  std::ostringstream out;
  out << template_name << '(';
  for (size_t i = 0; i < arguments.size(); ++i) {
    if (i) out << ", ";
    out << arguments[i];
  }
  out << ')';
  return out.str();
}

const ProcessTemplate* SystemDef::find_template(const std::string& name) const {
  for (const auto& t : templates)
    if (t.name == name) return &t;
  return nullptr;
}

const VariableDecl* SystemDef::find_global(const std::string& name) const {
  for (const auto& g : globals)
    if (g.name == name) return &g;
  return nullptr;
}

std::string to_string(const ModelError& e) {
  return e.element + ": " + e.rule + ": " + e.message;
}

int64_t Value::as_int() const {
  if (boolean) throw EvalError("boolean value used where integer expected");
  return num;
}

bool Value::as_bool() const {
  if (!boolean) throw EvalError("integer value used where boolean expected");
  return num != 0;
}

std::optional<int64_t> MapEnv::lookup(const std::string& name) const {
  auto it = scalars.find(name);
  if (it == scalars.end()) return std::nullopt;
  return it->second;
}

std::optional<int64_t> MapEnv::lookup_indexed(const std::string& name, int64_t index) const {
  auto it = arrays.find(name);
  if (it == arrays.end()) return std::nullopt;
  if (index < 0 || index >= static_cast<int64_t>(it->second.size()))
    throw EvalError("index " + std::to_string(index) + " out of bounds for " + name);
  return it->second[static_cast<size_t>(index)];
}

Value eval_expr(const Expr& e, const EvalEnv& env) {
  switch (e.kind) {
    case ExprKind::IntLit:
      return Value::of_int(e.literal);
    case ExprKind::BoolLit:
      return Value::of_bool(e.literal != 0);
    case ExprKind::Name: {
      auto v = env.lookup(e.name);
      if (!v) throw EvalError("unbound name '" + e.name + "'");
      return Value::of_int(*v);
    }
    case ExprKind::Index: {
      const int64_t idx = eval_expr(*e.index, env).as_int();
      auto v = env.lookup_indexed(e.name, idx);
      if (!v) throw EvalError("unbound array '" + e.name + "'");
      return Value::of_int(*v);
    }
    case ExprKind::Add:
      return Value::of_int(eval_expr(*e.lhs, env).as_int() + eval_expr(*e.rhs, env).as_int());
    case ExprKind::Sub:
      return Value::of_int(eval_expr(*e.lhs, env).as_int() - eval_expr(*e.rhs, env).as_int());
    case ExprKind::Eq:
      return Value::of_bool(eval_expr(*e.lhs, env).as_int() == eval_expr(*e.rhs, env).as_int());
    case ExprKind::Ne:
      return Value::of_bool(eval_expr(*e.lhs, env).as_int() != eval_expr(*e.rhs, env).as_int());
    case ExprKind::Lt:
      return Value::of_bool(eval_expr(*e.lhs, env).as_int() < eval_expr(*e.rhs, env).as_int());
    case ExprKind::Le:
      return Value::of_bool(eval_expr(*e.lhs, env).as_int() <= eval_expr(*e.rhs, env).as_int());
    case ExprKind::Gt:
      return Value::of_bool(eval_expr(*e.lhs, env).as_int() > eval_expr(*e.rhs, env).as_int());
    case ExprKind::Ge:
      return Value::of_bool(eval_expr(*e.lhs, env).as_int() >= eval_expr(*e.rhs, env).as_int());
    case ExprKind::And:
      return Value::of_bool(eval_expr(*e.lhs, env).as_bool() && eval_expr(*e.rhs, env).as_bool());
    case ExprKind::Or:
      return Value::of_bool(eval_expr(*e.lhs, env).as_bool() || eval_expr(*e.rhs, env).as_bool());
    case ExprKind::Not:
      return Value::of_bool(!eval_expr(*e.lhs, env).as_bool());
    case ExprKind::Imply:
      return Value::of_bool(!eval_expr(*e.lhs, env).as_bool() || eval_expr(*e.rhs, env).as_bool());
  }
  throw EvalError("corrupt expression node");
}

Value eval_expr(const ExprPtr& e, const EvalEnv& env) {
  if (!e) return Value::of_bool(true);
  return eval_expr(*e, env);
}

// ---------------------------------------------------------------------------
// Validation

namespace {

bool valid_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

enum class ExprType { Int, Bool, Clock };

// Per-template symbol context used while checking expressions.
struct Scope {
  const ProcessTemplate* tmpl = nullptr;
  const SystemDef* sys = nullptr;
  const FirstMatch* binder = nullptr;  // active first-match binder, if any
  std::vector<ModelError>* errors = nullptr;
  std::string element;

  void error(const std::string& rule, const std::string& message) const {
    errors->push_back({element, rule, message});
  }

  const VariableDecl* find_local(const std::string& name) const {
    for (const auto& v : tmpl->locals)
      if (v.name == name) return &v;
    return nullptr;
  }
  const ClockDecl* find_clock(const std::string& name) const {
    for (const auto& c : tmpl->clocks)
      if (c.name == name) return &c;
    return nullptr;
  }
  const Parameter* find_param(const std::string& name) const {
    for (const auto& p : tmpl->parameters)
      if (p.name == name) return &p;
    return nullptr;
  }
  const VariableDecl* find_var(const std::string& name) const {
    if (const auto* v = find_local(name)) return v;
    return sys->find_global(name);
  }
  bool is_constant(const std::string& name) const { return sys->constants.count(name) > 0; }
  bool is_binder(const std::string& name) const { return binder && binder->binder == name; }
};

// A "constant-like" expression may mention literals, named constants,
// parameters and the first-match binder, but no variables or clocks.
bool is_constant_like(const Expr& e, const Scope& sc) {
  switch (e.kind) {
    case ExprKind::IntLit:
      return true;
    case ExprKind::Name:
      return sc.is_constant(e.name) || sc.find_param(e.name) != nullptr || sc.is_binder(e.name);
    case ExprKind::Add:
    case ExprKind::Sub:
      return is_constant_like(*e.lhs, sc) && is_constant_like(*e.rhs, sc);
    default:
      return false;
  }
}

// Folds a constant-like expression given parameter/binder ranges are not
// needed; returns nullopt when parameters or binders are involved.
std::optional<int64_t> fold_constant(const Expr& e, const Scope& sc) {
  switch (e.kind) {
    case ExprKind::IntLit:
      return e.literal;
    case ExprKind::Name: {
      auto it = sc.sys->constants.find(e.name);
      if (it != sc.sys->constants.end()) return it->second;
      return std::nullopt;
    }
    case ExprKind::Add: {
      auto a = fold_constant(*e.lhs, sc), b = fold_constant(*e.rhs, sc);
      if (a && b) return *a + *b;
      return std::nullopt;
    }
    case ExprKind::Sub: {
      auto a = fold_constant(*e.lhs, sc), b = fold_constant(*e.rhs, sc);
      if (a && b) return *a - *b;
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

// Largest value a constant-like expression can take; used for the clock
// ceiling check (parameters contribute their range top).
std::optional<int64_t> constant_upper_bound(const Expr& e, const Scope& sc) {
  switch (e.kind) {
    case ExprKind::IntLit:
      return e.literal;
    case ExprKind::Name: {
      auto it = sc.sys->constants.find(e.name);
      if (it != sc.sys->constants.end()) return it->second;
      if (const auto* p = sc.find_param(e.name)) return p->hi;
      if (sc.is_binder(e.name)) return sc.binder->hi;
      return std::nullopt;
    }
    case ExprKind::Add: {
      auto a = constant_upper_bound(*e.lhs, sc), b = constant_upper_bound(*e.rhs, sc);
      if (a && b) return *a + *b;
      return std::nullopt;
    }
    case ExprKind::Sub: {
      // lower bound of rhs would be needed for tightness; fold only
      auto v = fold_constant(e, sc);
      return v;
    }
    default:
      return std::nullopt;
  }
}

void check_array_index(const Expr& e, const VariableDecl& decl, const Scope& sc) {
  if (!is_constant_like(*e.index, sc)) {
    sc.error("computed-index", "array '" + e.name + "' indexed by a non-constant expression '" +
                                   to_string(*e.index) + "'");
    return;
  }
  const int64_t size = decl.slot_count();
  if (auto v = fold_constant(*e.index, sc)) {
    if (*v < 0 || *v >= size)
      sc.error("index-bounds", "index " + std::to_string(*v) + " out of bounds for '" + e.name +
                                   "[" + std::to_string(size) + "]'");
    return;
  }
  // parameter or binder: require its full range inside the bounds
  if (const Expr& ix = *e.index; ix.kind == ExprKind::Name) {
    int64_t lo = 0, hi = 0;
    if (const auto* p = sc.find_param(ix.name)) {
      lo = p->lo;
      hi = p->hi;
    } else if (sc.is_binder(ix.name)) {
      lo = sc.binder->lo;
      hi = sc.binder->hi;
    } else {
      return;
    }
    if (lo < 0 || hi >= size)
      sc.error("index-bounds", "index '" + ix.name + "' ranges [" + std::to_string(lo) + "," +
                                   std::to_string(hi) + "] outside '" + e.name + "[" +
                                   std::to_string(size) + "]'");
  }
}

ExprType check_expr(const Expr& e, const Scope& sc);

ExprType check_comparison(const Expr& e, const Scope& sc) {
  const ExprType lt = check_expr(*e.lhs, sc);
  const ExprType rt = check_expr(*e.rhs, sc);
  if (lt == ExprType::Bool || rt == ExprType::Bool) {
    sc.error("type", "comparison over boolean operand in '" + to_string(e) + "'");
    return ExprType::Bool;
  }
  if (lt == ExprType::Clock || rt == ExprType::Clock) {
    const Expr& other = (lt == ExprType::Clock) ? *e.rhs : *e.lhs;
    if (lt == ExprType::Clock && rt == ExprType::Clock) {
      sc.error("clock-compare", "clock compared to clock in '" + to_string(e) + "'");
    } else if (!is_constant_like(other, sc)) {
      sc.error("clock-compare", "clock compared to non-constant in '" + to_string(e) + "'");
    }
  }
  return ExprType::Bool;
}

ExprType check_expr(const Expr& e, const Scope& sc) {
  switch (e.kind) {
    case ExprKind::IntLit:
      return ExprType::Int;
    case ExprKind::BoolLit:
      return ExprType::Bool;
    case ExprKind::Name: {
      if (sc.is_binder(e.name) || sc.find_param(e.name)) return ExprType::Int;
      if (const auto* v = sc.find_var(e.name)) {
        if (v->is_array())
          sc.error("array-use", "array '" + e.name + "' used without index");
        return ExprType::Int;
      }
      if (sc.find_clock(e.name)) return ExprType::Clock;
      if (sc.is_constant(e.name)) return ExprType::Int;
      sc.error("undeclared", "name '" + e.name + "' is not declared");
      return ExprType::Int;
    }
    case ExprKind::Index: {
      const auto* v = sc.find_var(e.name);
      if (!v) {
        sc.error("undeclared", "array '" + e.name + "' is not declared");
        return ExprType::Int;
      }
      if (!v->is_array()) {
        sc.error("array-use", "scalar '" + e.name + "' used with index");
        return ExprType::Int;
      }
      check_expr(*e.index, sc);
      check_array_index(e, *v, sc);
      return ExprType::Int;
    }
    case ExprKind::Add:
    case ExprKind::Sub: {
      if (check_expr(*e.lhs, sc) != ExprType::Int || check_expr(*e.rhs, sc) != ExprType::Int)
        sc.error("type", "arithmetic over non-integer operand in '" + to_string(e) + "'");
      return ExprType::Int;
    }
    case ExprKind::Eq:
    case ExprKind::Ne:
    case ExprKind::Lt:
    case ExprKind::Le:
    case ExprKind::Gt:
    case ExprKind::Ge:
      return check_comparison(e, sc);
    case ExprKind::And:
    case ExprKind::Or:
    case ExprKind::Imply: {
      if (check_expr(*e.lhs, sc) != ExprType::Bool || check_expr(*e.rhs, sc) != ExprType::Bool)
        sc.error("type", "boolean operator over non-boolean operand in '" + to_string(e) + "'");
      return ExprType::Bool;
    }
    case ExprKind::Not: {
      if (check_expr(*e.lhs, sc) != ExprType::Bool)
        sc.error("type", "'not' over non-boolean operand in '" + to_string(e) + "'");
      return ExprType::Bool;
    }
  }
  return ExprType::Int;
}

void check_guard(const ExprPtr& g, Scope& sc) {
  if (!g) return;
  if (check_expr(*g, sc) != ExprType::Bool)
    sc.error("type", "guard '" + to_string(*g) + "' is not boolean");
}

// Location invariants may only constrain clocks against constants.
void check_invariant_shape(const Expr& e, const Scope& sc) {
  switch (e.kind) {
    case ExprKind::BoolLit:
      return;
    case ExprKind::And:
      check_invariant_shape(*e.lhs, sc);
      check_invariant_shape(*e.rhs, sc);
      return;
    case ExprKind::Eq:
    case ExprKind::Ne:
    case ExprKind::Lt:
    case ExprKind::Le:
    case ExprKind::Gt:
    case ExprKind::Ge: {
      const bool lclock = e.lhs->kind == ExprKind::Name && sc.find_clock(e.lhs->name);
      const bool rclock = e.rhs->kind == ExprKind::Name && sc.find_clock(e.rhs->name);
      if (!lclock && !rclock)
        sc.error("invariant-shape", "invariant comparison without clock: '" + to_string(e) + "'");
      return;
    }
    default:
      sc.error("invariant-shape", "invariant must be a conjunction of clock comparisons: '" +
                                      to_string(e) + "'");
  }
}

void check_assignment(const Assignment& a, Scope& sc) {
  const auto* v = sc.find_var(a.target);
  if (!v) {
    sc.error("undeclared", "assignment target '" + a.target + "' is not declared");
    return;
  }
  if (v->is_array() != static_cast<bool>(a.index)) {
    sc.error("array-use", std::string("assignment target '") + a.target +
                              (v->is_array() ? "' needs an index" : "' is not an array"));
  } else if (a.index) {
    Expr fake;
    fake.kind = ExprKind::Index;
    fake.name = a.target;
    fake.index = a.index;
    check_expr(*a.index, sc);
    check_array_index(fake, *v, sc);
  }
  if (check_expr(*a.value, sc) != ExprType::Int)
    sc.error("type", "assigned value '" + to_string(*a.value) + "' is not an integer");
}

void check_update(const Update& u, Scope& sc) {
  for (const auto& item : u.items) {
    if (const auto* a = std::get_if<Assignment>(&item)) {
      check_assignment(*a, sc);
    } else if (const auto* r = std::get_if<ClockReset>(&item)) {
      if (!sc.find_clock(r->clock))
        sc.error("undeclared", "clock reset target '" + r->clock + "' is not declared");
    } else if (const auto* f = std::get_if<FirstMatch>(&item)) {
      if (sc.binder) {
        sc.error("nested-binder", "nested first-match blocks are not supported");
        continue;
      }
      if (!valid_ident(f->binder) || sc.find_var(f->binder) || sc.find_param(f->binder) ||
          sc.is_constant(f->binder))
        sc.error("binder", "first-match binder '" + f->binder + "' shadows a declared name");
      if (f->lo > f->hi)
        sc.error("binder", "first-match range [" + std::to_string(f->lo) + "," +
                               std::to_string(f->hi) + "] is empty");
      Scope inner = sc;
      inner.binder = f;
      if (!f->pred || check_expr(*f->pred, inner) != ExprType::Bool)
        sc.error("type", "first-match predicate is not boolean");
      for (const auto& a : f->assigns) check_assignment(a, inner);
    }
  }
}

// Collects every constant a clock is compared against, to enforce the
// ceiling rule.
void collect_clock_bounds(const Expr& e, const Scope& sc,
                          std::map<std::string, int64_t>& bounds) {
  switch (e.kind) {
    case ExprKind::Eq:
    case ExprKind::Ne:
    case ExprKind::Lt:
    case ExprKind::Le:
    case ExprKind::Gt:
    case ExprKind::Ge: {
      const Expr* clock = nullptr;
      const Expr* other = nullptr;
      if (e.lhs->kind == ExprKind::Name && sc.find_clock(e.lhs->name)) {
        clock = e.lhs.get();
        other = e.rhs.get();
      } else if (e.rhs->kind == ExprKind::Name && sc.find_clock(e.rhs->name)) {
        clock = e.rhs.get();
        other = e.lhs.get();
      }
      if (clock && other) {
        if (auto hi = constant_upper_bound(*other, sc)) {
          auto& cur = bounds[clock->name];
          cur = std::max(cur, *hi);
        }
      }
      return;
    }
    default:
      if (e.lhs) collect_clock_bounds(*e.lhs, sc, bounds);
      if (e.rhs) collect_clock_bounds(*e.rhs, sc, bounds);
      if (e.index) collect_clock_bounds(*e.index, sc, bounds);
  }
}

void check_decl_list(const std::vector<VariableDecl>& decls, const std::string& owner,
                     std::vector<ModelError>& errors) {
  std::set<std::string> seen;
  for (const auto& v : decls) {
    const std::string el = owner + "." + v.name;
    if (!valid_ident(v.name)) errors.push_back({el, "ident", "invalid identifier"});
    if (!seen.insert(v.name).second) errors.push_back({el, "duplicate", "duplicate variable name"});
    if (v.lo > v.hi)
      errors.push_back({el, "range", "empty range [" + std::to_string(v.lo) + "," +
                                         std::to_string(v.hi) + "]"});
    if (v.initial < v.lo || v.initial > v.hi)
      errors.push_back({el, "initial-range", "initial value " + std::to_string(v.initial) +
                                                 " outside declared range"});
    if (v.is_array() && *v.array_size < 1)
      errors.push_back({el, "array-size", "array size must be positive"});
  }
}

}  // namespace

std::vector<ModelError> validate_template(const ProcessTemplate& t, const SystemDef& sys) {
  std::vector<ModelError> errors;
  Scope sc;
  sc.tmpl = &t;
  sc.sys = &sys;
  sc.errors = &errors;
  sc.element = t.name;

  if (!valid_ident(t.name)) errors.push_back({t.name, "ident", "invalid template name"});

  std::set<std::string> param_names;
  for (const auto& p : t.parameters) {
    if (!valid_ident(p.name))
      errors.push_back({t.name + "." + p.name, "ident", "invalid parameter name"});
    if (!param_names.insert(p.name).second)
      errors.push_back({t.name + "." + p.name, "duplicate", "duplicate parameter"});
    if (p.lo > p.hi)
      errors.push_back({t.name + "." + p.name, "range", "empty parameter range"});
  }

  check_decl_list(t.locals, t.name, errors);

  std::set<std::string> clock_names;
  for (const auto& c : t.clocks) {
    if (!valid_ident(c.name))
      errors.push_back({t.name + "." + c.name, "ident", "invalid clock name"});
    if (!clock_names.insert(c.name).second)
      errors.push_back({t.name + "." + c.name, "duplicate", "duplicate clock"});
    if (c.ceiling < 1)
      errors.push_back({t.name + "." + c.name, "ceiling", "clock ceiling must be positive"});
  }

  std::set<std::string> loc_names;
  int initial_count = 0;
  for (const auto& loc : t.locations) {
    const std::string el = t.name + "." + loc.name;
    if (!valid_ident(loc.name)) errors.push_back({el, "ident", "invalid location name"});
    if (!loc_names.insert(loc.name).second)
      errors.push_back({el, "duplicate", "duplicate location name"});
    if (loc.initial) ++initial_count;
    if (loc.invariant) {
      Scope lsc = sc;
      lsc.element = el;
      if (check_expr(*loc.invariant, lsc) != ExprType::Bool)
        errors.push_back({el, "type", "invariant is not boolean"});
      check_invariant_shape(*loc.invariant, lsc);
    }
  }
  if (initial_count != 1)
    errors.push_back({t.name, "initial-location",
                      "template has " + std::to_string(initial_count) + " initial locations"});

  for (size_t i = 0; i < t.edges.size(); ++i) {
    const Edge& e = t.edges[i];
    Scope esc = sc;
    esc.element = t.name + ".edge[" + std::to_string(i) + "]" +
                  (e.name.empty() ? "" : " (" + e.name + ")");
    if (!loc_names.count(e.source))
      esc.error("dangling-location", "edge source '" + e.source + "' is not a location");
    if (!loc_names.count(e.target))
      esc.error("dangling-location", "edge target '" + e.target + "' is not a location");
    if (e.sync.kind != SyncKind::None) {
      const bool declared = std::any_of(sys.channels.begin(), sys.channels.end(),
                                        [&](const Channel& c) { return c.name == e.sync.channel; });
      if (!declared)
        esc.error("undeclared-channel", "channel '" + e.sync.channel + "' is not declared");
    }
    check_guard(e.guard, esc);
    check_update(e.update, esc);
  }

  // Ceiling rule: every clock must dominate the constants it is compared
  // against in guards and invariants.
  std::map<std::string, int64_t> bounds;
  for (const auto& loc : t.locations)
    if (loc.invariant) collect_clock_bounds(*loc.invariant, sc, bounds);
  for (const auto& e : t.edges)
    if (e.guard) collect_clock_bounds(*e.guard, sc, bounds);
  for (const auto& c : t.clocks) {
    auto it = bounds.find(c.name);
    if (it != bounds.end() && c.ceiling < it->second)
      errors.push_back({t.name + "." + c.name, "ceiling",
                        "ceiling " + std::to_string(c.ceiling) + " below compared constant " +
                            std::to_string(it->second)});
  }

  return errors;
}

std::vector<ModelError> validate_system(const SystemDef& sys) {
  std::vector<ModelError> errors;

  check_decl_list(sys.globals, "global", errors);

  std::set<std::string> chan_names;
  for (const auto& c : sys.channels) {
    if (!valid_ident(c.name)) errors.push_back({c.name, "ident", "invalid channel name"});
    if (!chan_names.insert(c.name).second)
      errors.push_back({c.name, "duplicate", "duplicate channel name"});
  }

  std::set<std::string> template_names;
  for (const auto& t : sys.templates) {
    if (!template_names.insert(t.name).second)
      errors.push_back({t.name, "duplicate", "duplicate template name"});
    auto sub = validate_template(t, sys);
    errors.insert(errors.end(), sub.begin(), sub.end());
  }

  for (size_t i = 0; i < sys.processes.size(); ++i) {
    const auto& inst = sys.processes[i];
    const std::string el = "process[" + std::to_string(i) + "] " + inst.display_name();
    const auto* t = sys.find_template(inst.template_name);
    if (!t) {
      errors.push_back({el, "unknown-template", "no template named '" + inst.template_name + "'"});
      continue;
    }
    if (inst.arguments.size() != t->parameters.size()) {
      errors.push_back({el, "arity", "expected " + std::to_string(t->parameters.size()) +
                                         " arguments, got " + std::to_string(inst.arguments.size())});
      continue;
    }
    for (size_t k = 0; k < inst.arguments.size(); ++k) {
      const auto& p = t->parameters[k];
      if (inst.arguments[k] < p.lo || inst.arguments[k] > p.hi)
        errors.push_back({el, "argument-range", "argument '" + p.name + "' = " +
                                                    std::to_string(inst.arguments[k]) +
                                                    " outside its declared range"});
    }
  }

  return errors;
}

}  // namespace hscheck
