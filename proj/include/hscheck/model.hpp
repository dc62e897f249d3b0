#ifndef HSCHECK_MODEL_HPP_
#define HSCHECK_MODEL_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

// Modeling vocabulary: process templates built from locations, edges,
// bounded integer variables, saturating discrete clocks and broadcast
// channels, plus static validation and expression evaluation.

namespace hscheck {

// ---------------------------------------------------------------------------
// Expressions

enum class ExprKind {
  IntLit,
  BoolLit,
  Name,     // variable, clock, parameter, named constant or bound index
  Index,    // array element: name[index]
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

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression tree. Leaves reference names that are resolved
// against the enclosing template/system during validation and linking.
struct Expr {
  ExprKind kind = ExprKind::IntLit;
  int64_t literal = 0;    // IntLit value, BoolLit 0/1
  std::string name;       // Name / Index base
  ExprPtr index;          // Index subscript
  ExprPtr lhs, rhs;       // operands (Not uses lhs only)
};

ExprPtr int_lit(int64_t v);
ExprPtr bool_lit(bool v);
ExprPtr name_ref(std::string name);
ExprPtr index_ref(std::string array, ExprPtr idx);
ExprPtr binop(ExprKind op, ExprPtr a, ExprPtr b);
ExprPtr negate(ExprPtr a);

inline ExprPtr add(ExprPtr a, ExprPtr b) { return binop(ExprKind::Add, std::move(a), std::move(b)); }
inline ExprPtr sub(ExprPtr a, ExprPtr b) { return binop(ExprKind::Sub, std::move(a), std::move(b)); }
inline ExprPtr eq(ExprPtr a, ExprPtr b) { return binop(ExprKind::Eq, std::move(a), std::move(b)); }
inline ExprPtr ne(ExprPtr a, ExprPtr b) { return binop(ExprKind::Ne, std::move(a), std::move(b)); }
inline ExprPtr lt(ExprPtr a, ExprPtr b) { return binop(ExprKind::Lt, std::move(a), std::move(b)); }
inline ExprPtr le(ExprPtr a, ExprPtr b) { return binop(ExprKind::Le, std::move(a), std::move(b)); }
inline ExprPtr gt(ExprPtr a, ExprPtr b) { return binop(ExprKind::Gt, std::move(a), std::move(b)); }
inline ExprPtr ge(ExprPtr a, ExprPtr b) { return binop(ExprKind::Ge, std::move(a), std::move(b)); }
inline ExprPtr land(ExprPtr a, ExprPtr b) { return binop(ExprKind::And, std::move(a), std::move(b)); }
inline ExprPtr lor(ExprPtr a, ExprPtr b) { return binop(ExprKind::Or, std::move(a), std::move(b)); }
inline ExprPtr imply(ExprPtr a, ExprPtr b) { return binop(ExprKind::Imply, std::move(a), std::move(b)); }

// Renders with minimal parentheses; `imply` binds loosest, then `or`,
// then `and`, then `not`.
std::string to_string(const Expr& e);
std::string to_string(const ExprPtr& e);

// ---------------------------------------------------------------------------
// Updates

struct Assignment {
  std::string target;
  ExprPtr index;  // null for scalars
  ExprPtr value;
};

struct ClockReset {
  std::string clock;  // reset to zero
};

// Finds the first index in [lo, hi] whose predicate holds and runs the
// assignments with `binder` bound to it; no-op when nothing matches.
// This is how the server templates allocate the first free TCB slot and
// free the first slot matching a peer.
struct FirstMatch {
  std::string binder;
  int64_t lo = 0;
  int64_t hi = -1;
  ExprPtr pred;
  std::vector<Assignment> assigns;
};

using UpdateItem = std::variant<Assignment, ClockReset, FirstMatch>;

// Items execute left to right; later items see earlier writes.
struct Update {
  std::vector<UpdateItem> items;
};

// ---------------------------------------------------------------------------
// Declarations

struct Channel {
  std::string name;  // all channels are broadcast
};

struct VariableDecl {
  std::string name;
  int64_t lo = 0;
  int64_t hi = 0;
  int64_t initial = 0;
  std::optional<int64_t> array_size;  // nullopt: scalar

  bool is_array() const { return array_size.has_value(); }
  int64_t slot_count() const { return array_size.value_or(1); }
};

struct ClockDecl {
  std::string name;
  int64_t ceiling = 1;  // values saturate here; must dominate compared constants
};

enum class LocationKind { Normal, Committed };

struct Location {
  std::string name;
  LocationKind kind = LocationKind::Normal;
  bool initial = false;
  ExprPtr invariant;  // boolean over clock-vs-constant comparisons; null = true
};

enum class SyncKind { None, Send, Receive };

struct Sync {
  SyncKind kind = SyncKind::None;
  std::string channel;
};

inline Sync no_sync() { return {}; }
inline Sync send(std::string ch) { return {SyncKind::Send, std::move(ch)}; }
inline Sync receive(std::string ch) { return {SyncKind::Receive, std::move(ch)}; }

struct Edge {
  std::string source;
  std::string target;
  ExprPtr guard;  // null = true
  Sync sync;
  Update update;
  std::string name;  // optional display label for traces and diagrams
};

struct Parameter {
  std::string name;
  int64_t lo = 0;
  int64_t hi = 0;
};

struct ProcessTemplate {
  std::string name;
  std::vector<Parameter> parameters;
  std::vector<Location> locations;
  std::vector<Edge> edges;
  std::vector<VariableDecl> locals;
  std::vector<ClockDecl> clocks;
};

struct ProcessInstance {
  std::string template_name;
  std::vector<int64_t> arguments;  // one value per template parameter

  std::string display_name() const;
};

struct SystemDef {
  std::vector<VariableDecl> globals;
  std::vector<Channel> channels;
  std::vector<ProcessTemplate> templates;
  std::vector<ProcessInstance> processes;
  std::map<std::string, int64_t> constants;
  // Named id sets used by property elaboration (`ids` and friends).
  std::map<std::string, std::vector<int64_t>> id_sets;

  const ProcessTemplate* find_template(const std::string& name) const;
  const VariableDecl* find_global(const std::string& name) const;
};

// ---------------------------------------------------------------------------
// Validation

struct ModelError {
  std::string element;  // offending declaration/edge/expression
  std::string rule;     // short rule identifier
  std::string message;
};

std::string to_string(const ModelError& e);

// Checks one template against the system context (channels, globals,
// constants): name resolution, typing, clock comparison restrictions,
// array bounds, single initial location, clock ceilings.
std::vector<ModelError> validate_template(const ProcessTemplate& t, const SystemDef& sys);

// Whole-system validation: declaration well-formedness plus every
// template and instantiation.
std::vector<ModelError> validate_system(const SystemDef& sys);

// ---------------------------------------------------------------------------
// Evaluation

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integer-or-boolean result of expression evaluation.
struct Value {
  bool boolean = false;
  int64_t num = 0;

  static Value of_int(int64_t v) { return {false, v}; }
  static Value of_bool(bool v) { return {true, v ? 1 : 0}; }
  bool is_bool() const { return boolean; }
  int64_t as_int() const;
  bool as_bool() const;
  bool operator==(const Value&) const = default;
};

// Name binding used by eval_expr. Scalar names cover variables, clocks,
// parameters and named constants alike.
class EvalEnv {
 public:
  virtual ~EvalEnv() = default;
  virtual std::optional<int64_t> lookup(const std::string& name) const = 0;
  virtual std::optional<int64_t> lookup_indexed(const std::string& name, int64_t index) const = 0;
};

// Convenience map-backed environment.
class MapEnv : public EvalEnv {
 public:
  std::map<std::string, int64_t> scalars;
  std::map<std::string, std::vector<int64_t>> arrays;

  std::optional<int64_t> lookup(const std::string& name) const override;
  std::optional<int64_t> lookup_indexed(const std::string& name, int64_t index) const override;
};

// Standard arithmetic/boolean evaluation; `imply` is material
// implication. Unbound names raise EvalError.
Value eval_expr(const Expr& e, const EvalEnv& env);
Value eval_expr(const ExprPtr& e, const EvalEnv& env);  // null = true

}  // namespace hscheck

#endif  // HSCHECK_MODEL_HPP_
