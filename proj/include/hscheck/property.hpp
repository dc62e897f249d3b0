#ifndef HSCHECK_PROPERTY_HPP_
#define HSCHECK_PROPERTY_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hscheck/protocols.hpp"
#include "hscheck/semantics.hpp"

// Query language: invariant (`A[]`) and reachability (`E<>`) properties
// over quantified state predicates, in the syntax used by the standard
// property suite. Quantifiers are elaborated into explicit finite
// conjunctions/disjunctions over concrete ids and slot readers.

namespace hscheck {

// ---------------------------------------------------------------------------
// AST

enum class PathQuantifier { Invariant, Reach };

enum class PropKind {
  IntLit,
  BoolLit,
  Symbol,  // bound variable or named constant
  Field,   // Proc(arg).var | Proc.var | Proc.var[idx] | Proc.var[idx].field
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
  Forall,
  Exists,
};

struct PropExpr;
using PropExprPtr = std::shared_ptr<const PropExpr>;

// Quantifier range: the `ids` alias or an explicit int[lo, hi].
struct RangeSpec {
  bool is_ids = false;
  PropExprPtr lo, hi;  // constant expressions when !is_ids
};

struct PropExpr {
  PropKind kind = PropKind::IntLit;
  int64_t literal = 0;

  std::string name;  // Symbol; binder name for quantifiers

  // Field access parts
  std::string proc;
  PropExprPtr proc_arg;  // null: unparameterized access
  std::string var;
  PropExprPtr index;  // null: scalar
  std::string field;  // empty: no trailing field

  RangeSpec range;      // quantifiers
  PropExprPtr lhs, rhs;  // operands; quantifier body in lhs
};

struct PropertyAst {
  PathQuantifier quantifier = PathQuantifier::Invariant;
  PropExprPtr predicate;
};

bool structurally_equal(const PropExpr& a, const PropExpr& b);
bool structurally_equal(const PropertyAst& a, const PropertyAst& b);

// ---------------------------------------------------------------------------
// Parsing and printing

struct SourcePos {
  int line = 1;
  int column = 1;
};

class PropertyParseError : public std::runtime_error {
 public:
  PropertyParseError(SourcePos pos, std::string message, std::vector<std::string> expected);
  SourcePos pos;
  std::vector<std::string> expected;
};

// Parses a single property. Malformed input raises PropertyParseError
// with a line/column position and the expected-token set.
PropertyAst parse_property(const std::string& text);

// Renders an AST so that parse_property(print_property(ast)) is
// structurally equal to ast.
std::string print_property(const PropertyAst& ast);

// Query file format: `--` comment lines, one `name: <ident>` header per
// block, body lines until the next header.
struct NamedPropertyText {
  std::string name;
  std::string text;
};

std::vector<NamedPropertyText> parse_query_file(const std::string& contents);

// ---------------------------------------------------------------------------
// Elaboration

struct ElaborationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quantifier-free predicate over concrete state slots, evaluable on any
// SystemState of the system it was elaborated against.
struct GroundTerm {
  enum class Kind { Const, GlobalSlot, LocalSlot };
  Kind kind = Kind::Const;
  int64_t value = 0;  // Const
  int slot = 0;       // slot index (globals or locals vector)
  std::string display;

  int64_t read(const SystemState& s) const {
    switch (kind) {
      case Kind::Const: return value;
      case Kind::GlobalSlot: return s.globals[static_cast<size_t>(slot)];
      case Kind::LocalSlot: return s.locals[static_cast<size_t>(slot)];
    }
    return 0;
  }
};

struct GroundPred;
using GroundPredPtr = std::shared_ptr<const GroundPred>;

struct GroundPred {
  enum class Kind { ConstBool, Compare, And, Or, Not, Imply };
  Kind kind = Kind::ConstBool;
  bool truth = false;
  PropKind cmp = PropKind::Eq;  // Compare operator
  GroundTerm a, b;
  std::vector<GroundPredPtr> children;  // And/Or n-ary, Not 1, Imply 2
};

bool eval_ground(const GroundPred& pred, const SystemState& s);

struct GroundProperty {
  bool invariant = false;  // else reachability
  GroundPredPtr predicate;
};

// Expands quantifiers over concrete ranges and resolves every term to a
// state-slot reader. `ids` binds to the system's client id set, narrowed
// to the legitimate ids under IdsScope::LegitOnly.
GroundProperty elaborate(const PropertyAst& ast, const Engine& engine,
                         IdsScope ids_scope = IdsScope::AllClients);

}  // namespace hscheck

#endif  // HSCHECK_PROPERTY_HPP_
