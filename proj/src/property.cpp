#include "hscheck/property.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace hscheck {

// ---------------------------------------------------------------------------
// Structural equality

bool structurally_equal(const PropExpr& a, const PropExpr& b) {
  if (a.kind != b.kind) return false;
  auto eq_child = [](const PropExprPtr& x, const PropExprPtr& y) {
    if (!x || !y) return !x && !y;
    return structurally_equal(*x, *y);
  };
  switch (a.kind) {
    case PropKind::IntLit:
    case PropKind::BoolLit:
      return a.literal == b.literal;
    case PropKind::Symbol:
      return a.name == b.name;
    case PropKind::Field:
      return a.proc == b.proc && eq_child(a.proc_arg, b.proc_arg) && a.var == b.var &&
             eq_child(a.index, b.index) && a.field == b.field;
    case PropKind::Forall:
    case PropKind::Exists:
      return a.name == b.name && a.range.is_ids == b.range.is_ids &&
             eq_child(a.range.lo, b.range.lo) && eq_child(a.range.hi, b.range.hi) &&
             eq_child(a.lhs, b.lhs);
    case PropKind::Not:
      return eq_child(a.lhs, b.lhs);
    default:
      return eq_child(a.lhs, b.lhs) && eq_child(a.rhs, b.rhs);
  }
}

bool structurally_equal(const PropertyAst& a, const PropertyAst& b) {
  return a.quantifier == b.quantifier && structurally_equal(*a.predicate, *b.predicate);
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
  Ident,
  Int,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Dot,
  Comma,
  Colon,
  Plus,
  Minus,
  EqEq,
  NotEq,
  Lt,
  Le,
  Gt,
  Ge,
  End,
};

std::string tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Dot: return "'.'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::EqEq: return "'=='";
    case Tok::NotEq: return "'!='";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::Gt: return "'>'";
    case Tok::Ge: return "'>='";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int64_t value = 0;
  SourcePos pos;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto pos = [&] { return SourcePos{line, col}; };
  auto advance = [&](size_t k) {
    for (size_t j = 0; j < k; ++j, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.pos = pos();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      t.kind = Tok::Ident;
      t.text = text.substr(i, j - i);
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Tok::Int;
      t.text = text.substr(i, j - i);
      t.value = std::stoll(t.text);
      advance(j - i);
    } else {
      auto two = [&](char a, char b) {
        return c == a && i + 1 < text.size() && text[i + 1] == b;
      };
      if (two('=', '=')) {
        t.kind = Tok::EqEq;
        advance(2);
      } else if (two('!', '=')) {
        t.kind = Tok::NotEq;
        advance(2);
      } else if (two('<', '=')) {
        t.kind = Tok::Le;
        advance(2);
      } else if (two('>', '=')) {
        t.kind = Tok::Ge;
        advance(2);
      } else {
        switch (c) {
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          case '[': t.kind = Tok::LBracket; break;
          case ']': t.kind = Tok::RBracket; break;
          case '.': t.kind = Tok::Dot; break;
          case ',': t.kind = Tok::Comma; break;
          case ':': t.kind = Tok::Colon; break;
          case '+': t.kind = Tok::Plus; break;
          case '-': t.kind = Tok::Minus; break;
          case '<': t.kind = Tok::Lt; break;
          case '>': t.kind = Tok::Gt; break;
          default:
            throw PropertyParseError(pos(), std::string("unexpected character '") + c + "'", {});
        }
        advance(1);
      }
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::End;
  end.pos = pos();
  out.push_back(end);
  return out;
}

// ---------------------------------------------------------------------------
// Parser

PropExprPtr make_node(PropKind k) {
  auto n = std::make_shared<PropExpr>();
  n->kind = k;
  return std::const_pointer_cast<const PropExpr>(n);
}

std::shared_ptr<PropExpr> mut_node(PropKind k) {
  auto n = std::make_shared<PropExpr>();
  n->kind = k;
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

  PropertyAst parse() {
    PropertyAst ast;
    const Token& t = peek();
    if (t.kind == Tok::Ident && t.text == "A") {
      next();
      expect(Tok::LBracket);
      expect(Tok::RBracket);
      ast.quantifier = PathQuantifier::Invariant;
    } else if (t.kind == Tok::Ident && t.text == "E") {
      next();
      expect(Tok::Lt);
      expect(Tok::Gt);
      ast.quantifier = PathQuantifier::Reach;
    } else {
      fail("unknown path quantifier", {"'A[]'", "'E<>'"});
    }
    ast.predicate = parse_imply();
    if (peek().kind != Tok::End) fail("trailing input after property", {tok_name(Tok::End)});
    return ast;
  }

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;

  const Token& peek(size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) const {
    throw PropertyParseError(peek().pos, msg + " (found " + describe(peek()) + ")",
                             std::move(expected));
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::Ident) return "'" + t.text + "'";
    if (t.kind == Tok::Int) return "'" + t.text + "'";
    return tok_name(t.kind);
  }

  void expect(Tok kind) {
    if (peek().kind != kind) fail("unexpected token", {tok_name(kind)});
    next();
  }

  std::string expect_ident() {
    if (peek().kind != Tok::Ident) fail("expected identifier", {tok_name(Tok::Ident)});
    return next().text;
  }

  bool at_keyword(const char* kw) const {
    return peek().kind == Tok::Ident && peek().text == kw;
  }

  PropExprPtr parse_imply() {
    PropExprPtr left = parse_or();
    if (at_keyword("imply")) {
      next();
      auto node = mut_node(PropKind::Imply);
      node->lhs = std::move(left);
      node->rhs = parse_imply();  // right associative
      return node;
    }
    return left;
  }

  PropExprPtr parse_or() {
    PropExprPtr left = parse_and();
    while (at_keyword("or")) {
      next();
      auto node = mut_node(PropKind::Or);
      node->lhs = std::move(left);
      node->rhs = parse_and();
      left = std::move(node);
    }
    return left;
  }

  PropExprPtr parse_and() {
    PropExprPtr left = parse_unary();
    while (at_keyword("and")) {
      next();
      auto node = mut_node(PropKind::And);
      node->lhs = std::move(left);
      node->rhs = parse_unary();
      left = std::move(node);
    }
    return left;
  }

  PropExprPtr parse_unary() {
    if (at_keyword("not")) {
      next();
      auto node = mut_node(PropKind::Not);
      node->lhs = parse_unary();
      return node;
    }
    if (at_keyword("forall") || at_keyword("exists")) {
      const bool forall = peek().text == "forall";
      next();
      auto node = mut_node(forall ? PropKind::Forall : PropKind::Exists);
      expect(Tok::LParen);
      node->name = expect_ident();
      expect(Tok::Colon);
      node->range = parse_range();
      expect(Tok::RParen);
      node->lhs = parse_unary();
      return node;
    }
    return parse_comparison();
  }

  RangeSpec parse_range() {
    RangeSpec range;
    if (at_keyword("ids")) {
      next();
      range.is_ids = true;
      return range;
    }
    if (at_keyword("int")) {
      next();
      expect(Tok::LBracket);
      range.lo = parse_additive();
      expect(Tok::Comma);
      range.hi = parse_additive();
      expect(Tok::RBracket);
      return range;
    }
    fail("expected quantifier range", {"'ids'", "'int[lo, hi]'"});
  }

  static std::optional<PropKind> comparison_op(Tok t) {
    switch (t) {
      case Tok::EqEq: return PropKind::Eq;
      case Tok::NotEq: return PropKind::Ne;
      case Tok::Lt: return PropKind::Lt;
      case Tok::Le: return PropKind::Le;
      case Tok::Gt: return PropKind::Gt;
      case Tok::Ge: return PropKind::Ge;
      default: return std::nullopt;
    }
  }

  PropExprPtr parse_comparison() {
    PropExprPtr left = parse_additive();
    if (auto op = comparison_op(peek().kind)) {
      next();
      auto node = mut_node(*op);
      node->lhs = std::move(left);
      node->rhs = parse_additive();
      return node;
    }
    return left;
  }

  PropExprPtr parse_additive() {
    PropExprPtr left = parse_primary();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool plus = next().kind == Tok::Plus;
      auto node = mut_node(plus ? PropKind::Add : PropKind::Sub);
      node->lhs = std::move(left);
      node->rhs = parse_primary();
      left = std::move(node);
    }
    return left;
  }

  PropExprPtr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        auto node = mut_node(PropKind::IntLit);
        node->literal = next().value;
        return node;
      }
      case Tok::Minus: {  // negative literal
        next();
        if (peek().kind != Tok::Int) fail("expected integer after '-'", {tok_name(Tok::Int)});
        auto node = mut_node(PropKind::IntLit);
        node->literal = -next().value;
        return node;
      }
      case Tok::LParen: {
        next();
        PropExprPtr inner = parse_imply();
        expect(Tok::RParen);
        return inner;
      }
      case Tok::Ident: {
        if (t.text == "true" || t.text == "false") {
          auto node = mut_node(PropKind::BoolLit);
          node->literal = t.text == "true" ? 1 : 0;
          next();
          return node;
        }
        return parse_term();
      }
      default:
        fail("expected expression",
             {tok_name(Tok::Int), tok_name(Tok::Ident), tok_name(Tok::LParen)});
    }
  }

  // Symbol | Proc(arg).var | Proc.var | Proc.var[idx] | Proc.var[idx].field
  PropExprPtr parse_term() {
    const std::string first = expect_ident();
    if (peek().kind == Tok::LParen) {
      next();
      auto node = mut_node(PropKind::Field);
      node->proc = first;
      node->proc_arg = parse_additive();
      expect(Tok::RParen);
      expect(Tok::Dot);
      node->var = expect_ident();
      parse_term_suffix(*node);
      return node;
    }
    if (peek().kind == Tok::Dot) {
      next();
      auto node = mut_node(PropKind::Field);
      node->proc = first;
      node->var = expect_ident();
      parse_term_suffix(*node);
      return node;
    }
    auto node = mut_node(PropKind::Symbol);
    node->name = first;
    return node;
  }

  void parse_term_suffix(PropExpr& node) {
    if (peek().kind == Tok::LBracket) {
      next();
      node.index = parse_additive();
      expect(Tok::RBracket);
      if (peek().kind == Tok::Dot) {
        next();
        node.field = expect_ident();
      }
    }
  }
};

}  // namespace

PropertyParseError::PropertyParseError(SourcePos p, std::string message,
                                       std::vector<std::string> exp)
    : std::runtime_error("parse error at " + std::to_string(p.line) + ":" +
                         std::to_string(p.column) + ": " + message +
                         (exp.empty() ? "" : [&] {
                           std::string s = "; expected ";
                           for (size_t i = 0; i < exp.size(); ++i)
                             s += (i ? " or " : "") + exp[i];
                           return s;
                         }())),
      pos(p),
      expected(std::move(exp)) {}

PropertyAst parse_property(const std::string& text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Printer

namespace {

int prop_precedence(PropKind k) {
  switch (k) {
    case PropKind::Imply: return 1;
    case PropKind::Or: return 2;
    case PropKind::And: return 3;
    case PropKind::Not:
    case PropKind::Forall:
    case PropKind::Exists: return 4;
    case PropKind::Eq:
    case PropKind::Ne:
    case PropKind::Lt:
    case PropKind::Le:
    case PropKind::Gt:
    case PropKind::Ge: return 5;
    case PropKind::Add:
    case PropKind::Sub: return 6;
    default: return 7;
  }
}

const char* prop_op_text(PropKind k) {
  switch (k) {
    case PropKind::Add: return "+";
    case PropKind::Sub: return "-";
    case PropKind::Eq: return "==";
    case PropKind::Ne: return "!=";
    case PropKind::Lt: return "<";
    case PropKind::Le: return "<=";
    case PropKind::Gt: return ">";
    case PropKind::Ge: return ">=";
    case PropKind::And: return "and";
    case PropKind::Or: return "or";
    case PropKind::Imply: return "imply";
    default: return "?";
  }
}

void print_prop(const PropExpr& e, int parent_prec, std::ostream& out) {
  const int prec = prop_precedence(e.kind);
  switch (e.kind) {
    case PropKind::IntLit:
      out << e.literal;
      return;
    case PropKind::BoolLit:
      out << (e.literal ? "true" : "false");
      return;
    case PropKind::Symbol:
      out << e.name;
      return;
    case PropKind::Field:
      out << e.proc;
      if (e.proc_arg) {
        out << '(';
        print_prop(*e.proc_arg, 0, out);
        out << ')';
      }
      out << '.' << e.var;
      if (e.index) {
        out << '[';
        print_prop(*e.index, 0, out);
        out << ']';
        if (!e.field.empty()) out << '.' << e.field;
      }
      return;
    case PropKind::Not:
      if (prec < parent_prec) out << '(';
      out << "not ";
      print_prop(*e.lhs, prec, out);
      if (prec < parent_prec) out << ')';
      return;
    case PropKind::Forall:
    case PropKind::Exists:
      if (prec < parent_prec) out << '(';
      out << (e.kind == PropKind::Forall ? "forall (" : "exists (") << e.name << " : ";
      if (e.range.is_ids) {
        out << "ids";
      } else {
        out << "int[";
        print_prop(*e.range.lo, 0, out);
        out << ", ";
        print_prop(*e.range.hi, 0, out);
        out << ']';
      }
      out << ") ";
      print_prop(*e.lhs, prec, out);
      if (prec < parent_prec) out << ')';
      return;
    default: {
      const bool right_assoc = e.kind == PropKind::Imply;
      if (prec < parent_prec) out << '(';
      print_prop(*e.lhs, prec + 1, out);
      out << ' ' << prop_op_text(e.kind) << ' ';
      print_prop(*e.rhs, right_assoc ? prec : prec + 1, out);
      if (prec < parent_prec) out << ')';
      return;
    }
  }
}

}  // namespace

std::string print_property(const PropertyAst& ast) {
  std::ostringstream out;
  out << (ast.quantifier == PathQuantifier::Invariant ? "A[] " : "E<> ");
  print_prop(*ast.predicate, 0, out);
  return out.str();
}

// ---------------------------------------------------------------------------
// Query files

std::vector<NamedPropertyText> parse_query_file(const std::string& contents) {
  std::vector<NamedPropertyText> out;
  std::istringstream in(contents);
  std::string line;
  NamedPropertyText current;
  bool open = false;
  int lineno = 0;
  auto flush = [&] {
    if (!open) return;
    if (current.text.find_first_not_of(" \t\r\n") == std::string::npos)
      throw PropertyParseError({lineno, 1}, "property '" + current.name + "' has an empty body",
                               {});
    out.push_back(current);
    current = {};
    open = false;
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line.compare(first, 2, "--") == 0) continue;
    if (line.rfind("name:", 0) == 0) {
      flush();
      std::string name = line.substr(5);
      const auto b = name.find_first_not_of(" \t\r");
      const auto e = name.find_last_not_of(" \t\r");
      if (b == std::string::npos)
        throw PropertyParseError({lineno, 6}, "missing property name after 'name:'", {});
      current.name = name.substr(b, e - b + 1);
      open = true;
      continue;
    }
    if (!open) {
      if (first != std::string::npos)
        throw PropertyParseError({lineno, static_cast<int>(first) + 1},
                                 "property body before any 'name:' header", {});
      continue;
    }
    current.text += line;
    current.text += '\n';
  }
  flush();
  return out;
}

// ---------------------------------------------------------------------------
// Elaboration

namespace {

struct ElabCtx {
  const Engine* engine = nullptr;
  IdsScope ids_scope = IdsScope::AllClients;
  std::map<std::string, int64_t> binders;

  const SystemDef& sys() const { return engine->system(); }
};

GroundPredPtr const_pred(bool truth) {
  auto p = std::make_shared<GroundPred>();
  p->kind = GroundPred::Kind::ConstBool;
  p->truth = truth;
  return p;
}

int64_t eval_const(const PropExpr& e, const ElabCtx& ctx) {
  switch (e.kind) {
    case PropKind::IntLit:
      return e.literal;
    case PropKind::Symbol: {
      if (auto it = ctx.binders.find(e.name); it != ctx.binders.end()) return it->second;
      if (auto it = ctx.sys().constants.find(e.name); it != ctx.sys().constants.end())
        return it->second;
      throw ElaborationError("unknown constant '" + e.name + "'");
    }
    case PropKind::Add:
      return eval_const(*e.lhs, ctx) + eval_const(*e.rhs, ctx);
    case PropKind::Sub:
      return eval_const(*e.lhs, ctx) - eval_const(*e.rhs, ctx);
    default:
      throw ElaborationError("expression is not constant");
  }
}

GroundTerm resolve_field(const PropExpr& e, const ElabCtx& ctx) {
  const Engine& eng = *ctx.engine;
  std::optional<int64_t> arg;
  if (e.proc_arg) arg = eval_const(*e.proc_arg, ctx);
  const int pid = eng.find_process(e.proc, arg);
  if (pid < 0) {
    std::string shown = e.proc + (arg ? "(" + std::to_string(*arg) + ")" : "");
    throw ElaborationError("no process instance '" + shown + "'");
  }
  // effective variable name: a trailing field selects the flattened
  // array <var>_<field>
  const std::string name = e.field.empty() ? e.var : e.var + "_" + e.field;
  GroundTerm term;
  term.display = e.proc + (arg ? "(" + std::to_string(*arg) + ")" : "") + "." + e.var;
  if (e.index) {
    const int64_t idx = eval_const(*e.index, ctx);
    term.display += "[" + std::to_string(idx) + "]";
    if (!e.field.empty()) term.display += "." + e.field;
    try {
      term.kind = GroundTerm::Kind::GlobalSlot;
      term.slot = eng.global_slot(name, idx);
      return term;
    } catch (const std::out_of_range& ex) {
      throw ElaborationError(ex.what());
    }
  }
  // scalar: process-local first, then global
  try {
    term.kind = GroundTerm::Kind::LocalSlot;
    term.slot = eng.local_slot(pid, name);
    return term;
  } catch (const std::out_of_range&) {
  }
  try {
    term.kind = GroundTerm::Kind::GlobalSlot;
    term.slot = eng.global_slot(name, 0);
    return term;
  } catch (const std::out_of_range&) {
    throw ElaborationError("process '" + e.proc + "' has no variable '" + name +
                           "' and no global of that name exists");
  }
}

GroundTerm resolve_term(const PropExpr& e, const ElabCtx& ctx) {
  if (e.kind == PropKind::Field) return resolve_field(e, ctx);
  GroundTerm term;
  term.kind = GroundTerm::Kind::Const;
  term.value = eval_const(e, ctx);
  term.display = std::to_string(term.value);
  if (e.kind == PropKind::Symbol) term.display = e.name;
  return term;
}

std::vector<int64_t> range_values(const RangeSpec& range, const ElabCtx& ctx) {
  if (range.is_ids) {
    const char* key = ctx.ids_scope == IdsScope::LegitOnly ? "legit_ids" : "ids";
    auto it = ctx.sys().id_sets.find(key);
    if (it == ctx.sys().id_sets.end())
      throw ElaborationError(std::string("system defines no id set '") + key + "'");
    return it->second;
  }
  const int64_t lo = eval_const(*range.lo, ctx);
  const int64_t hi = eval_const(*range.hi, ctx);
  std::vector<int64_t> vals;
  for (int64_t v = lo; v <= hi; ++v) vals.push_back(v);
  return vals;
}

GroundPredPtr ground(const PropExpr& e, ElabCtx& ctx) {
  switch (e.kind) {
    case PropKind::BoolLit:
      return const_pred(e.literal != 0);
    case PropKind::Forall:
    case PropKind::Exists: {
      const bool forall = e.kind == PropKind::Forall;
      const auto values = range_values(e.range, ctx);
      if (values.empty()) return const_pred(forall);
      auto node = std::make_shared<GroundPred>();
      node->kind = forall ? GroundPred::Kind::And : GroundPred::Kind::Or;
      const bool shadowed = ctx.binders.count(e.name) > 0;
      const int64_t saved = shadowed ? ctx.binders[e.name] : 0;
      for (int64_t v : values) {
        ctx.binders[e.name] = v;
        node->children.push_back(ground(*e.lhs, ctx));
      }
      if (shadowed)
        ctx.binders[e.name] = saved;
      else
        ctx.binders.erase(e.name);
      return node;
    }
    case PropKind::And:
    case PropKind::Or:
    case PropKind::Imply: {
      auto node = std::make_shared<GroundPred>();
      node->kind = e.kind == PropKind::And  ? GroundPred::Kind::And
                   : e.kind == PropKind::Or ? GroundPred::Kind::Or
                                            : GroundPred::Kind::Imply;
      node->children.push_back(ground(*e.lhs, ctx));
      node->children.push_back(ground(*e.rhs, ctx));
      return node;
    }
    case PropKind::Not: {
      auto node = std::make_shared<GroundPred>();
      node->kind = GroundPred::Kind::Not;
      node->children.push_back(ground(*e.lhs, ctx));
      return node;
    }
    case PropKind::Eq:
    case PropKind::Ne:
    case PropKind::Lt:
    case PropKind::Le:
    case PropKind::Gt:
    case PropKind::Ge: {
      auto node = std::make_shared<GroundPred>();
      node->kind = GroundPred::Kind::Compare;
      node->cmp = e.kind;
      node->a = resolve_term(*e.lhs, ctx);
      node->b = resolve_term(*e.rhs, ctx);
      return node;
    }
    default:
      throw ElaborationError("expression '" + print_property({PathQuantifier::Reach,
                                                              std::make_shared<PropExpr>(e)}) +
                             "' is not a boolean predicate");
  }
}

}  // namespace

bool eval_ground(const GroundPred& pred, const SystemState& s) {
  switch (pred.kind) {
    case GroundPred::Kind::ConstBool:
      return pred.truth;
    case GroundPred::Kind::Compare: {
      const int64_t a = pred.a.read(s);
      const int64_t b = pred.b.read(s);
      switch (pred.cmp) {
        case PropKind::Eq: return a == b;
        case PropKind::Ne: return a != b;
        case PropKind::Lt: return a < b;
        case PropKind::Le: return a <= b;
        case PropKind::Gt: return a > b;
        case PropKind::Ge: return a >= b;
        default: return false;
      }
    }
    case GroundPred::Kind::And:
      for (const auto& c : pred.children)
        if (!eval_ground(*c, s)) return false;
      return true;
    case GroundPred::Kind::Or:
      for (const auto& c : pred.children)
        if (eval_ground(*c, s)) return true;
      return false;
    case GroundPred::Kind::Not:
      return !eval_ground(*pred.children[0], s);
    case GroundPred::Kind::Imply:
      return !eval_ground(*pred.children[0], s) || eval_ground(*pred.children[1], s);
  }
  return false;
}

GroundProperty elaborate(const PropertyAst& ast, const Engine& engine, IdsScope ids_scope) {
  ElabCtx ctx;
  ctx.engine = &engine;
  ctx.ids_scope = ids_scope;
  GroundProperty out;
  out.invariant = ast.quantifier == PathQuantifier::Invariant;
  out.predicate = ground(*ast.predicate, ctx);
  return out;
}

}  // namespace hscheck
