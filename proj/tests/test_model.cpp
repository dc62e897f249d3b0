#include <doctest.h>

#include "hscheck/model.hpp"
#include "hscheck/protocols.hpp"

using namespace hscheck;

namespace {

// minimal context: one channel, no globals
SystemDef bare_system() {
  SystemDef sys;
  sys.channels.push_back({"ch"});
  return sys;
}

ProcessTemplate two_location_template() {
  ProcessTemplate t;
  t.name = "P";
  Location a;
  a.name = "A";
  a.initial = true;
  Location b;
  b.name = "B";
  t.locations = {a, b};
  return t;
}

bool has_error(const std::vector<ModelError>& errors, const std::string& rule,
               const std::string& needle) {
  for (const auto& e : errors)
    if (e.rule == rule && (to_string(e).find(needle) != std::string::npos)) return true;
  return false;
}

}  // namespace

TEST_CASE("edge targeting an undeclared location is reported by name") {
  SystemDef sys = bare_system();
  ProcessTemplate t = two_location_template();
  Edge e;
  e.source = "A";
  e.target = "LC9";
  t.edges.push_back(e);
  const auto errors = validate_template(t, sys);
  REQUIRE(errors.size() == 1);
  CHECK(has_error(errors, "dangling-location", "LC9"));
}

TEST_CASE("guard comparing a clock to a variable is rejected") {
  SystemDef sys = bare_system();
  ProcessTemplate t = two_location_template();
  VariableDecl x;
  x.name = "x";
  x.hi = 3;
  t.locals.push_back(x);
  t.clocks.push_back({"c", 5});
  Edge e;
  e.source = "A";
  e.target = "B";
  e.guard = lt(name_ref("c"), name_ref("x"));
  t.edges.push_back(e);
  const auto errors = validate_template(t, sys);
  CHECK(has_error(errors, "clock-compare", "non-constant"));
}

TEST_CASE("built-in protocol templates validate cleanly") {
  ScenarioConfig cfg;
  const SystemDef tcp = build_tcp_system(cfg);
  for (const auto& t : tcp.templates) CHECK(validate_template(t, tcp).empty());
  CHECK(validate_system(tcp).empty());

  ScenarioConfig scfg;
  scfg.protocol = Protocol::Sctp;
  const SystemDef sctp = build_sctp_system(scfg);
  for (const auto& t : sctp.templates) CHECK(validate_template(t, sctp).empty());
  CHECK(validate_system(sctp).empty());
}

TEST_CASE("validation catches the usual declaration mistakes") {
  SystemDef sys = bare_system();
  ProcessTemplate t = two_location_template();

  SUBCASE("two initial locations") {
    t.locations[1].initial = true;
    CHECK(has_error(validate_template(t, sys), "initial-location", "2"));
  }
  SUBCASE("no initial location") {
    t.locations[0].initial = false;
    CHECK(has_error(validate_template(t, sys), "initial-location", "0"));
  }
  SUBCASE("initial value outside range") {
    VariableDecl v;
    v.name = "x";
    v.lo = 0;
    v.hi = 2;
    v.initial = 7;
    t.locals.push_back(v);
    CHECK(has_error(validate_template(t, sys), "initial-range", "7"));
  }
  SUBCASE("undeclared channel") {
    Edge e;
    e.source = "A";
    e.target = "B";
    e.sync = send("nope");
    t.edges.push_back(e);
    CHECK(has_error(validate_template(t, sys), "undeclared-channel", "nope"));
  }
  SUBCASE("clock ceiling below compared constant") {
    t.clocks.push_back({"c", 2});
    Edge e;
    e.source = "A";
    e.target = "B";
    e.guard = eq(name_ref("c"), int_lit(9));
    t.edges.push_back(e);
    CHECK(has_error(validate_template(t, sys), "ceiling", "9"));
  }
  SUBCASE("non-boolean guard") {
    Edge e;
    e.source = "A";
    e.target = "B";
    e.guard = add(int_lit(1), int_lit(2));
    t.edges.push_back(e);
    CHECK(has_error(validate_template(t, sys), "type", "guard"));
  }
  SUBCASE("invariant must be clock comparisons only") {
    VariableDecl v;
    v.name = "x";
    v.hi = 1;
    t.locals.push_back(v);
    t.locations[0].invariant = eq(name_ref("x"), int_lit(0));
    CHECK(has_error(validate_template(t, sys), "invariant-shape", "x == 0"));
  }
  SUBCASE("array indexed by a variable") {
    VariableDecl arr;
    arr.name = "a";
    arr.hi = 1;
    arr.array_size = 3;
    sys.globals.push_back(arr);
    VariableDecl v;
    v.name = "x";
    v.hi = 1;
    t.locals.push_back(v);
    Edge e;
    e.source = "A";
    e.target = "B";
    e.guard = eq(index_ref("a", name_ref("x")), int_lit(0));
    t.edges.push_back(e);
    CHECK(has_error(validate_template(t, sys), "computed-index", "a"));
  }
  SUBCASE("constant array index out of bounds") {
    VariableDecl arr;
    arr.name = "a";
    arr.hi = 1;
    arr.array_size = 3;
    sys.globals.push_back(arr);
    Edge e;
    e.source = "A";
    e.target = "B";
    e.guard = eq(index_ref("a", int_lit(5)), int_lit(0));
    t.edges.push_back(e);
    CHECK(has_error(validate_template(t, sys), "index-bounds", "5"));
  }
}

TEST_CASE("eval_expr follows plain arithmetic and boolean rules") {
  MapEnv env;
  env.scalars = {{"counter", 0}, {"MAX_RETRANS", 2}, {"cur_state", 0}, {"ESTABLISHED", 4}};

  CHECK(eval_expr(lt(name_ref("counter"), name_ref("MAX_RETRANS")), env).as_bool());

  // vacuous implication: premise false
  const auto vac = imply(eq(name_ref("cur_state"), name_ref("ESTABLISHED")), bool_lit(false));
  CHECK(eval_expr(vac, env).as_bool());

  // conjunct over an indexed record entry
  MapEnv env2;
  env2.scalars = {{"CLOSED", 0}, {"SYN_RECEIVED", 3}};
  env2.arrays["tcb_peer"] = {1, -1};
  env2.arrays["tcb_cur_state"] = {3, 1};
  const auto conjunct = land(eq(index_ref("tcb_peer", int_lit(0)), int_lit(1)),
                             ne(index_ref("tcb_cur_state", int_lit(0)), name_ref("CLOSED")));
  CHECK(eval_expr(conjunct, env2).as_bool());
}

TEST_CASE("eval_expr raises on unbound names") {
  MapEnv env;
  CHECK_THROWS_AS(eval_expr(name_ref("ghost"), env), EvalError);
  CHECK_THROWS_WITH(eval_expr(name_ref("ghost"), env), doctest::Contains("ghost"));
}

TEST_CASE("eval_expr is pure") {
  MapEnv env;
  env.scalars = {{"a", 3}, {"b", 4}};
  const auto e = land(lt(name_ref("a"), name_ref("b")), ne(name_ref("a"), int_lit(0)));
  const Value first = eval_expr(e, env);
  for (int i = 0; i < 100; ++i) CHECK(eval_expr(e, env) == first);
}

TEST_CASE("expression printing uses the documented precedence") {
  // imply loosest, then or, then and, then not
  const auto e = imply(lor(bool_lit(true), land(bool_lit(false), negate(bool_lit(true)))),
                       bool_lit(false));
  CHECK(to_string(e) == "true or false and not true imply false");
  const auto f = land(lor(bool_lit(true), bool_lit(false)), bool_lit(true));
  CHECK(to_string(f) == "(true or false) and true");
  CHECK(to_string(sub(add(int_lit(1), int_lit(2)), int_lit(3))) == "1 + 2 - 3");
  CHECK(to_string(ExprPtr{}) == "true");
}
