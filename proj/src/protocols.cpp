#include "hscheck/protocols.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace hscheck {

std::string to_string(Protocol p) { return p == Protocol::Tcp ? "tcp" : "sctp"; }

void validate_config(const ScenarioConfig& cfg) {
  if (cfg.n_legit < 0) throw ConfigError("n_legit must be >= 0");
  if (cfg.n_illegit < 0) throw ConfigError("n_illegit must be >= 0");
  if (cfg.effective_resources() < 1) throw ConfigError("resources must be >= 1");
  if (cfg.retransmit_period < 1) throw ConfigError("T must be >= 1");
  if (cfg.max_retrans < 0) throw ConfigError("max_retrans must be >= 0");
}

ScenarioConfig parse_scenario_config(std::istream& in) {
  ScenarioConfig cfg;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw ConfigError("config line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected 'key = value'");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) fail("missing value for '" + key + "'");

    auto as_int = [&]() {
      try {
        size_t used = 0;
        const int64_t v = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
      } catch (const std::exception&) {
        fail("'" + value + "' is not an integer");
        return int64_t{0};
      }
    };

    if (key == "protocol") {
      if (value == "tcp")
        cfg.protocol = Protocol::Tcp;
      else if (value == "sctp")
        cfg.protocol = Protocol::Sctp;
      else
        fail("protocol must be tcp or sctp");
    } else if (key == "n_legit") {
      cfg.n_legit = as_int();
    } else if (key == "n_illegit") {
      cfg.n_illegit = as_int();
    } else if (key == "resources") {
      cfg.resources = as_int();
    } else if (key == "T") {
      cfg.retransmit_period = as_int();
    } else if (key == "max_retrans") {
      cfg.max_retrans = as_int();
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  return cfg;
}

ScenarioConfig parse_scenario_config_text(const std::string& text) {
  std::istringstream in(text);
  return parse_scenario_config(in);
}

namespace {

ExprPtr n(const std::string& name) { return name_ref(name); }
ExprPtr at(const std::string& array, int64_t idx) { return index_ref(array, int_lit(idx)); }
ExprPtr atb(const std::string& array) { return index_ref(array, name_ref("j")); }

Assignment set(std::string target, ExprPtr value) {
  return Assignment{std::move(target), nullptr, std::move(value)};
}
Assignment set_at(std::string target, int64_t idx, ExprPtr value) {
  return Assignment{std::move(target), int_lit(idx), std::move(value)};
}
Assignment set_slot(std::string target, ExprPtr value) {
  return Assignment{std::move(target), name_ref("j"), std::move(value)};
}

// Unrolled "some slot satisfies pred" guard over the record table.
template <typename Pred>
ExprPtr any_slot(int64_t resources, Pred pred) {
  ExprPtr acc;
  for (int64_t j = 0; j < resources; ++j) {
    ExprPtr p = pred(j);
    acc = acc ? lor(std::move(acc), std::move(p)) : std::move(p);
  }
  return acc ? acc : bool_lit(false);
}

FirstMatch first_slot(int64_t resources, ExprPtr pred, std::vector<Assignment> assigns) {
  FirstMatch fm;
  fm.binder = "j";
  fm.lo = 0;
  fm.hi = resources - 1;
  fm.pred = std::move(pred);
  fm.assigns = std::move(assigns);
  return fm;
}

Edge edge(std::string name, std::string source, std::string target, ExprPtr guard, Sync sync,
          std::vector<UpdateItem> items) {
  Edge e;
  e.name = std::move(name);
  e.source = std::move(source);
  e.target = std::move(target);
  e.guard = std::move(guard);
  e.sync = std::move(sync);
  e.update.items = std::move(items);
  return e;
}

struct BuilderCommon {
  ScenarioConfig cfg;
  int64_t resources = 0;
  int64_t max_id = 0;  // NONE (-1) .. max_id is the peer/id range
  std::string free_state;  // symbolic cur_state of an unallocated record

  // free record: no peer recorded and the table slot in its idle state
  ExprPtr slot_free(int64_t j) const {
    return land(eq(at("tcb_cur_state", j), n(free_state)), eq(at("tcb_peer", j), n("NONE")));
  }
  ExprPtr slot_free_binder() const {
    return land(eq(atb("tcb_cur_state"), n(free_state)), eq(atb("tcb_peer"), n("NONE")));
  }
  ExprPtr slot_matches(int64_t j, const std::string& state) const {
    return land(eq(at("tcb_peer", j), n("last_sender")), eq(at("tcb_cur_state", j), n(state)));
  }
  ExprPtr slot_matches_binder(const std::string& state) const {
    return land(eq(atb("tcb_peer"), n("last_sender")), eq(atb("tcb_cur_state"), n(state)));
  }
  std::vector<Assignment> release_slot() const {
    return {set_slot("tcb_peer", n("NONE")), set_slot("tcb_cur_state", n(free_state))};
  }
};

void add_globals(SystemDef& sys, const BuilderCommon& b, int64_t idle_state_code) {
  VariableDecl last_sender;
  last_sender.name = "last_sender";
  last_sender.lo = -1;
  last_sender.hi = std::max<int64_t>(b.max_id, 0);
  last_sender.initial = -1;
  sys.globals.push_back(last_sender);

  VariableDecl peer;
  peer.name = "tcb_peer";
  peer.lo = -1;
  peer.hi = std::max<int64_t>(b.max_id, 0);
  peer.initial = -1;
  peer.array_size = b.resources;
  sys.globals.push_back(peer);

  VariableDecl state;
  state.name = "tcb_cur_state";
  state.lo = 0;
  state.hi = sys.constants.at("ESTABLISHED");
  state.initial = idle_state_code;
  state.array_size = b.resources;
  sys.globals.push_back(state);
}

VariableDecl client_state_var(int64_t hi) {
  VariableDecl v;
  v.name = "cur_state";
  v.lo = 0;
  v.hi = hi;
  v.initial = 0;  // CLOSED
  return v;
}

VariableDecl counter_var(int64_t max_retrans) {
  VariableDecl v;
  v.name = "counter";
  v.lo = 0;
  v.hi = max_retrans;
  v.initial = 0;
  return v;
}

VariableDecl scratch_peer_var(int64_t max_id) {
  VariableDecl v;
  v.name = "req";
  v.lo = -1;
  v.hi = std::max<int64_t>(max_id, 0);
  v.initial = -1;
  return v;
}

void add_instances(SystemDef& sys, const ScenarioConfig& cfg) {
  for (int64_t i = 0; i < cfg.n_legit; ++i)
    sys.processes.push_back({"Legit_Client", {i}});
  for (int64_t i = 0; i < cfg.n_illegit; ++i)
    sys.processes.push_back({"Illegit_Client", {cfg.n_legit + i}});
  sys.processes.push_back({"Server", {}});

  std::vector<int64_t> all, legit, illegit;
  for (int64_t i = 0; i < cfg.client_count(); ++i) all.push_back(i);
  for (int64_t i = 0; i < cfg.n_legit; ++i) legit.push_back(i);
  for (int64_t i = cfg.n_legit; i < cfg.client_count(); ++i) illegit.push_back(i);
  sys.id_sets["ids"] = std::move(all);
  sys.id_sets["legit_ids"] = std::move(legit);
  sys.id_sets["illegit_ids"] = std::move(illegit);
}

ProcessTemplate flooding_client(const std::string& open_channel, int64_t max_id) {
  ProcessTemplate t;
  t.name = "Illegit_Client";
  t.parameters.push_back({"id", 0, max_id});
  Location ic0;
  ic0.name = "IC0";
  ic0.initial = true;
  t.locations.push_back(ic0);
  // one self loop that keeps transmitting the opening request
  t.edges.push_back(edge("flood", "IC0", "IC0", nullptr, send(open_channel),
                         {set("last_sender", n("id"))}));
  return t;
}

}  // namespace

SystemDef build_tcp_system(const ScenarioConfig& cfg) {
  if (cfg.protocol != Protocol::Tcp) throw ConfigError("build_tcp_system needs protocol = tcp");
  validate_config(cfg);

  BuilderCommon b;
  b.cfg = cfg;
  b.resources = cfg.effective_resources();
  b.max_id = cfg.client_count() - 1;
  b.free_state = "LISTEN";

  SystemDef sys;
  sys.constants = {
      {"CLOSED", 0},        {"LISTEN", 1},
      {"SYN_SENT", 2},      {"SYN_RECEIVED", 3},
      {"ESTABLISHED", 4},   {"NONE", -1},
      {"RESOURCES", b.resources},
      {"T", cfg.retransmit_period},
      {"MAX_RETRANS", cfg.max_retrans},
  };
  for (const char* ch : {"syn", "syn_ack", "ack", "reset_syn", "reset_syn_ack", "end_conn"})
    sys.channels.push_back({ch});
  add_globals(sys, b, /*idle_state_code=*/1);  // LISTEN

  // --- legitimate client ---------------------------------------------------
  if (cfg.n_legit > 0) {
    ProcessTemplate t;
    t.name = "Legit_Client";
    t.parameters.push_back({"id", 0, b.max_id});
    t.locals = {client_state_var(4), counter_var(cfg.max_retrans)};
    t.clocks = {{"timer", cfg.retransmit_period + 1}};

    Location lc0;
    lc0.name = "LC0";
    lc0.initial = true;
    Location lc1;
    lc1.name = "LC1";
    lc1.invariant = le(n("timer"), n("T"));  // reply must come within one period
    Location lc2;
    lc2.name = "LC2";
    t.locations = {lc0, lc1, lc2};

    std::vector<UpdateItem> full_reset = {set("cur_state", n("CLOSED")), set("counter", int_lit(0)),
                                          ClockReset{"timer"}};

    t.edges.push_back(edge("active_open", "LC0", "LC1", eq(n("cur_state"), n("CLOSED")),
                           send("syn"),
                           {set("counter", int_lit(0)), ClockReset{"timer"},
                            set("cur_state", n("SYN_SENT")), set("last_sender", n("id"))}));
    t.edges.push_back(edge("recv_syn_ack", "LC1", "LC2",
                           land(le(n("counter"), n("MAX_RETRANS")), le(n("timer"), n("T"))),
                           receive("syn_ack"), {set("cur_state", n("SYN_RECEIVED"))}));
    t.edges.push_back(edge("recv_reset", "LC1", "LC0", nullptr, receive("reset_syn"), full_reset));
    t.edges.push_back(edge("retransmit", "LC1", "LC1",
                           land(eq(n("timer"), n("T")), lt(n("counter"), n("MAX_RETRANS"))),
                           send("syn"),
                           {set("counter", add(n("counter"), int_lit(1))), ClockReset{"timer"},
                            set("last_sender", n("id"))}));
    t.edges.push_back(edge("discard", "LC1", "LC0", nullptr, no_sync(), full_reset));
    t.edges.push_back(edge("send_ack", "LC2", "LC0", nullptr, send("ack"),
                           {set("cur_state", n("ESTABLISHED")), set("last_sender", n("id"))}));
    {
      auto items = full_reset;
      items.push_back(set("last_sender", n("id")));
      t.edges.push_back(edge("send_reset", "LC2", "LC0", nullptr, send("reset_syn_ack"), items));
    }
    t.edges.push_back(edge("discard", "LC2", "LC0", nullptr, no_sync(), full_reset));
    {
      auto items = full_reset;
      items.push_back(set("last_sender", n("id")));
      t.edges.push_back(edge("end_connection", "LC0", "LC0", eq(n("cur_state"), n("ESTABLISHED")),
                             send("end_conn"), items));
    }
    sys.templates.push_back(std::move(t));
  }

  // --- illegitimate client -------------------------------------------------
  if (cfg.n_illegit > 0) sys.templates.push_back(flooding_client("syn", b.max_id));

  // --- server ----------------------------------------------------------------
  {
    ProcessTemplate t;
    t.name = "Server";
    t.locals = {scratch_peer_var(b.max_id)};

    Location s0;
    s0.name = "S0";
    s0.initial = true;
    s0.kind = LocationKind::Committed;
    Location s1;
    s1.name = "S1";
    Location s2;
    s2.name = "S2";
    s2.kind = LocationKind::Committed;
    t.locations = {s0, s1, s2};

    std::vector<UpdateItem> open_table;
    for (int64_t j = 0; j < b.resources; ++j) {
      open_table.push_back(set_at("tcb_peer", j, n("NONE")));
      open_table.push_back(set_at("tcb_cur_state", j, n("LISTEN")));
    }
    t.edges.push_back(edge("passive_open", "S0", "S1", nullptr, no_sync(), open_table));
    t.edges.push_back(
        edge("recv_syn", "S1", "S2", nullptr, receive("syn"), {set("req", n("last_sender"))}));
    t.edges.push_back(edge(
        "send_syn_ack", "S2", "S1", any_slot(b.resources, [&](int64_t j) { return b.slot_free(j); }),
        send("syn_ack"),
        {first_slot(b.resources, b.slot_free_binder(),
                    {set_slot("tcb_peer", n("req")), set_slot("tcb_cur_state", n("SYN_RECEIVED"))})}));
    t.edges.push_back(
        edge("send_reset", "S2", "S1", nullptr, send("reset_syn"), {set("req", n("NONE"))}));
    t.edges.push_back(edge("discard", "S2", "S1", nullptr, no_sync(), {set("req", n("NONE"))}));
    t.edges.push_back(edge(
        "recv_ack", "S1", "S1",
        any_slot(b.resources, [&](int64_t j) { return b.slot_matches(j, "SYN_RECEIVED"); }),
        receive("ack"),
        {first_slot(b.resources, b.slot_matches_binder("SYN_RECEIVED"),
                    {set_slot("tcb_cur_state", n("ESTABLISHED"))})}));
    t.edges.push_back(edge(
        "recv_reset_ack", "S1", "S1",
        any_slot(b.resources, [&](int64_t j) { return b.slot_matches(j, "SYN_RECEIVED"); }),
        receive("reset_syn_ack"),
        {first_slot(b.resources, b.slot_matches_binder("SYN_RECEIVED"), b.release_slot())}));
    // condensed stand-in for expiry of a half-open record; untimed
    t.edges.push_back(edge(
        "time_out", "S1", "S1",
        any_slot(b.resources,
                 [&](int64_t j) { return eq(at("tcb_cur_state", j), n("SYN_RECEIVED")); }),
        no_sync(),
        {first_slot(b.resources, eq(atb("tcb_cur_state"), n("SYN_RECEIVED")), b.release_slot())}));
    t.edges.push_back(edge(
        "recv_end_conn", "S1", "S1",
        any_slot(b.resources, [&](int64_t j) { return b.slot_matches(j, "ESTABLISHED"); }),
        receive("end_conn"),
        {first_slot(b.resources, b.slot_matches_binder("ESTABLISHED"), b.release_slot())}));
    sys.templates.push_back(std::move(t));
  }

  add_instances(sys, cfg);
  return sys;
}

SystemDef build_sctp_system(const ScenarioConfig& cfg) {
  if (cfg.protocol != Protocol::Sctp) throw ConfigError("build_sctp_system needs protocol = sctp");
  validate_config(cfg);

  BuilderCommon b;
  b.cfg = cfg;
  b.resources = cfg.effective_resources();
  b.max_id = cfg.client_count() - 1;
  b.free_state = "CLOSED";  // no record kept until the cookie comes back

  SystemDef sys;
  sys.constants = {
      {"CLOSED", 0},       {"COOKIE_WAIT", 1},
      {"COOKIE_ECHOED", 2}, {"ESTABLISHED", 3},
      {"NONE", -1},        {"RESOURCES", b.resources},
      {"T", cfg.retransmit_period},
      {"MAX_RETRANS", cfg.max_retrans},
  };
  for (const char* ch :
       {"initiation", "init_ack", "cookie_echo", "cookie_ack", "abort_init", "end_assoc"})
    sys.channels.push_back({ch});
  add_globals(sys, b, /*idle_state_code=*/0);  // CLOSED

  // --- legitimate client ---------------------------------------------------
  if (cfg.n_legit > 0) {
    ProcessTemplate t;
    t.name = "Legit_Client";
    t.parameters.push_back({"id", 0, b.max_id});
    t.locals = {client_state_var(3), counter_var(cfg.max_retrans)};
    t.clocks = {{"timer", cfg.retransmit_period + 1}};

    Location lc0;
    lc0.name = "LC0";
    lc0.initial = true;
    Location lc1;
    lc1.name = "LC1";
    lc1.invariant = le(n("timer"), n("T"));
    Location lc2;
    lc2.name = "LC2";
    lc2.kind = LocationKind::Committed;
    Location lc3;
    lc3.name = "LC3";
    lc3.invariant = le(n("timer"), n("T"));
    t.locations = {lc0, lc1, lc2, lc3};

    std::vector<UpdateItem> full_reset = {set("cur_state", n("CLOSED")), set("counter", int_lit(0)),
                                          ClockReset{"timer"}};
    const ExprPtr reply_in_time =
        land(le(n("counter"), n("MAX_RETRANS")), le(n("timer"), n("T")));
    const ExprPtr may_retransmit =
        land(eq(n("timer"), n("T")), lt(n("counter"), n("MAX_RETRANS")));

    t.edges.push_back(edge("active_open", "LC0", "LC1", eq(n("cur_state"), n("CLOSED")),
                           send("initiation"),
                           {set("counter", int_lit(0)), ClockReset{"timer"},
                            set("cur_state", n("COOKIE_WAIT")), set("last_sender", n("id"))}));
    t.edges.push_back(edge("recv_init_ack", "LC1", "LC2", reply_in_time, receive("init_ack"), {}));
    t.edges.push_back(edge("recv_abort", "LC1", "LC0", nullptr, receive("abort_init"), full_reset));
    t.edges.push_back(edge("retransmit", "LC1", "LC1", may_retransmit, send("initiation"),
                           {set("counter", add(n("counter"), int_lit(1))), ClockReset{"timer"},
                            set("last_sender", n("id"))}));
    t.edges.push_back(edge("discard", "LC1", "LC0", nullptr, no_sync(), full_reset));
    t.edges.push_back(edge("send_cookie_echo", "LC2", "LC3", nullptr, send("cookie_echo"),
                           {set("counter", int_lit(0)), ClockReset{"timer"},
                            set("cur_state", n("COOKIE_ECHOED")), set("last_sender", n("id"))}));
    t.edges.push_back(edge("discard", "LC2", "LC0", nullptr, no_sync(), full_reset));
    t.edges.push_back(edge("recv_cookie_ack", "LC3", "LC0", reply_in_time, receive("cookie_ack"),
                           {set("cur_state", n("ESTABLISHED"))}));
    t.edges.push_back(edge("recv_abort", "LC3", "LC0", nullptr, receive("abort_init"), full_reset));
    t.edges.push_back(edge("retransmit", "LC3", "LC3", may_retransmit, send("cookie_echo"),
                           {set("counter", add(n("counter"), int_lit(1))), ClockReset{"timer"},
                            set("last_sender", n("id"))}));
    t.edges.push_back(edge("discard", "LC3", "LC0", nullptr, no_sync(), full_reset));
    {
      auto items = full_reset;
      items.push_back(set("last_sender", n("id")));
      t.edges.push_back(edge("end_association", "LC0", "LC0",
                             eq(n("cur_state"), n("ESTABLISHED")), send("end_assoc"), items));
    }
    sys.templates.push_back(std::move(t));
  }

  // --- illegitimate client -------------------------------------------------
  if (cfg.n_illegit > 0) sys.templates.push_back(flooding_client("initiation", b.max_id));

  // --- server ----------------------------------------------------------------
  {
    ProcessTemplate t;
    t.name = "Server";
    t.locals = {scratch_peer_var(b.max_id)};

    Location s0;
    s0.name = "S0";
    s0.initial = true;  // plain location: the server keeps no handshake state
    Location s1;
    s1.name = "S1";
    s1.kind = LocationKind::Committed;
    Location s2;
    s2.name = "S2";
    s2.kind = LocationKind::Committed;
    t.locations = {s0, s1, s2};

    t.edges.push_back(edge("recv_initiation", "S0", "S1", nullptr, receive("initiation"), {}));
    // stateless cookie reply: no table write at all
    t.edges.push_back(edge("send_init_ack", "S1", "S0",
                           any_slot(b.resources, [&](int64_t j) { return b.slot_free(j); }),
                           send("init_ack"), {}));
    t.edges.push_back(edge("send_abort", "S1", "S0", nullptr, send("abort_init"), {}));
    t.edges.push_back(edge("discard", "S1", "S0", nullptr, no_sync(), {}));
    t.edges.push_back(edge("recv_cookie_echo", "S0", "S2", nullptr, receive("cookie_echo"),
                           {set("req", n("last_sender"))}));
    t.edges.push_back(edge(
        "send_cookie_ack", "S2", "S0",
        any_slot(b.resources, [&](int64_t j) { return b.slot_free(j); }), send("cookie_ack"),
        {first_slot(b.resources, b.slot_free_binder(),
                    {set_slot("tcb_peer", n("req")), set_slot("tcb_cur_state", n("ESTABLISHED"))})}));
    t.edges.push_back(
        edge("send_abort", "S2", "S0", nullptr, send("abort_init"), {set("req", n("NONE"))}));
    t.edges.push_back(edge("discard", "S2", "S0", nullptr, no_sync(), {set("req", n("NONE"))}));
    t.edges.push_back(edge(
        "recv_end_assoc", "S0", "S0",
        any_slot(b.resources, [&](int64_t j) { return b.slot_matches(j, "ESTABLISHED"); }),
        receive("end_assoc"),
        {first_slot(b.resources, b.slot_matches_binder("ESTABLISHED"), b.release_slot())}));
    sys.templates.push_back(std::move(t));
  }

  add_instances(sys, cfg);
  return sys;
}

SystemDef build_system(const ScenarioConfig& cfg) {
  return cfg.protocol == Protocol::Tcp ? build_tcp_system(cfg) : build_sctp_system(cfg);
}

namespace {

const char* kHalfOpenText = R"(A[] forall (i : ids) (
  Legit_Client(i).cur_state == ESTABLISHED imply
    exists (j : int[0, (RESOURCES - 1)]) (
      Server.tcb[j].peer == i and Server.tcb[j].cur_state == ESTABLISHED
    )
))";

const char* kHoggingText = R"(E<> exists (i : ids) (
  forall (j : int[0, (RESOURCES - 1)]) (
    Server.tcb[j].peer == i and Server.tcb[j].cur_state != CLOSED
  )
))";

const char* kHappyPathText = R"(E<> exists (i : ids) (
  Legit_Client(i).cur_state == ESTABLISHED and
    exists (j : int[0, (RESOURCES - 1)]) (
      Server.tcb[j].peer == i and Server.tcb[j].cur_state == ESTABLISHED
    )
))";

std::string hogging_strict_text(Protocol protocol) {
  const char* held = protocol == Protocol::Tcp ? "SYN_RECEIVED" : "ESTABLISHED";
  std::ostringstream out;
  out << "E<> exists (i : ids) (\n"
      << "  forall (j : int[0, (RESOURCES - 1)]) (\n"
      << "    Server.tcb[j].peer == i and Server.tcb[j].cur_state == " << held << "\n"
      << "  )\n"
      << ")";
  return out.str();
}

}  // namespace

std::vector<StandardProperty> standard_properties(Protocol protocol, const ScenarioConfig& cfg) {
  std::vector<StandardProperty> props;
  props.push_back({"half-open", kHalfOpenText, IdsScope::LegitOnly});
  props.push_back({"hogging", kHoggingText, IdsScope::AllClients});
  props.push_back({"hogging-strict", hogging_strict_text(protocol), IdsScope::AllClients});
  if (cfg.n_legit > 0)
    props.push_back({"happy-path", kHappyPathText, IdsScope::LegitOnly});
  else
    props.push_back({"happy-path", "E<> false", IdsScope::LegitOnly});
  return props;
}

const StandardProperty* find_standard_property(const std::vector<StandardProperty>& props,
                                               const std::string& name) {
  for (const auto& p : props)
    if (p.name == name) return &p;
  return nullptr;
}

}  // namespace hscheck
