#include "hscheck/report.hpp"

#include <json.hpp>

#include <sstream>

namespace hscheck {

using nlohmann::json;

namespace {

json state_json(const Engine& engine, const SystemState& s) {
  json locations = json::object();
  json locals = json::object();
  json clocks = json::object();
  for (int p = 0; p < engine.process_count(); ++p) {
    const std::string& pname = engine.process_name(p);
    locations[pname] = engine.location_name(p, s.locations[static_cast<size_t>(p)]);
    json vars = json::object();
    for (const auto& v : engine.local_names(p)) vars[v] = engine.local_value(s, p, v);
    if (!vars.empty()) locals[pname] = std::move(vars);
    json cl = json::object();
    for (const auto& c : engine.clock_names(p)) cl[c] = engine.clock_value(s, p, c);
    if (!cl.empty()) clocks[pname] = std::move(cl);
  }
  json globals = json::object();
  for (const auto& g : engine.system().globals) {
    if (g.is_array()) {
      json arr = json::array();
      for (int64_t k = 0; k < g.slot_count(); ++k) arr.push_back(engine.global_value(s, g.name, k));
      globals[g.name] = std::move(arr);
    } else {
      globals[g.name] = engine.global_value(s, g.name, 0);
    }
  }
  return json{{"locations", std::move(locations)},
              {"globals", std::move(globals)},
              {"locals", std::move(locals)},
              {"clocks", std::move(clocks)}};
}

json label_json(const Engine& engine, const TransitionLabel& label) {
  json j = json::object();
  switch (label.kind) {
    case TransitionLabel::Kind::Delay:
      j["kind"] = "delay";
      break;
    case TransitionLabel::Kind::Internal:
    case TransitionLabel::Kind::Broadcast: {
      const auto& t = engine.process_template(label.process);
      const auto& e = t.edges[static_cast<size_t>(label.edge)];
      j["kind"] = label.kind == TransitionLabel::Kind::Internal ? "internal" : "broadcast";
      j["process"] = engine.process_name(label.process);
      j["edge"] = e.name.empty() ? "edge_" + std::to_string(label.edge) : e.name;
      j["edge_index"] = label.edge;
      j["source"] = e.source;
      j["target"] = e.target;
      if (label.kind == TransitionLabel::Kind::Broadcast) {
        j["channel"] = engine.channel_name(label.channel);
        json recv = json::array();
        for (const auto& [pid, eid] : label.receivers) {
          const auto& rt = engine.process_template(pid);
          const auto& re = rt.edges[static_cast<size_t>(eid)];
          recv.push_back(json{{"process", engine.process_name(pid)},
                              {"edge", re.name.empty() ? "edge_" + std::to_string(eid) : re.name},
                              {"edge_index", eid}});
        }
        j["receivers"] = std::move(recv);
      }
      break;
    }
  }
  j["text"] = engine.describe_label(label);
  return j;
}

json trace_json(const Engine& engine, const Trace& trace) {
  json steps = json::array();
  steps.push_back(json{{"label", nullptr}, {"state", state_json(engine, trace.initial)}});
  for (const auto& [label, state] : trace.steps)
    steps.push_back(
        json{{"label", label_json(engine, label)}, {"state", state_json(engine, state)}});
  return steps;
}

json scenario_json(const ScenarioConfig& cfg) {
  return json{{"protocol", to_string(cfg.protocol)},
              {"n_legit", cfg.n_legit},
              {"n_illegit", cfg.n_illegit},
              {"resources", cfg.effective_resources()},
              {"T", cfg.retransmit_period},
              {"max_retrans", cfg.max_retrans}};
}

json limits_json(const Limits& limits) {
  json j = json::object();
  j["max_states"] = limits.max_states;
  j["max_depth"] = limits.max_depth ? json(*limits.max_depth) : json(nullptr);
  j["wall_clock_seconds"] =
      limits.wall_clock_seconds ? json(*limits.wall_clock_seconds) : json(nullptr);
  j["workers"] = limits.workers;
  return j;
}

json result_json(const Engine& engine, const PropertyResult& r) {
  json j = json::object();
  j["name"] = r.name;
  j["text"] = r.text;
  j["kind"] = r.invariant ? "invariant" : "reachability";
  j["verdict"] = to_string(r.verdict.kind);
  j["states"] = r.verdict.stats.states;
  j["transitions"] = r.verdict.stats.transitions;
  j["max_depth"] = r.verdict.stats.max_depth;
  j["peak_frontier"] = r.verdict.stats.peak_frontier;
  j["complete"] = r.verdict.stats.complete;
  j["limit_hit"] = r.verdict.stats.limit_hit;
  j["elapsed_seconds"] = r.verdict.stats.elapsed_seconds;
  j["expected"] = r.expected ? json(*r.expected) : json(nullptr);
  j["expectation_met"] = r.expectation_met;
  j["trace"] = r.verdict.trace ? trace_json(engine, *r.verdict.trace) : json(nullptr);
  return j;
}

}  // namespace

std::string report_json(const RunReport& report, const Engine& engine) {
  json j = json::object();
  j["engine"] = json{{"name", kEngineName}, {"version", kEngineVersion}};
  j["scenario"] = scenario_json(report.scenario);
  j["limits"] = limits_json(report.limits);
  json constants = json::object();
  for (const auto& [name, value] : engine.system().constants) constants[name] = value;
  j["constants"] = std::move(constants);
  json props = json::array();
  for (const auto& r : report.results) props.push_back(result_json(engine, r));
  j["properties"] = std::move(props);
  return j.dump(2) + "\n";
}

std::string report_text(const RunReport& report, const Engine& engine) {
  std::ostringstream out;
  const auto& cfg = report.scenario;
  out << kEngineName << " " << kEngineVersion << "\n";
  out << "scenario: protocol=" << to_string(cfg.protocol) << " legit=" << cfg.n_legit
      << " illegit=" << cfg.n_illegit << " resources=" << cfg.effective_resources()
      << " T=" << cfg.retransmit_period << " max_retrans=" << cfg.max_retrans << "\n\n";
  for (const auto& r : report.results) {
    out << "property " << r.name << " (" << (r.invariant ? "invariant" : "reachability") << ")\n";
    out << "  verdict: " << to_string(r.verdict.kind);
    if (r.expected)
      out << "  [expected " << *r.expected << ": " << (r.expectation_met ? "ok" : "MISMATCH")
          << "]";
    out << "\n";
    const auto& st = r.verdict.stats;
    out << "  states: " << st.states << "  transitions: " << st.transitions
        << "  depth: " << st.max_depth << "  elapsed: " << st.elapsed_seconds << "s";
    if (!st.complete && !st.limit_hit.empty()) out << "  [stopped by " << st.limit_hit << "]";
    out << "\n";
    if (r.verdict.trace) {
      out << "  trace: " << r.verdict.trace->length() << " step(s)\n";
      for (size_t i = 0; i < r.verdict.trace->steps.size(); ++i)
        out << "    " << (i + 1) << ". " << engine.describe_label(r.verdict.trace->steps[i].first)
            << "\n";
    }
    out << "\n";
  }
  return out.str();
}

namespace {

void strip_time_rec(json& j) {
  if (j.is_object()) {
    j.erase("elapsed_seconds");
    for (auto& [key, value] : j.items()) strip_time_rec(value);
  } else if (j.is_array()) {
    for (auto& value : j) strip_time_rec(value);
  }
}

// "name=3" decorated with a symbolic constant when one matches; only
// state-typed fields get the decoration.
std::string decorate(const std::string& field, const json& value, const json& constants) {
  std::string s = value.dump();
  const bool peer_field = field.find("peer") != std::string::npos ||
                          field.find("last_sender") != std::string::npos || field == "req";
  const bool state_field = field.find("cur_state") != std::string::npos;
  if (!peer_field && !state_field) return s;
  if (!value.is_number_integer()) return s;
  const int64_t v = value.get<int64_t>();
  for (const auto& [name, cv] : constants.items()) {
    if (name == "RESOURCES" || name == "T" || name == "MAX_RETRANS") continue;
    if (cv.is_number_integer() && cv.get<int64_t>() == v) {
      if (peer_field && name != "NONE") continue;  // peers are ids, not states
      return s + " (" + name + ")";
    }
  }
  return s;
}

void diff_states(const json& before, const json& after, const json& constants,
                 std::ostream& out) {
  // locations
  for (const auto& [proc, loc] : after.at("locations").items()) {
    const auto& prev = before.at("locations").at(proc);
    if (prev != loc) out << "      " << proc << " @ " << prev.get<std::string>() << " -> "
                         << loc.get<std::string>() << "\n";
  }
  auto diff_map = [&](const json& b, const json& a, const std::string& prefix) {
    for (const auto& [key, value] : a.items()) {
      const auto& prev = b.at(key);
      if (prev != value)
        out << "      " << prefix << key << ": " << decorate(key, prev, constants) << " -> "
            << decorate(key, value, constants) << "\n";
    }
  };
  // globals (scalars and arrays)
  for (const auto& [name, value] : after.at("globals").items()) {
    const auto& prev = before.at("globals").at(name);
    if (prev == value) continue;
    if (value.is_array()) {
      for (size_t k = 0; k < value.size(); ++k)
        if (prev.at(k) != value.at(k)) {
          const std::string field = name + "[" + std::to_string(k) + "]";
          out << "      " << field << ": " << decorate(name, prev.at(k), constants) << " -> "
              << decorate(name, value.at(k), constants) << "\n";
        }
    } else {
      out << "      " << name << ": " << decorate(name, prev, constants) << " -> "
          << decorate(name, value, constants) << "\n";
    }
  }
  for (const auto& [proc, vars] : after.at("locals").items())
    diff_map(before.at("locals").at(proc), vars, proc + ".");
  for (const auto& [proc, cls] : after.at("clocks").items())
    diff_map(before.at("clocks").at(proc), cls, proc + ".");
}

void print_full_state(const json& state, const json& constants, std::ostream& out) {
  for (const auto& [proc, loc] : state.at("locations").items()) {
    out << "      " << proc << " @ " << loc.get<std::string>();
    if (state.at("locals").contains(proc))
      for (const auto& [key, value] : state.at("locals").at(proc).items())
        out << "  " << key << "=" << decorate(key, value, constants);
    if (state.at("clocks").contains(proc))
      for (const auto& [key, value] : state.at("clocks").at(proc).items())
        out << "  " << key << "=" << value.dump();
    out << "\n";
  }
  for (const auto& [name, value] : state.at("globals").items()) {
    out << "      " << name << " = ";
    if (value.is_array()) {
      out << "[";
      for (size_t k = 0; k < value.size(); ++k)
        out << (k ? ", " : "") << decorate(name, value.at(k), constants);
      out << "]";
    } else {
      out << decorate(name, value, constants);
    }
    out << "\n";
  }
}

}  // namespace

std::string strip_time_fields(const std::string& report_json_text) {
  json j = json::parse(report_json_text);
  strip_time_rec(j);
  return j.dump(2) + "\n";
}

std::string format_trace_listing(const std::string& report_json_text,
                                 const std::string& property_name) {
  json j = json::parse(report_json_text);
  const json* found = nullptr;
  for (const auto& prop : j.at("properties"))
    if (prop.at("name") == property_name) found = &prop;
  if (!found) throw std::runtime_error("report has no property named '" + property_name + "'");
  if (found->at("trace").is_null())
    throw std::runtime_error("property '" + property_name + "' (" +
                             found->at("verdict").get<std::string>() + ") carries no trace");
  const json& trace = found->at("trace");
  const json constants = j.value("constants", json::object());

  std::ostringstream out;
  out << "trace for '" << property_name << "' (" << found->at("verdict").get<std::string>()
      << "), " << trace.size() - 1 << " step(s)\n";
  if (trace.size() == 1)
    out << "  the initial state already decides the property\n";
  out << "  step 0: initial state\n";
  print_full_state(trace.at(0).at("state"), constants, out);
  for (size_t i = 1; i < trace.size(); ++i) {
    out << "  step " << i << ": " << trace.at(i).at("label").at("text").get<std::string>() << "\n";
    diff_states(trace.at(i - 1).at("state"), trace.at(i).at("state"), constants, out);
  }
  return out.str();
}

}  // namespace hscheck
