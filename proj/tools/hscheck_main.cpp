#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hscheck/checker.hpp"
#include "hscheck/dot.hpp"
#include "hscheck/property.hpp"
#include "hscheck/protocols.hpp"
#include "hscheck/report.hpp"

// Exit codes: 0 all expectations met, 1 expectation mismatch,
// 2 usage/input error, 3 inconclusive under an expectation.
namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

using namespace hscheck;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CheckOptions {
  std::string config_path;
  std::string protocol;
  int64_t legit = -1, illegit = -1, resources = -1, period = -1, max_retrans = -1;
  std::vector<std::string> props;
  std::string query_file;
  std::vector<std::string> expects;
  std::string format = "text";
  std::string output_path;
  uint64_t max_states = 0;
  std::optional<uint64_t> max_depth;
  unsigned parallel = 0;
};

ScenarioConfig resolve_config(const CheckOptions& opt) {
  ScenarioConfig cfg;
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) throw ConfigError("cannot read config file '" + opt.config_path + "'");
    cfg = parse_scenario_config(in);
  }
  // flags override file values
  if (!opt.protocol.empty()) {
    if (opt.protocol == "tcp")
      cfg.protocol = Protocol::Tcp;
    else if (opt.protocol == "sctp")
      cfg.protocol = Protocol::Sctp;
    else
      throw ConfigError("--protocol must be tcp or sctp");
  }
  if (opt.legit >= 0) cfg.n_legit = opt.legit;
  if (opt.illegit >= 0) cfg.n_illegit = opt.illegit;
  if (opt.resources >= 0) cfg.resources = opt.resources;
  if (opt.period >= 0) cfg.retransmit_period = opt.period;
  if (opt.max_retrans >= 0) cfg.max_retrans = opt.max_retrans;
  validate_config(cfg);
  return cfg;
}

bool expectation_met(VerdictKind kind, const std::string& expected) {
  return to_string(kind) == expected;
}

int run_check(const CheckOptions& opt) {
  ScenarioConfig cfg;
  try {
    cfg = resolve_config(opt);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  // property selection: named built-ins first, then query file entries
  struct Selected {
    std::string name;
    std::string text;
    IdsScope scope = IdsScope::AllClients;
  };
  std::vector<Selected> selected;
  const auto builtins = standard_properties(cfg.protocol, cfg);
  try {
    for (const auto& name : opt.props) {
      const auto* p = find_standard_property(builtins, name);
      if (!p) {
        std::cerr << "error: unknown built-in property '" << name
                  << "' (available: half-open, hogging, hogging-strict, happy-path)\n";
        return kExitUsage;
      }
      selected.push_back({p->name, p->text, p->ids_scope});
    }
    if (!opt.query_file.empty()) {
      const auto entries = parse_query_file(read_file(opt.query_file));
      for (const auto& e : entries) selected.push_back({e.name, e.text, IdsScope::AllClients});
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (selected.empty()) {
    std::cerr << "error: no properties selected (use --prop or --query-file)\n";
    return kExitUsage;
  }
  if (opt.expects.size() > selected.size()) {
    std::cerr << "error: more --expect values than properties\n";
    return kExitUsage;
  }
  for (const auto& e : opt.expects) {
    if (e != "holds" && e != "violated" && e != "reachable" && e != "unreachable") {
      std::cerr << "error: --expect must be holds|violated|reachable|unreachable\n";
      return kExitUsage;
    }
  }

  Limits limits;
  if (opt.max_states > 0) limits.max_states = opt.max_states;
  limits.max_depth = opt.max_depth;
  limits.workers = opt.parallel;

  RunReport report;
  report.scenario = cfg;
  report.limits = limits;

  std::optional<Engine> engine;
  try {
    engine.emplace(build_system(cfg));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  bool any_mismatch = false;
  bool any_inconclusive_expected = false;
  for (size_t i = 0; i < selected.size(); ++i) {
    PropertyResult result;
    result.name = selected[i].name;
    result.text = selected[i].text;
    GroundProperty prop;
    try {
      const PropertyAst ast = parse_property(selected[i].text);
      prop = elaborate(ast, *engine, selected[i].scope);
    } catch (const std::exception& e) {
      std::cerr << "error: property '" << selected[i].name << "': " << e.what() << "\n";
      return kExitUsage;
    }
    result.invariant = prop.invariant;
    result.verdict = check(*engine, prop, limits);
    if (i < opt.expects.size()) {
      result.expected = opt.expects[i];
      result.expectation_met = expectation_met(result.verdict.kind, opt.expects[i]);
      if (result.verdict.kind == VerdictKind::Inconclusive)
        any_inconclusive_expected = true;
      else if (!result.expectation_met)
        any_mismatch = true;
    }
    report.results.push_back(std::move(result));
  }

  const std::string json_text = report_json(report, *engine);
  if (opt.format == "json")
    std::cout << json_text;
  else
    std::cout << report_text(report, *engine);
  if (!opt.output_path.empty()) {
    std::ofstream out(opt.output_path);
    if (!out) {
      std::cerr << "error: cannot write '" << opt.output_path << "'\n";
      return kExitUsage;
    }
    out << json_text;
  }

  if (any_mismatch) return kExitMismatch;
  if (any_inconclusive_expected) return kExitInconclusive;
  return kExitOk;
}

int run_trace(const std::string& report_path, const std::string& property_name) {
  try {
    const std::string listing = format_trace_listing(read_file(report_path), property_name);
    std::cout << listing;
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_export(const std::string& protocol, const std::string& format,
               const std::string& out_dir) {
  if (format != "dot") {
    std::cerr << "error: unknown export format '" << format << "' (supported: dot)\n";
    return kExitUsage;
  }
  ScenarioConfig cfg;
  if (protocol == "tcp")
    cfg.protocol = Protocol::Tcp;
  else if (protocol == "sctp")
    cfg.protocol = Protocol::Sctp;
  else {
    std::cerr << "error: --protocol must be tcp or sctp\n";
    return kExitUsage;
  }
  const SystemDef sys = build_system(cfg);
  if (out_dir.empty()) {
    for (const auto& g : system_to_dot(sys)) std::cout << g << "\n";
    return kExitOk;
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  for (const auto& t : sys.templates) {
    const auto path = std::filesystem::path(out_dir) / (t.name + ".dot");
    std::ofstream out(path);
    if (!out) {
      std::cerr << "error: cannot write '" << path.string() << "'\n";
      return kExitUsage;
    }
    out << template_to_dot(t);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"explicit-state model checker for the bundled TCP/SCTP handshake models"};
  app.require_subcommand(1);

  CheckOptions check_opt;
  auto* check_cmd = app.add_subcommand("check", "build a scenario and check properties");
  check_cmd->add_option("--config", check_opt.config_path, "flat key=value config file");
  check_cmd->add_option("--protocol", check_opt.protocol, "tcp or sctp");
  check_cmd->add_option("--legit", check_opt.legit, "number of legitimate clients");
  check_cmd->add_option("--illegit", check_opt.illegit, "number of illegitimate clients");
  check_cmd->add_option("--resources", check_opt.resources, "server record table size");
  check_cmd->add_option("--T", check_opt.period, "client retransmission period");
  check_cmd->add_option("--max-retrans", check_opt.max_retrans, "maximum retransmissions");
  check_cmd->add_option("--prop", check_opt.props,
                        "built-in property name (half-open, hogging, hogging-strict, happy-path); "
                        "repeatable");
  check_cmd->add_option("--query-file", check_opt.query_file, "query file with named properties");
  check_cmd->add_option("--expect", check_opt.expects,
                        "holds|violated|reachable|unreachable, paired with --prop order");
  check_cmd->add_option("--format", check_opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  check_cmd->add_option("--output,-o", check_opt.output_path, "also write the JSON report here");
  check_cmd->add_option("--max-states", check_opt.max_states, "visited-state limit");
  check_cmd->add_option("--max-depth", check_opt.max_depth, "exploration depth limit");
  check_cmd->add_option("--parallel", check_opt.parallel, "worker threads (0 = sequential)");

  std::string trace_report, trace_prop;
  auto* trace_cmd = app.add_subcommand("trace", "pretty-print a trace from a JSON report");
  trace_cmd->add_option("report", trace_report, "JSON report path")->required();
  trace_cmd->add_option("property", trace_prop, "property name")->required();

  std::string export_protocol, export_format = "dot", export_dir;
  auto* export_cmd = app.add_subcommand("export", "write template diagrams");
  export_cmd->add_option("--protocol", export_protocol, "tcp or sctp")->required();
  export_cmd->add_option("--format", export_format, "diagram format (dot)");
  export_cmd->add_option("--out-dir", export_dir, "write one file per template");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check_cmd->parsed()) return run_check(check_opt);
    if (trace_cmd->parsed()) return run_trace(trace_report, trace_prop);
    if (export_cmd->parsed()) return run_export(export_protocol, export_format, export_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
