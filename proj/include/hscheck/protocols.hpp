#ifndef HSCHECK_PROTOCOLS_HPP_
#define HSCHECK_PROTOCOLS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "hscheck/model.hpp"

// Builders for the bundled handshake models: a server endpoint with a
// bounded table of connection records, N well-behaved clients and M
// flooding clients that never complete the exchange.

namespace hscheck {

enum class Protocol { Tcp, Sctp };

std::string to_string(Protocol p);

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScenarioConfig {
  Protocol protocol = Protocol::Tcp;
  int64_t n_legit = 1;
  int64_t n_illegit = 1;
  int64_t resources = -1;  // < 0: default to n_legit + n_illegit
  int64_t retransmit_period = 2;  // T, time units
  int64_t max_retrans = 1;

  int64_t effective_resources() const {
    return resources >= 0 ? resources : n_legit + n_illegit;
  }
  int64_t client_count() const { return n_legit + n_illegit; }
};

// Parses the flat key = value config format (keys mirror the field
// names: protocol, n_legit, n_illegit, resources, T, max_retrans).
// Throws ConfigError with a line reference on bad input.
ScenarioConfig parse_scenario_config(std::istream& in);
ScenarioConfig parse_scenario_config_text(const std::string& text);

// Validates ranges (resources >= 1, T >= 1, counts >= 0); throws
// ConfigError otherwise. Builders call this themselves.
void validate_config(const ScenarioConfig& cfg);

// Three-way handshake system: connection state is allocated when the
// server acknowledges the opening request, which is what the flooding
// client exploits.
SystemDef build_tcp_system(const ScenarioConfig& cfg);

// Four-way handshake system: the acknowledgment to an opening request
// is stateless and the connection record is allocated only when the
// final acknowledgment of the echoed cookie is sent.
SystemDef build_sctp_system(const ScenarioConfig& cfg);

SystemDef build_system(const ScenarioConfig& cfg);

// Scope of the `ids` quantifier alias: every client, or only the
// well-behaved ones (needed by properties that dereference
// Legit_Client(i)).
enum class IdsScope { AllClients, LegitOnly };

struct StandardProperty {
  std::string name;
  std::string text;
  IdsScope ids_scope = IdsScope::AllClients;
};

// The named property suite used by the CLI: "half-open" (every
// established client has a matching established server record),
// "hogging" (one client owns every record in a non-free state),
// "hogging-strict" (same with the protocol's allocation state) and
// "happy-path" (some client completes the handshake).
std::vector<StandardProperty> standard_properties(Protocol protocol, const ScenarioConfig& cfg);

const StandardProperty* find_standard_property(const std::vector<StandardProperty>& props,
                                               const std::string& name);

}  // namespace hscheck

#endif  // HSCHECK_PROTOCOLS_HPP_
