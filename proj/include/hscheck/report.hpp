#ifndef HSCHECK_REPORT_HPP_
#define HSCHECK_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "hscheck/checker.hpp"
#include "hscheck/protocols.hpp"

// Run reports: one document per invocation with the scenario echo and a
// per-property record (verdict, stats, optional trace). Serializable as
// both human-readable text and machine-readable JSON with identical
// content; JSON field order is deterministic.

namespace hscheck {

inline constexpr const char* kEngineName = "hscheck";
inline constexpr const char* kEngineVersion = "0.1.0";

struct PropertyResult {
  std::string name;
  std::string text;
  bool invariant = false;
  Verdict verdict;
  std::optional<std::string> expected;  // --expect value, when given
  bool expectation_met = true;
};

struct RunReport {
  ScenarioConfig scenario;
  Limits limits;
  std::vector<PropertyResult> results;
};

// Machine-readable form (JSON object, keys sorted). Trace states are
// serialized with named locations, variables and clocks so they can be
// pretty-printed without rebuilding the system.
std::string report_json(const RunReport& report, const Engine& engine);

// Human-readable form with one verdict block per property.
std::string report_text(const RunReport& report, const Engine& engine);

// Removes every elapsed-time field; used to compare reports for
// byte-identical determinism.
std::string strip_time_fields(const std::string& report_json_text);

// Step-by-step trace listing for one property of a stored JSON report:
// label plus the state delta (changed locations, variables, clocks).
// Throws std::runtime_error when the report holds no such trace.
std::string format_trace_listing(const std::string& report_json_text,
                                 const std::string& property_name);

}  // namespace hscheck

#endif  // HSCHECK_REPORT_HPP_
