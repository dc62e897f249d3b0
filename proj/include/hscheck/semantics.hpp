#ifndef HSCHECK_SEMANTICS_HPP_
#define HSCHECK_SEMANTICS_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hscheck/model.hpp"

// Operational semantics of a composed system: unit-delay discrete time
// with clock saturation, broadcast synchronization with message drop,
// and committed-location priority.

namespace hscheck {

// One snapshot of the composed system. Layout (slot offsets per process)
// is owned by the Engine that produced the state.
struct SystemState {
  std::vector<int32_t> locations;  // per process: location index
  std::vector<int32_t> globals;    // global variable slots, arrays flattened
  std::vector<int32_t> locals;     // local variable slots, concatenated per process
  std::vector<int32_t> clocks;     // clock slots, concatenated per process

  bool operator==(const SystemState&) const = default;
};

struct TransitionLabel {
  enum class Kind { Delay, Internal, Broadcast };

  Kind kind = Kind::Delay;
  int process = -1;  // initiating process (internal/broadcast)
  int edge = -1;     // edge index within the initiator's template
  int channel = -1;  // broadcast channel index
  std::vector<std::pair<int, int>> receivers;  // (process, edge), ascending process

  bool operator==(const TransitionLabel&) const = default;
};

using Successor = std::pair<TransitionLabel, SystemState>;

// Canonical fixed-width byte encoding of a SystemState; equal states and
// only equal states share a key.
using StateKey = std::string;

struct ModelRuntimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DecodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(std::vector<ModelError> errs);
  std::vector<ModelError> errors;
};

// Compiled, immutable view of a SystemDef: name resolution done once,
// guards and updates lowered to slot-addressed form. All methods are
// pure functions of (engine, state) and safe to call concurrently.
class Engine {
 public:
  // Validates the system and links it; throws ValidationError when
  // validate_system is non-empty.
  explicit Engine(SystemDef sys);
  ~Engine();
  Engine(Engine&&) noexcept;
  Engine& operator=(Engine&&) noexcept;
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  const SystemDef& system() const;

  SystemState initial_state() const;
  bool is_committed_active(const SystemState& s) const;

  // All clocks advanced by one unit (saturating); nullopt when a
  // committed location is active or a location invariant would break.
  std::optional<SystemState> apply_delay(const SystemState& s) const;

  // Fires a broadcast send edge. Sender applies its update first; then
  // every other process with an enabled receive edge takes one, in
  // ascending process order, each seeing all earlier writes. Multiple
  // enabled receive edges on one process branch into several results;
  // fire_broadcast returns the canonical first choice.
  std::vector<Successor> fire_broadcast_all(const SystemState& s, int process, int edge) const;
  Successor fire_broadcast(const SystemState& s, int process, int edge) const;

  // Exact set of enabled moves, ordered by (initiating process, edge
  // declaration order), delay last.
  std::vector<Successor> successors(const SystemState& s) const;

  StateKey encode(const SystemState& s) const;
  SystemState decode(const StateKey& key) const;

  // --- introspection (reports, traces, property elaboration) ---
  int process_count() const;
  const std::string& process_name(int process) const;
  const ProcessTemplate& process_template(int process) const;
  // Finds the instance of `template_name` whose first argument equals
  // `argument` (or the unique argumentless instance); -1 when absent.
  int find_process(const std::string& template_name, std::optional<int64_t> argument) const;

  const std::string& location_name(int process, int location) const;
  bool location_committed(int process, int location) const;

  // Slot addressing for property evaluation: globals by (name, index),
  // locals by (process, name). Throws std::out_of_range on unknown names.
  int global_slot(const std::string& name, int64_t index = 0) const;
  int local_slot(int process, const std::string& name) const;
  std::pair<int64_t, int64_t> global_range(const std::string& name) const;
  std::pair<int64_t, int64_t> local_range(int process, const std::string& name) const;

  int64_t global_value(const SystemState& s, const std::string& name, int64_t index = 0) const;
  int64_t local_value(const SystemState& s, int process, const std::string& name) const;
  int64_t clock_value(const SystemState& s, int process, const std::string& name) const;

  // Per-process declared names, in declaration order.
  std::vector<std::string> local_names(int process) const;
  std::vector<std::string> clock_names(int process) const;

  int channel_index(const std::string& name) const;
  const std::string& channel_name(int channel) const;

  std::string describe_label(const TransitionLabel& label) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace hscheck

#endif  // HSCHECK_SEMANTICS_HPP_
