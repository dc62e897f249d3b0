#ifndef HSCHECK_CHECKER_HPP_
#define HSCHECK_CHECKER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hscheck/property.hpp"
#include "hscheck/semantics.hpp"

// Exhaustive breadth-first exploration with verdict computation and
// counterexample/witness reconstruction. BFS keeps traces shortest.

namespace hscheck {

struct Limits {
  uint64_t max_states = 5'000'000;
  std::optional<uint64_t> max_depth;
  std::optional<double> wall_clock_seconds;
  // 0: sequential reference mode; >1: level-synchronous workers with
  // identical verdicts and stats (witnesses may differ among equal-length
  // candidates).
  unsigned workers = 0;
};

struct StateSpaceStats {
  uint64_t states = 0;
  uint64_t transitions = 0;
  uint64_t max_depth = 0;
  uint64_t peak_frontier = 0;
  double elapsed_seconds = 0.0;
  bool complete = false;  // false when a limit cut exploration short
  std::string limit_hit;  // which limit stopped it, when !complete
};

// Replayable witness: state_0 is the initial state, every following
// (label, state) pair is produced by successors of its predecessor.
struct Trace {
  SystemState initial;
  std::vector<std::pair<TransitionLabel, SystemState>> steps;

  size_t length() const { return steps.size(); }
  const SystemState& final_state() const {
    return steps.empty() ? initial : steps.back().second;
  }
};

enum class VerdictKind { Holds, Violated, Reachable, NotReachable, Inconclusive };

std::string to_string(VerdictKind v);

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::optional<Trace> trace;  // Violated / Reachable
  StateSpaceStats stats;
};

// BFS from the initial state with a visited set keyed by the canonical
// state encoding. Invariants report Violated with a shortest
// counterexample; reachability reports Reachable with a shortest
// witness. Every returned trace has been validated by replay before the
// verdict is produced.
Verdict check(const Engine& engine, const GroundProperty& property, const Limits& limits = {});

// Full reachable-set statistics under the given limits.
StateSpaceStats explore(const Engine& engine, const Limits& limits = {});

// True iff the trace starts at the initial state and every step is
// reproduced exactly by successors.
bool replay(const Engine& engine, const Trace& trace);

}  // namespace hscheck

#endif  // HSCHECK_CHECKER_HPP_
