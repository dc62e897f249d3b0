#include "hscheck/checker.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <unordered_map>

namespace hscheck {

std::string to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::Holds: return "holds";
    case VerdictKind::Violated: return "violated";
    case VerdictKind::Reachable: return "reachable";
    case VerdictKind::NotReachable: return "unreachable";
    case VerdictKind::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct NodeMeta {
  int64_t parent = -1;
  TransitionLabel label;
};

// One generated successor, recorded before deduplication. Levels are
// expanded first and merged afterwards in declaration order, which keeps
// visited-set contents, parent choices and witness selection identical
// whether a level was expanded by one worker or many.
struct Candidate {
  StateKey key;
  TransitionLabel label;
  bool hit = false;
};

struct Search {
  const Engine& engine;
  std::unordered_map<StateKey, int64_t> index;
  std::vector<StateKey> keys;
  std::vector<NodeMeta> meta;

  explicit Search(const Engine& eng) : engine(eng) {}

  std::pair<int64_t, bool> intern(const StateKey& key, int64_t parent,
                                  const TransitionLabel& label) {
    auto [it, inserted] = index.try_emplace(key, static_cast<int64_t>(keys.size()));
    if (inserted) {
      keys.push_back(key);
      meta.push_back({parent, label});
    }
    return {it->second, inserted};
  }

  Trace trace_to(int64_t node) const {
    std::vector<int64_t> chain;
    for (int64_t n = node; n >= 0; n = meta[static_cast<size_t>(n)].parent) chain.push_back(n);
    std::reverse(chain.begin(), chain.end());
    Trace trace;
    trace.initial = engine.decode(keys[static_cast<size_t>(chain.front())]);
    for (size_t i = 1; i < chain.size(); ++i) {
      const auto& m = meta[static_cast<size_t>(chain[i])];
      trace.steps.emplace_back(m.label, engine.decode(keys[static_cast<size_t>(chain[i])]));
    }
    return trace;
  }
};

struct RunResult {
  std::optional<int64_t> hit;
  StateSpaceStats stats;
};

// Breadth-first search; `target` (optional) is evaluated on every state
// as it is generated, so the first hit is depth-minimal.
RunResult bfs(Search& search, const Limits& limits, const GroundPred* target, bool target_value) {
  const Engine& engine = search.engine;
  const auto start = Clock::now();
  RunResult result;
  StateSpaceStats& stats = result.stats;

  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };
  auto finish = [&](bool complete, const std::string& limit) {
    stats.states = search.keys.size();
    stats.complete = complete;
    stats.limit_hit = limit;
    stats.elapsed_seconds = elapsed();
    return result;
  };

  const SystemState init = engine.initial_state();
  search.intern(engine.encode(init), -1, {});
  if (target && eval_ground(*target, init) == target_value) {
    result.hit = 0;
    return finish(false, "");
  }

  std::vector<int64_t> frontier{0};
  const unsigned workers = limits.workers;

  uint64_t depth = 0;
  while (!frontier.empty()) {
    stats.peak_frontier = std::max(stats.peak_frontier, static_cast<uint64_t>(frontier.size()));
    if (limits.max_depth && depth >= *limits.max_depth) return finish(false, "max_depth");
    if (limits.wall_clock_seconds && elapsed() > *limits.wall_clock_seconds)
      return finish(false, "wall_clock");

    // --- expansion: pure successor generation, parallelizable ---
    std::vector<std::vector<Candidate>> expansions(frontier.size());
    auto expand_one = [&](size_t i) {
      const SystemState state = engine.decode(search.keys[static_cast<size_t>(frontier[i])]);
      auto succs = engine.successors(state);
      auto& out = expansions[i];
      out.reserve(succs.size());
      for (auto& [label, next_state] : succs) {
        Candidate c;
        c.key = engine.encode(next_state);
        c.label = label;
        c.hit = target && eval_ground(*target, next_state) == target_value;
        out.push_back(std::move(c));
      }
    };
    if (workers > 1) {
      std::atomic<size_t> cursor{0};
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          size_t i;
          while ((i = cursor.fetch_add(1)) < frontier.size()) expand_one(i);
        });
      for (auto& th : pool) th.join();
    } else {
      for (size_t i = 0; i < frontier.size(); ++i) expand_one(i);
    }

    // --- merge: deterministic interning in declaration order ---
    std::vector<int64_t> next_frontier;
    for (size_t i = 0; i < frontier.size(); ++i) {
      for (const Candidate& c : expansions[i]) {
        ++stats.transitions;
        auto [node, inserted] = search.intern(c.key, frontier[i], c.label);
        if (!inserted) continue;
        stats.max_depth = std::max(stats.max_depth, depth + 1);
        if (c.hit) {
          result.hit = node;
          return finish(false, "");
        }
        if (search.keys.size() > limits.max_states) return finish(false, "max_states");
        next_frontier.push_back(node);
      }
    }
    frontier.swap(next_frontier);
    ++depth;
  }
  return finish(true, "");
}

}  // namespace

StateSpaceStats explore(const Engine& engine, const Limits& limits) {
  Search search(engine);
  return bfs(search, limits, nullptr, true).stats;
}

Verdict check(const Engine& engine, const GroundProperty& property, const Limits& limits) {
  Search search(engine);
  // invariants hunt for a falsifying state, reachability for a satisfying one
  const bool target_value = !property.invariant;
  auto result = bfs(search, limits, property.predicate.get(), target_value);

  Verdict verdict;
  verdict.stats = result.stats;
  if (result.hit) {
    verdict.kind = property.invariant ? VerdictKind::Violated : VerdictKind::Reachable;
    Trace trace = search.trace_to(*result.hit);
    // traces are only reported once replay reproduces them and the final
    // state re-decides the predicate
    if (!replay(engine, trace))
      throw ModelRuntimeError("internal error: produced trace failed replay");
    if (eval_ground(*property.predicate, trace.final_state()) != target_value)
      throw ModelRuntimeError("internal error: trace final state does not decide the property");
    verdict.trace = std::move(trace);
  } else if (result.stats.complete) {
    verdict.kind = property.invariant ? VerdictKind::Holds : VerdictKind::NotReachable;
  } else {
    verdict.kind = VerdictKind::Inconclusive;
  }
  return verdict;
}

bool replay(const Engine& engine, const Trace& trace) {
  if (!(trace.initial == engine.initial_state())) return false;
  const SystemState* current = &trace.initial;
  for (const auto& [label, state] : trace.steps) {
    const auto succs = engine.successors(*current);
    const bool found = std::any_of(succs.begin(), succs.end(), [&](const Successor& s) {
      return s.first == label && s.second == state;
    });
    if (!found) return false;
    current = &state;
  }
  return true;
}

}  // namespace hscheck
