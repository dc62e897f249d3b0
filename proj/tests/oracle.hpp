#ifndef HSCHECK_TESTS_ORACLE_HPP_
#define HSCHECK_TESTS_ORACLE_HPP_

#include <random>
#include <vector>

#include "hscheck/model.hpp"
#include "hscheck/semantics.hpp"

// Naive brute-force semantics oracle. Deliberately independent of the
// engine: it computes its own slot layout from the SystemDef and walks
// the raw declarations with eval_expr, trying every edge of every
// process against the semantics rules. Kept dumb and literal on purpose.

namespace hscheck::testing {

class Oracle {
 public:
  explicit Oracle(const SystemDef& sys);

  SystemState initial_state() const;
  std::vector<Successor> successors(const SystemState& s) const;

  const SystemDef& system() const { return *sys_; }

 private:
  struct ProcInfo {
    const ProcessTemplate* tmpl = nullptr;
    std::map<std::string, int64_t> params;
    std::map<std::string, int> var_base;   // absolute slot in locals
    std::map<std::string, int> clock_base;  // absolute slot in clocks
    int initial_location = 0;
  };

  class Env;

  bool committed(const SystemState& s, size_t p) const;
  bool any_committed(const SystemState& s) const;
  bool invariants_hold(const SystemState& s) const;
  bool guard_holds(const SystemState& s, size_t p, const Edge& e) const;
  SystemState apply_edge(const SystemState& s, size_t p, const Edge& e) const;
  void run_update(const Update& u, SystemState& s, size_t p) const;
  void receivers_from(size_t next, size_t sender, const std::string& channel,
                      const SystemState& st, std::vector<std::pair<int, int>>& acc,
                      const TransitionLabel& base, std::vector<Successor>& out) const;

  const SystemDef* sys_;
  std::vector<ProcInfo> procs_;
  std::map<std::string, std::pair<int, int>> global_base_;  // name -> (base, size)
  std::vector<int64_t> clock_ceilings_;
};

// Random well-formed systems for the fuzz harness: small templates with
// bounded variables, at most one clock each, broadcast edges and the
// occasional first-match update over a tiny global array.
SystemDef random_system(std::mt19937& rng);

}  // namespace hscheck::testing

#endif  // HSCHECK_TESTS_ORACLE_HPP_
