#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arrival/flow.hpp"
#include "arrival/instance.hpp"

namespace arrival {

// Train position plus per-vertex switch positions. parity[v] == 0 means
// the even successor is taken next.
struct RunState {
  int current = -1;
  std::vector<std::uint8_t> parity;

  friend bool operator==(const RunState&, const RunState&) = default;
};

RunState initial_state(const Instance& instance);

// One move of the run: traverse the current switch position and flip it.
// Precondition: state.current != destination.
RunState step(const Instance& instance, RunState state);

enum class Outcome { kTerminates, kCycles };

// Result of a run. counts holds per-edge traversal counts of the
// simulated prefix; for a terminating run it is the run profile.
struct Decision {
  Outcome outcome = Outcome::kTerminates;
  BigInt steps;                 // edges traversed until d, or until the dead end
  std::vector<BigInt> counts;   // per edge, up to the halt point
  int dead_end = -1;            // valid iff kCycles

  bool terminated() const { return outcome == Outcome::kTerminates; }
  // Run profile; only meaningful on terminating runs.
  Flow profile() const {
    Flow f;
    f.values = counts;
    return f;
  }
};

struct BudgetExhausted : std::runtime_error {
  explicit BudgetExhausted(const std::string& msg) : std::runtime_error(msg) {}
};

struct InstanceTooLarge : std::runtime_error {
  explicit InstanceTooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

// Decides the run by simulation with a dead-end early exit: the run is
// cut the moment it enters a vertex with no path to the destination,
// which is guaranteed to happen on every nonterminating run. Always
// halts; max_steps, when given, turns overruns into BudgetExhausted.
Decision decide(const Instance& instance,
                const std::optional<BigInt>& max_steps = std::nullopt);

// Raw simulation without dead-end analysis. Loops forever on
// nonterminating runs, hence the mandatory budget.
Decision simulate(const Instance& instance, const BigInt& max_steps);

// Independent decider based on state repetition: Brent's cycle detection
// on the state-transition map, capped at the n*2^n state bound. Reports
// the number of transition applications used to reach the decision.
struct OracleDecision {
  Decision decision;
  std::uint64_t transitions = 0;
};

OracleDecision oracle_decide_staterep(const Instance& instance,
                                      std::uint64_t state_cap = (1ull << 30));

}  // namespace arrival
