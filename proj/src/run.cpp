#include "arrival/run.hpp"

#include <cstdint>

#include "arrival/analysis.hpp"

namespace arrival {

RunState initial_state(const Instance& instance) {
  RunState state;
  state.current = instance.origin();
  state.parity.assign(instance.vertex_count(), 0);
  return state;
}

RunState step(const Instance& instance, RunState state) {
  const int v = state.current;
  state.current = state.parity[v] ? instance.odd(v) : instance.even(v);
  state.parity[v] ^= 1;
  return state;
}

namespace {

struct SuccessorTable {
  std::vector<int> target[2];  // [slot][vertex] -> head
  std::vector<int> edge[2];    // [slot][vertex] -> edge index

  explicit SuccessorTable(const Instance& instance) {
    const int n = instance.vertex_count();
    for (int slot = 0; slot < 2; ++slot) {
      target[slot].resize(n);
      edge[slot].resize(n);
    }
    for (int v = 0; v < n; ++v) {
      target[0][v] = instance.even(v);
      target[1][v] = instance.odd(v);
      edge[0][v] = instance.edge_index(v, instance.even(v));
      edge[1][v] = instance.edge_index(v, instance.odd(v));
    }
  }
};

Decision run_simulation(const Instance& instance,
                        const std::optional<BigInt>& max_steps,
                        const std::vector<bool>* dead) {
  const SuccessorTable succ(instance);
  const int destination = instance.destination();
  std::vector<std::uint8_t> parity(instance.vertex_count(), 0);
  Decision result;
  result.counts.assign(instance.edge_count(), BigInt(0));
  int v = instance.origin();

  if (dead && (*dead)[v]) {
    result.outcome = Outcome::kCycles;
    result.dead_end = v;
    return result;
  }
  while (v != destination) {
    if (max_steps && result.steps >= *max_steps)
      throw BudgetExhausted("budget exhausted after " + max_steps->str() + " steps");
    const int slot = parity[v];
    parity[v] ^= 1;
    ++result.counts[succ.edge[slot][v]];
    ++result.steps;
    v = succ.target[slot][v];
    if (dead && (*dead)[v]) {
      result.outcome = Outcome::kCycles;
      result.dead_end = v;
      return result;
    }
  }
  result.outcome = Outcome::kTerminates;
  return result;
}

}  // namespace

Decision decide(const Instance& instance, const std::optional<BigInt>& max_steps) {
  const DeadEndReport report = analyze(instance);
  return run_simulation(instance, max_steps, &report.dead);
}

Decision simulate(const Instance& instance, const BigInt& max_steps) {
  return run_simulation(instance, max_steps, nullptr);
}

OracleDecision oracle_decide_staterep(const Instance& instance,
                                      std::uint64_t state_cap) {
  const int n = instance.vertex_count();
  if (n >= 58 || (static_cast<std::uint64_t>(n) << n) > state_cap)
    throw InstanceTooLarge("state bound n*2^n exceeds the safety cap");
  const std::uint64_t bound = static_cast<std::uint64_t>(n) << n;

  struct State {
    int v;
    std::uint64_t parity;
    bool operator==(const State&) const = default;
  };
  const SuccessorTable succ(instance);
  const int destination = instance.destination();
  auto advance = [&](State s) {
    const int slot = static_cast<int>((s.parity >> s.v) & 1);
    s.parity ^= (1ull << s.v);
    s.v = succ.target[slot][s.v];
    return s;
  };

  OracleDecision out;
  std::vector<std::uint64_t> counts(instance.edge_count(), 0);
  const State start{instance.origin(), 0};
  State tortoise = start;
  State hare = start;
  std::uint64_t power = 1;
  std::uint64_t lam = 0;
  bool cycles = false;
  // Brent's method over the run's state sequence; the hare walks the
  // actual run, the tortoise only teleports. A run that terminates does
  // so within n*2^n transitions (all states distinct until d), so hitting
  // the bound without reaching d proves a repeat by pigeonhole.
  while (true) {
    if (hare.v == destination) break;
    if (out.transitions == bound) {
      cycles = true;
      break;
    }
    if (lam == power) {
      tortoise = hare;
      power <<= 1;
      lam = 0;
    }
    ++counts[succ.edge[(hare.parity >> hare.v) & 1][hare.v]];
    hare = advance(hare);
    ++out.transitions;
    ++lam;
    if (hare == tortoise) {
      cycles = true;
      break;
    }
  }

  Decision& decision = out.decision;
  if (!cycles) {
    decision.outcome = Outcome::kTerminates;
    decision.steps = out.transitions;
    decision.counts.assign(counts.begin(), counts.end());
    return out;
  }
  // Cycling is established; locate the first dead end by re-simulation.
  decision = decide(instance);
  return out;
}

}  // namespace arrival
