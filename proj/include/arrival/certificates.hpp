#pragma once

#include <string>
#include <vector>

#include "arrival/flow.hpp"
#include "arrival/instance.hpp"

namespace arrival {

enum class ViolationKind { kConservation, kBalance };

struct Violation {
  ViolationKind kind;
  int vertex;
  std::string detail;
};

// NP verifier result. Rejecting a fake certificate is a verdict, not an
// error; malformed input (non-edges, negative values) is rejected at
// Flow parse time instead.
struct Verdict {
  bool valid = true;
  std::vector<Violation> violations;

  Json to_json(const Instance& instance) const;
};

// Checks flow conservation (net +1 at the origin, -1 at the destination,
// 0 elsewhere; loop edges cancel) and the balance condition
// 0 <= x_odd <= x_even <= x_odd + 1 at every vertex with two distinct
// out-edges.
Verdict verify_switching_flow(const Instance& instance, const Flow& flow);

// Certificate values above n*2^n are still valid but exceed what any run
// profile can reach; callers may surface a warning.
bool exceeds_profile_bound(const Instance& instance, const Flow& flow);

// Complement instance: a fresh destination is added, every dead end of
// the original is rewired to it, and the old destination is looped. The
// resulting run terminates iff the original one does not.
Instance complement(const Instance& instance);

// All switching flows with every entry <= cap, in lexicographic order of
// the edge-ordered value vector. Guarded: at most 10^7 candidates.
std::vector<Flow> enumerate_switching_flows(const Instance& instance,
                                            unsigned cap);
// Serial reference for the OpenMP kernel above; identical output.
std::vector<Flow> enumerate_switching_flows_serial(const Instance& instance,
                                                   unsigned cap);

struct EnumerationTooLarge : std::runtime_error {
  explicit EnumerationTooLarge(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Brute-force check that the run profile is the componentwise least
// switching flow and the unique minimizer of the total Sigma(x) among
// all flows with entries <= cap.
struct MinimalityReport {
  bool confirmed = false;
  std::size_t flows_checked = 0;
  std::string detail;  // counterexample description when not confirmed
};

MinimalityReport check_minimality(const Instance& instance, unsigned cap);

}  // namespace arrival
