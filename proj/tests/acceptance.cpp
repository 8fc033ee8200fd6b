// Acceptance suite: one pass/fail line per criterion. Exits nonzero if
// any criterion fails. argv[1] must point at the CLI binary (used by the
// determinism criterion).

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "arrival/analysis.hpp"
#include "arrival/certificates.hpp"
#include "arrival/generators.hpp"
#include "arrival/relaxation.hpp"
#include "arrival/run.hpp"

using namespace arrival;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  if (!pass) ++g_failures;
  std::printf("criterion %d: %s  %s\n", criterion, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
}

constexpr int kCorpusSize = 10'000;

Instance corpus_instance(std::uint64_t seed) {
  return gen_random(2 + static_cast<int>(seed % 7), seed);
}

std::uint64_t candidate_count(int num_edges, unsigned cap, std::uint64_t guard) {
  std::uint64_t total = 1;
  for (int i = 0; i < num_edges; ++i) {
    if (total > guard) return guard + 1;
    total *= cap + 1;
  }
  return total;
}

// 1. Exponential counter family: steps = 3*2^n - 2 for n = 1..20, with
//    n = 20 deciding in under ten seconds.
void criterion_counter_family() {
  bool pass = true;
  double n20_seconds = 0;
  for (int n = 1; n <= 20; ++n) {
    auto start = std::chrono::steady_clock::now();
    Decision d = decide(gen_counter(n));
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (n == 20) n20_seconds = elapsed;
    if (!d.terminated() || d.steps != (BigInt(3) << n) - 2) pass = false;
  }
  if (n20_seconds >= 10.0) pass = false;
  std::ostringstream detail;
  detail << "counter steps = 3*2^n - 2 for n = 1..20; n = 20 took "
         << n20_seconds << "s";
  report(1, pass, detail.str());
}

// 2. State-repetition oracle: halts within n*2^n transitions and agrees
//    with decide on 1000 random 10-vertex instances.
void criterion_staterep_oracle() {
  const std::uint64_t bound = 10ull << 10;
  bool pass = true;
  std::uint64_t max_transitions = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Instance inst = gen_random(10, seed);
    Decision reference = decide(inst);
    OracleDecision oracle = oracle_decide_staterep(inst);
    max_transitions = std::max(max_transitions, oracle.transitions);
    if (oracle.transitions > bound) pass = false;
    if (oracle.decision.outcome != reference.outcome) pass = false;
    if (reference.terminated() && oracle.decision.steps != reference.steps)
      pass = false;
  }
  std::ostringstream detail;
  detail << "1000 instances, max transitions " << max_transitions << " <= "
         << bound << ", outcomes agree";
  report(2, pass, detail.str());
}

// 3. Certificate soundness and completeness over the random corpus:
//    every terminating profile verifies; every enumerable switching flow
//    dominates the profile; cycling instances admit no flow.
void criterion_certificates() {
  // per-instance cross-check budget; instances whose candidate space is
  // larger are still profile-verified, just not enumerated
  constexpr std::uint64_t kGuard = 200'000;
  bool pass = true;
  int enumerated_yes = 0;
  int enumerated_no = 0;
  for (std::uint64_t seed = 0; seed < kCorpusSize; ++seed) {
    Instance inst = corpus_instance(seed);
    Decision d = decide(inst);
    if (d.terminated()) {
      Flow profile = d.profile();
      if (!verify_switching_flow(inst, profile).valid) pass = false;
      BigInt max_entry = 0;
      for (const BigInt& v : profile.values) max_entry = std::max(max_entry, v);
      if (max_entry > 1000) continue;
      unsigned cap = max_entry.convert_to<unsigned>() + 2;
      if (candidate_count(inst.edge_count(), cap, kGuard) > kGuard) continue;
      ++enumerated_yes;
      for (const Flow& flow : enumerate_switching_flows(inst, cap))
        if (!profile.dominated_by(flow)) pass = false;
    } else {
      if (candidate_count(inst.edge_count(), 2, kGuard) > kGuard) continue;
      ++enumerated_no;
      if (!enumerate_switching_flows(inst, 2).empty()) pass = false;
    }
  }
  std::ostringstream detail;
  detail << kCorpusSize << " instances; enumeration cross-checked on "
         << enumerated_yes << " terminating and " << enumerated_no
         << " cycling instances, zero counterexamples required";
  report(3, pass, detail.str());
}

// 4. Desperation bound: a hopeful edge of desperation k is traversed at
//    most 2^(k+1) - 1 times, on terminating and cycling prefixes alike.
void criterion_desperation_bound() {
  bool pass = true;
  for (std::uint64_t seed = 0; seed < kCorpusSize; ++seed) {
    Instance inst = corpus_instance(seed);
    Decision d = decide(inst);
    DeadEndReport report_ = analyze(inst);
    for (int e = 0; e < inst.edge_count(); ++e) {
      if (report_.edge_is_dead(e)) continue;
      BigInt bound = (BigInt(1) << (report_.desperation[e] + 1)) - 1;
      if (d.counts[e] > bound) pass = false;
    }
  }
  report(4, pass,
         std::to_string(kCorpusSize) +
             " instances; all hopeful-edge counts within 2^(k+1) - 1");
}

// 5. Complement theorem: exactly one of the instance and its complement
//    terminates, over the corpus and the named instances.
void criterion_complement() {
  bool pass = true;
  auto xor_holds = [](const Instance& inst) {
    return decide(inst).terminated() != decide(complement(inst)).terminated();
  };
  for (std::uint64_t seed = 0; seed < kCorpusSize; ++seed)
    if (!xor_holds(corpus_instance(seed))) pass = false;
  for (const Instance& inst : {gen_direct(), gen_trap(), gen_zigzag()})
    if (!xor_holds(inst)) pass = false;
  for (int n = 1; n <= 6; ++n)
    if (!xor_holds(gen_counter(n))) pass = false;
  report(5, pass,
         std::to_string(kCorpusSize) +
             " random + named instances; decide(G) XOR decide(complement(G))");
}

// 6. Run-profile minimality on every terminating corpus instance with at
//    most six edges.
void criterion_minimality() {
  bool pass = true;
  int checked = 0;
  for (std::uint64_t seed = 0; seed < kCorpusSize; ++seed) {
    Instance inst = corpus_instance(seed);
    if (inst.edge_count() > 6) continue;
    Decision d = decide(inst);
    if (!d.terminated()) continue;
    BigInt max_entry = 0;
    for (const BigInt& v : d.counts) max_entry = std::max(max_entry, v);
    unsigned cap = max_entry.convert_to<unsigned>() + 2;
    try {
      if (!check_minimality(inst, cap).confirmed) pass = false;
      ++checked;
    } catch (const EnumerationTooLarge&) {
      pass = false;  // criterion requires every such instance to be checked
    }
  }
  std::ostringstream detail;
  detail << checked << " terminating instances with <= 6 edges; profile is the "
         << "least element and unique total minimizer";
  report(6, pass, detail.str());
}

// 7. Integrality gap: exhaustive search over the canonical instances with
//    up to 8 vertices yields a witness whose run cycles while the exact
//    rational relaxation is feasible; the witness self-verifies.
void criterion_gap_witness() {
  auto witness = gap_search(8, GapMode::kExhaustive, 100'000'000);
  bool pass = witness.has_value();
  std::ostringstream detail;
  if (witness) {
    ConstraintSystem sys = build_constraints(witness->instance);
    if (check_point(sys, witness->point).feasible == false) pass = false;
    if (decide(witness->instance).terminated()) pass = false;
    detail << "witness with " << witness->instance.vertex_count()
           << " vertices; run cycles, rational point checks exactly";
  } else {
    detail << "no witness found";
  }
  report(7, pass, detail.str());
}

// 8. CLI determinism: byte-identical output across repeated invocations.
std::string capture(const std::string& command) {
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    output.append(buffer, got);
  int status = pclose(pipe);
  output += "\nexit=" + std::to_string(status);
  return output;
}

void criterion_cli_determinism(const std::string& cli) {
  const std::string dir = "/tmp/arrival-acceptance";
  if (std::system(("mkdir -p " + dir).c_str()) != 0) {
    report(8, false, "could not create the scratch directory");
    return;
  }
  std::vector<std::string> commands = {
      cli + " gen --family counter --n 4",
      cli + " gen --family random --n 7 --seed 99",
      cli + " gen --family trap | " + cli + " decide -",
      cli + " gen --family counter --n 3 | " + cli + " decide -",
      cli + " gen --family zigzag | " + cli + " analyze -",
      cli + " gen --family counter --n 3 | " + cli + " export-dot -",
      cli + " gen --family direct | " + cli + " complement -",
      cli + " gen --family zigzag | " + cli + " relax - --out " + dir + "/w.json"
            " && cat " + dir + "/w.json",
      cli + " gen --family zigzag --out " + dir + "/zig.json && " +
          cli + " profile " + dir + "/zig.json --out " + dir + "/zig-flow.json"
          " && " + cli + " verify-flow " + dir + "/zig.json " + dir +
          "/zig-flow.json",
      cli + " gap-search --mode seeded-random --max-vertices 5 --seed 11"
            " --budget 500 --out " + dir + "/gap.json; cat " + dir +
            "/gap.json 2>/dev/null",
      cli + " fuzz --n 8 --count 2000 --seed 5",
  };
  bool pass = true;
  for (const std::string& command : commands) {
    if (capture(command) != capture(command)) {
      pass = false;
      std::fprintf(stderr, "nondeterministic: %s\n", command.c_str());
    }
  }
  // piped and file-based invocations must agree
  std::string piped =
      capture(cli + " gen --family counter --n 5 | " + cli + " decide -");
  std::string file_based =
      capture(cli + " gen --family counter --n 5 --out " + dir +
              "/c5.json && " + cli + " decide " + dir + "/c5.json");
  if (piped != file_based) pass = false;
  report(8, pass,
         std::to_string(commands.size()) +
             " CLI invocations byte-identical across two runs");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-cli>\n");
    return 2;
  }
  criterion_counter_family();
  criterion_staterep_oracle();
  criterion_certificates();
  criterion_desperation_bound();
  criterion_complement();
  criterion_minimality();
  criterion_gap_witness();
  criterion_cli_determinism(argv[1]);
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
