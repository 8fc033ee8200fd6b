// Command-line front end for switch-graph runs: deciders, certificates,
// the exact-rational relaxation, generators, and DOT export.

#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "arrival/analysis.hpp"
#include "arrival/certificates.hpp"
#include "arrival/generators.hpp"
#include "arrival/relaxation.hpp"
#include "arrival/run.hpp"

namespace {

// Exit codes, also documented in the README:
//   0 successful decision/verification (including "NO" and "INVALID")
//   1 operational error
//   2 malformed document
//   3 budget exhausted
//   4 instance too large for the requested computation
constexpr int kOkExit = 0;
constexpr int kErrorExit = 1;
constexpr int kParseExit = 2;
constexpr int kBudgetExit = 3;
constexpr int kTooLargeExit = 4;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open \"" + path + "\"");
  file << text;
}

arrival::Instance load_instance(const std::string& path) {
  return arrival::Instance::parse(read_input(path));
}

void print_decision(const arrival::Instance& instance,
                    const arrival::Decision& decision) {
  if (decision.terminated()) {
    std::cout << "YES steps=" << decision.steps.str() << "\n";
  } else {
    std::cout << "NO dead_end=" << instance.name(decision.dead_end)
              << " steps=" << decision.steps.str() << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"ARRIVAL toolkit: decide, simulate, certify, and relax "
               "train runs on switch graphs"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string out = "-";
  std::string flow_path;
  std::string max_steps_text;
  std::string oracle = "simulation";
  std::string family = "random";
  std::string mode = "exhaustive";
  int n = 0;
  int max_vertices = 8;
  unsigned cap = 3;
  std::uint64_t seed = 0;
  std::uint64_t budget = 100'000'000;
  std::uint64_t count = 1000;

  auto* cmd_decide = app.add_subcommand("decide", "decide whether the run terminates");
  cmd_decide->add_option("input", input, "instance document, or - for stdin");
  cmd_decide->add_option("--max-steps", max_steps_text, "optional step budget");
  cmd_decide->add_option("--oracle", oracle,
                         "decision procedure: simulation (default) or staterep")
      ->check(CLI::IsMember({"simulation", "staterep"}));

  auto* cmd_simulate =
      app.add_subcommand("simulate", "raw run without dead-end analysis");
  cmd_simulate->add_option("input", input);
  cmd_simulate->add_option("--max-steps", max_steps_text, "mandatory step budget")
      ->required();

  auto* cmd_profile = app.add_subcommand("profile", "write the run profile");
  cmd_profile->add_option("input", input);
  cmd_profile->add_option("--out", out);

  auto* cmd_analyze =
      app.add_subcommand("analyze", "dead ends and edge desperations");
  cmd_analyze->add_option("input", input);
  cmd_analyze->add_option("--out", out);

  auto* cmd_verify =
      app.add_subcommand("verify-flow", "check a switching-flow certificate");
  cmd_verify->add_option("input", input);
  cmd_verify->add_option("flow", flow_path, "flow document")->required();
  cmd_verify->add_option("--out", out, "machine-readable verdict document");

  auto* cmd_complement =
      app.add_subcommand("complement", "write the complement instance");
  cmd_complement->add_option("input", input);
  cmd_complement->add_option("--out", out);

  auto* cmd_relax =
      app.add_subcommand("relax", "rational feasibility of the relaxed system");
  cmd_relax->add_option("input", input);
  cmd_relax->add_option("--out", out, "witness point document on feasibility");

  auto* cmd_gap = app.add_subcommand("gap-search", "hunt integrality-gap witnesses");
  cmd_gap->add_option("--max-vertices", max_vertices);
  cmd_gap->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "seeded-random"}));
  cmd_gap->add_option("--seed", seed);
  cmd_gap->add_option("--budget", budget);
  cmd_gap->add_option("--out", out, "witness bundle (instance + point)");

  auto* cmd_gen = app.add_subcommand("gen", "emit a generated instance");
  cmd_gen->add_option("--family", family)
      ->check(CLI::IsMember({"counter", "zigzag", "trap", "direct", "random"}));
  cmd_gen->add_option("--n", n, "counter bit-width / random vertex count");
  cmd_gen->add_option("--seed", seed);
  cmd_gen->add_option("--out", out);

  auto* cmd_dot = app.add_subcommand("export-dot", "Graphviz export");
  cmd_dot->add_option("input", input);
  cmd_dot->add_option("--out", out);

  auto* cmd_fuzz =
      app.add_subcommand("fuzz", "decide a batch of random instances in parallel");
  cmd_fuzz->add_option("--n", n, "vertex count")->required();
  cmd_fuzz->add_option("--count", count, "number of seeds");
  cmd_fuzz->add_option("--seed", seed, "base seed");

  CLI11_PARSE(app, argc, argv);

  if (cmd_decide->parsed()) {
    arrival::Instance instance = load_instance(input);
    std::optional<arrival::BigInt> max_steps;
    if (!max_steps_text.empty()) max_steps = arrival::BigInt(max_steps_text);
    arrival::Decision decision =
        oracle == "staterep"
            ? arrival::oracle_decide_staterep(instance).decision
            : arrival::decide(instance, max_steps);
    print_decision(instance, decision);
  } else if (cmd_simulate->parsed()) {
    arrival::Instance instance = load_instance(input);
    arrival::Decision decision =
        arrival::simulate(instance, arrival::BigInt(max_steps_text));
    print_decision(instance, decision);
  } else if (cmd_profile->parsed()) {
    arrival::Instance instance = load_instance(input);
    arrival::Decision decision = arrival::decide(instance);
    if (!decision.terminated()) {
      std::cerr << "run does not terminate; no profile\n";
      return kErrorExit;
    }
    write_output(out, decision.profile().serialize(instance));
  } else if (cmd_analyze->parsed()) {
    arrival::Instance instance = load_instance(input);
    arrival::DeadEndReport report = arrival::analyze(instance);
    arrival::Json doc;
    arrival::Json dead = arrival::Json::array();
    for (int v = 0; v < instance.vertex_count(); ++v)
      if (report.dead[v]) dead.push_back(instance.name(v));
    doc["dead"] = std::move(dead);
    arrival::Json desperation = arrival::Json::object();
    for (int e = 0; e < instance.edge_count(); ++e) {
      if (report.edge_is_dead(e)) continue;
      const arrival::Edge& edge = instance.edge(e);
      desperation[instance.name(edge.tail) + "->" + instance.name(edge.head)] =
          report.desperation[e];
    }
    doc["desperation"] = std::move(desperation);
    write_output(out, doc.dump(2) + "\n");
  } else if (cmd_verify->parsed()) {
    arrival::Instance instance = load_instance(input);
    arrival::Flow flow = arrival::Flow::parse(instance, read_input(flow_path));
    arrival::Verdict verdict = arrival::verify_switching_flow(instance, flow);
    if (verdict.valid) {
      std::cout << "VALID\n";
      if (arrival::exceeds_profile_bound(instance, flow))
        std::cerr << "warning: values exceed the n*2^n run-profile bound\n";
    } else {
      std::cout << "INVALID\n";
      for (const arrival::Violation& v : verdict.violations)
        std::cout << (v.kind == arrival::ViolationKind::kConservation
                          ? "CONSERVATION"
                          : "BALANCE")
                  << " at " << instance.name(v.vertex) << ": " << v.detail << "\n";
    }
    if (out != "-") write_output(out, verdict.to_json(instance).dump(2) + "\n");
  } else if (cmd_complement->parsed()) {
    arrival::Instance instance = load_instance(input);
    write_output(out, arrival::complement(instance).serialize());
  } else if (cmd_relax->parsed()) {
    arrival::Instance instance = load_instance(input);
    arrival::Feasibility result =
        arrival::feasible(arrival::build_constraints(instance));
    if (result.feasible) {
      std::cout << "FEASIBLE\n";
      if (out != "-") write_output(out, result.witness->serialize(instance));
    } else {
      std::cout << "INFEASIBLE\n";
    }
  } else if (cmd_gap->parsed()) {
    auto gap_mode = mode == "exhaustive" ? arrival::GapMode::kExhaustive
                                         : arrival::GapMode::kSeededRandom;
    auto witness = arrival::gap_search(max_vertices, gap_mode, budget, seed);
    if (!witness) {
      std::cout << "NOT_FOUND\n";
      return kBudgetExit;
    }
    std::cout << "FOUND vertices=" << witness->instance.vertex_count() << "\n";
    write_output(out, witness->to_json().dump(2) + "\n");
  } else if (cmd_gen->parsed()) {
    arrival::Instance instance = [&]() {
      if (family == "counter") return arrival::gen_counter(n);
      if (family == "zigzag") return arrival::gen_zigzag();
      if (family == "trap") return arrival::gen_trap();
      if (family == "direct") return arrival::gen_direct();
      return arrival::gen_random(n, seed);
    }();
    write_output(out, instance.serialize());
  } else if (cmd_dot->parsed()) {
    arrival::Instance instance = load_instance(input);
    write_output(out, arrival::export_dot(instance));
  } else if (cmd_fuzz->parsed()) {
    std::uint64_t yes = 0;
    std::uint64_t no = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : yes, no)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      arrival::Instance instance =
          arrival::gen_random(n, seed + static_cast<std::uint64_t>(i));
      if (arrival::decide(instance).terminated())
        ++yes;
      else
        ++no;
    }
    std::cout << "YES=" << yes << " NO=" << no << "\n";
  }
  return kOkExit;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const arrival::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseExit;
  } catch (const arrival::BudgetExhausted& e) {
    std::cerr << e.what() << "\n";
    return kBudgetExit;
  } catch (const arrival::InstanceTooLarge& e) {
    std::cerr << e.what() << "\n";
    return kTooLargeExit;
  } catch (const arrival::EnumerationTooLarge& e) {
    std::cerr << e.what() << "\n";
    return kTooLargeExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kErrorExit;
  }
}
