#include "arrival/certificates.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "arrival/analysis.hpp"
#include "arrival/run.hpp"

namespace arrival {

Json Verdict::to_json(const Instance& instance) const {
  Json doc;
  doc["valid"] = valid;
  Json list = Json::array();
  for (const Violation& v : violations) {
    Json item;
    item["kind"] = v.kind == ViolationKind::kConservation ? "CONSERVATION" : "BALANCE";
    item["vertex"] = instance.name(v.vertex);
    item["detail"] = v.detail;
    list.push_back(std::move(item));
  }
  doc["violations"] = std::move(list);
  return doc;
}

Verdict verify_switching_flow(const Instance& instance, const Flow& flow) {
  const int n = instance.vertex_count();
  Verdict verdict;
  auto flag = [&](ViolationKind kind, int vertex, std::string detail) {
    verdict.valid = false;
    verdict.violations.push_back({kind, vertex, std::move(detail)});
  };

  std::vector<BigInt> net(n, BigInt(0));
  for (int e = 0; e < instance.edge_count(); ++e) {
    const Edge& edge = instance.edge(e);
    net[edge.tail] += flow.values[e];
    net[edge.head] -= flow.values[e];
  }
  for (int v = 0; v < n; ++v) {
    BigInt expected = 0;
    if (v == instance.origin()) expected = 1;
    if (v == instance.destination()) expected = -1;
    if (net[v] != expected)
      flag(ViolationKind::kConservation, v,
           "net outflow " + net[v].str() + ", expected " + expected.str());
  }
  for (int v = 0; v < n; ++v) {
    const BigInt& even_value = flow.values[instance.edge_index(v, instance.even(v))];
    if (instance.even(v) == instance.odd(v)) {
      if (even_value < 0)
        flag(ViolationKind::kBalance, v, "negative value " + even_value.str());
      continue;
    }
    const BigInt& odd_value = flow.values[instance.edge_index(v, instance.odd(v))];
    if (odd_value < 0 || even_value < odd_value || even_value > odd_value + 1)
      flag(ViolationKind::kBalance, v,
           "even slot " + even_value.str() + " vs odd slot " + odd_value.str());
  }
  return verdict;
}

bool exceeds_profile_bound(const Instance& instance, const Flow& flow) {
  const int n = instance.vertex_count();
  BigInt bound = BigInt(n) << n;
  for (const BigInt& v : flow.values)
    if (v > bound) return true;
  return false;
}

Instance complement(const Instance& instance) {
  const DeadEndReport report = analyze(instance);
  std::string fresh = "dbar";
  while (instance.vertex_index(fresh) >= 0) fresh += '\'';

  std::vector<std::string> names = instance.vertex_names();
  names.push_back(fresh);
  const int new_destination = static_cast<int>(names.size()) - 1;

  std::vector<int> even(names.size());
  std::vector<int> odd(names.size());
  for (int v = 0; v < instance.vertex_count(); ++v) {
    if (report.dead[v]) {
      even[v] = odd[v] = new_destination;
    } else if (v == instance.destination()) {
      even[v] = odd[v] = v;
    } else {
      even[v] = instance.even(v);
      odd[v] = instance.odd(v);
    }
  }
  even[new_destination] = odd[new_destination] = new_destination;
  return Instance(std::move(names), std::move(even), std::move(odd),
                  instance.origin(), new_destination);
}

namespace {

constexpr std::uint64_t kCandidateGuard = 10'000'000;

// Candidate count (cap+1)^|E|, saturating above the guard.
std::uint64_t candidate_count(int num_edges, unsigned cap) {
  std::uint64_t total = 1;
  for (int i = 0; i < num_edges; ++i) {
    if (total > kCandidateGuard) return kCandidateGuard + 1;
    total *= cap + 1;
  }
  return total;
}

// Enumerates value vectors with a fixed first entry, appending every
// switching flow to out in lexicographic order.
void enumerate_with_prefix(const Instance& instance, unsigned cap,
                           unsigned first_value, std::vector<Flow>* out) {
  const int num_edges = instance.edge_count();
  std::vector<unsigned> vec(num_edges, 0);
  vec[0] = first_value;
  Flow candidate(instance);
  while (true) {
    for (int e = 0; e < num_edges; ++e) candidate.values[e] = vec[e];
    if (verify_switching_flow(instance, candidate).valid)
      out->push_back(candidate);
    int pos = num_edges - 1;
    while (pos >= 1 && vec[pos] == cap) vec[pos--] = 0;
    if (pos < 1) break;
    ++vec[pos];
  }
}

}  // namespace

std::vector<Flow> enumerate_switching_flows_serial(const Instance& instance,
                                                   unsigned cap) {
  if (candidate_count(instance.edge_count(), cap) > kCandidateGuard)
    throw EnumerationTooLarge("enumeration budget exceeded");
  std::vector<Flow> flows;
  for (unsigned v0 = 0; v0 <= cap; ++v0)
    enumerate_with_prefix(instance, cap, v0, &flows);
  return flows;
}

std::vector<Flow> enumerate_switching_flows(const Instance& instance,
                                            unsigned cap) {
  if (candidate_count(instance.edge_count(), cap) > kCandidateGuard)
    throw EnumerationTooLarge("enumeration budget exceeded");
  // Partitioned by the first (most significant) entry; concatenating the
  // partitions in order preserves the lexicographic output order.
  std::vector<std::vector<Flow>> partitions(cap + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int v0 = 0; v0 <= static_cast<int>(cap); ++v0)
    enumerate_with_prefix(instance, cap, static_cast<unsigned>(v0),
                          &partitions[v0]);
  std::vector<Flow> flows;
  for (auto& part : partitions)
    for (auto& f : part) flows.push_back(std::move(f));
  return flows;
}

MinimalityReport check_minimality(const Instance& instance, unsigned cap) {
  const Decision decision = decide(instance);
  if (!decision.terminated())
    throw std::invalid_argument("run does not terminate; no profile to check");
  const Flow profile = decision.profile();
  for (const BigInt& v : profile.values)
    if (v > cap)
      throw std::invalid_argument("cap below the maximum profile entry");

  MinimalityReport report;
  const std::vector<Flow> flows = enumerate_switching_flows(instance, cap);
  report.flows_checked = flows.size();
  const BigInt profile_total = profile.total();
  bool profile_seen = false;
  for (const Flow& flow : flows) {
    if (flow == profile) {
      profile_seen = true;
      continue;
    }
    if (!profile.dominated_by(flow)) {
      report.detail = "flow not dominating the profile found";
      return report;
    }
    if (flow.total() <= profile_total) {
      report.detail = "flow with total <= profile total found";
      return report;
    }
  }
  if (!profile_seen) {
    report.detail = "profile missing from the enumeration";
    return report;
  }
  report.confirmed = true;
  return report;
}

}  // namespace arrival
