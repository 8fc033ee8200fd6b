// Benchmarks the OpenMP kernels against their serial references:
// switching-flow enumeration and batched random-instance decisions.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "arrival/certificates.hpp"
#include "arrival/generators.hpp"
#include "arrival/run.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void bench_enumeration() {
  const arrival::Instance instance = arrival::gen_counter(2);
  const unsigned cap = 12;  // 6 edges, 13^6 ~ 4.8M candidates
  auto t0 = std::chrono::steady_clock::now();
  auto serial = arrival::enumerate_switching_flows_serial(instance, cap);
  const double serial_time = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  auto parallel = arrival::enumerate_switching_flows(instance, cap);
  const double parallel_time = seconds_since(t0);
  std::printf("enumerate counter(2) cap=%u: serial %.3fs, parallel %.3fs, "
              "flows=%zu, identical=%s\n",
              cap, serial_time, parallel_time, parallel.size(),
              serial == parallel ? "yes" : "NO");
}

void bench_fuzz_batch() {
  constexpr int kVertices = 8;
  constexpr std::int64_t kCount = 20000;
  auto decide_one = [](std::uint64_t seed) {
    return arrival::decide(arrival::gen_random(kVertices, seed)).terminated();
  };
  auto t0 = std::chrono::steady_clock::now();
  std::uint64_t yes_serial = 0;
  for (std::int64_t i = 0; i < kCount; ++i)
    yes_serial += decide_one(static_cast<std::uint64_t>(i));
  const double serial_time = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  std::uint64_t yes_parallel = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : yes_parallel)
#endif
  for (std::int64_t i = 0; i < kCount; ++i)
    yes_parallel += decide_one(static_cast<std::uint64_t>(i));
  const double parallel_time = seconds_since(t0);
  std::printf("decide batch n=%d count=%lld: serial %.3fs, parallel %.3fs, "
              "identical=%s\n",
              kVertices, static_cast<long long>(kCount), serial_time,
              parallel_time, yes_serial == yes_parallel ? "yes" : "NO");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; parallel kernels run serially\n");
#endif
  bench_enumeration();
  bench_fuzz_batch();
  return 0;
}
