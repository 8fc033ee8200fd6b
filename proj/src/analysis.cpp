#include "arrival/analysis.hpp"

#include <deque>
#include <limits>

namespace arrival {

DeadEndReport analyze(const Instance& instance) {
  const int n = instance.vertex_count();
  std::vector<std::vector<int>> reverse_adj(n);
  for (const Edge& e : instance.edges()) reverse_adj[e.head].push_back(e.tail);

  constexpr int kUnreached = std::numeric_limits<int>::max();
  std::vector<int> dist(n, kUnreached);
  std::deque<int> queue;
  dist[instance.destination()] = 0;
  queue.push_back(instance.destination());
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : reverse_adj[v]) {
      if (dist[u] == kUnreached) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }

  DeadEndReport report;
  report.dead.resize(n);
  for (int v = 0; v < n; ++v) report.dead[v] = (dist[v] == kUnreached);
  report.desperation.resize(instance.edge_count());
  for (int e = 0; e < instance.edge_count(); ++e) {
    int head = instance.edge(e).head;
    report.desperation[e] = report.dead[head] ? -1 : dist[head];
  }
  return report;
}

}  // namespace arrival
