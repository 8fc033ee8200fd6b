#pragma once

#include <vector>

#include "arrival/instance.hpp"

namespace arrival {

// Dead-end classification of an instance. A dead end is a vertex with no
// directed path to the destination; an edge is dead iff its head is a
// dead end. A hopeful edge's desperation is the length of the shortest
// path from its head to the destination.
struct DeadEndReport {
  std::vector<bool> dead;         // per vertex
  std::vector<int> desperation;   // per edge; -1 for dead edges

  bool edge_is_dead(int e) const { return desperation[e] < 0; }
};

// Reverse breadth-first search from the destination; linear in |V|+|E|.
DeadEndReport analyze(const Instance& instance);

}  // namespace arrival
