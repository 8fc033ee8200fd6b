#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace arrival {

using BigInt = boost::multiprecision::cpp_int;
using Json = nlohmann::ordered_json;

// Thrown on malformed instance or flow documents. The offending key is
// part of the message.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Directed edge, identified by (tail, head). Vertices are indices into
// the instance's vertex list. Parallel successor slots with equal heads
// collapse to one edge.
struct Edge {
  int tail = -1;
  int head = -1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// A switch graph with origin and destination. Every vertex has an even
// and an odd successor (possibly equal). Immutable after construction.
class Instance {
 public:
  // Validates totality of the successor maps, declared targets, and
  // origin != destination. Throws ParseError with the offending key.
  Instance(std::vector<std::string> names, std::vector<int> even,
           std::vector<int> odd, int origin, int destination);

  static Instance parse(std::string_view text);
  static Instance from_json(const Json& doc);
  Json to_json() const;
  std::string serialize() const;

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(int v) const { return names_[v]; }
  int even(int v) const { return even_[v]; }
  int odd(int v) const { return odd_[v]; }
  int origin() const { return origin_; }
  int destination() const { return destination_; }

  // Edges in deterministic order: vertices in declaration order, the
  // even edge before the odd one when they differ.
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const { return edges_[e]; }

  // Index of edge (tail, head), or -1 if no such edge.
  int edge_index(int tail, int head) const;

  // Index of a declared vertex name, or -1.
  int vertex_index(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> even_;
  std::vector<int> odd_;
  int origin_;
  int destination_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, int> name_index_;
  std::vector<std::vector<std::pair<int, int>>> out_edges_;  // (head, edge idx)
};

// DOT digraph text. Solid edges point to even or unique successors,
// dashed edges to odd successors; origin and destination are marked.
std::string export_dot(const Instance& instance);

}  // namespace arrival
