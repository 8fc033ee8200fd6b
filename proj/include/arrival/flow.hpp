#pragma once

#include <vector>

#include "arrival/instance.hpp"

namespace arrival {

// Nonnegative integer value per edge, indexed like Instance::edges().
// Run profiles and switching-flow certificates are both Flows. Values
// are arbitrary precision; documents render them as decimal strings.
struct Flow {
  std::vector<BigInt> values;

  explicit Flow(const Instance& instance)
      : values(instance.edge_count(), BigInt(0)) {}
  Flow() = default;

  BigInt total() const {
    BigInt sum = 0;
    for (const BigInt& v : values) sum += v;
    return sum;
  }

  // Componentwise comparison; true iff *this <= other everywhere.
  bool dominated_by(const Flow& other) const {
    if (values.size() != other.values.size()) return false;
    for (size_t i = 0; i < values.size(); ++i)
      if (values[i] > other.values[i]) return false;
    return true;
  }

  friend bool operator==(const Flow&, const Flow&) = default;

  // Flow document: {"edges": {"tail->head": "<decimal>"}}. Entries for
  // edges not in the instance throw ParseError (malformed input, not an
  // invalid certificate). Absent edges default to 0.
  static Flow parse(const Instance& instance, std::string_view text);
  static Flow from_json(const Instance& instance, const Json& doc);
  Json to_json(const Instance& instance) const;
  std::string serialize(const Instance& instance) const;
};

}  // namespace arrival
