#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "arrival/instance.hpp"

namespace arrival {

using BigRat = boost::multiprecision::cpp_rational;

// One linear constraint sum_i coeffs[i] * x_i (<=|==) rhs.
struct LinearConstraint {
  std::vector<BigRat> coeffs;
  BigRat rhs;
};

// Exact-rational relaxation of the switching-flow conditions: one
// conservation equality per vertex; per vertex with two distinct
// out-edges the balance block 0 <= x_odd, x_odd <= x_even,
// x_even <= x_odd + 1; per single-out-edge vertex one nonnegativity
// inequality. Variables are the instance's edges in edge order.
struct ConstraintSystem {
  int num_vars = 0;
  std::vector<LinearConstraint> equalities;
  std::vector<LinearConstraint> inequalities;
};

ConstraintSystem build_constraints(const Instance& instance);

// Candidate real-valued "switching flow", one exact rational per edge.
struct RationalPoint {
  std::vector<BigRat> values;

  static RationalPoint parse(const Instance& instance, std::string_view text);
  static RationalPoint from_json(const Instance& instance, const Json& doc);
  Json to_json(const Instance& instance) const;
  std::string serialize(const Instance& instance) const;
};

struct PointCheck {
  bool feasible = true;
  std::vector<std::string> violations;
};

// Exact evaluation, no tolerance. Throws on dimension mismatch.
PointCheck check_point(const ConstraintSystem& system, const RationalPoint& point);

struct Feasibility {
  bool feasible = false;
  std::optional<RationalPoint> witness;
};

// Fourier-Motzkin elimination over exact rationals; equalities enter as
// opposing inequality pairs. On feasibility a witness is recovered by
// back-substitution and always satisfies check_point. var_order, when
// given, is the elimination order (a permutation of the variables); the
// verdict does not depend on it. Throws InstanceTooLarge when the
// intermediate constraint count blows past the cap.
Feasibility feasible(const ConstraintSystem& system,
                     const std::vector<int>* var_order = nullptr,
                     std::size_t constraint_cap = 200'000);

// Search for an integrality-gap witness: an instance whose run cycles
// (no integral switching flow exists) while the rational relaxation is
// feasible.
struct GapWitness {
  Instance instance;
  RationalPoint point;

  Json to_json() const;
};

enum class GapMode { kExhaustive, kSeededRandom };

// Exhaustive mode scans the canonical family (vertices x0..x_{m-1},
// origin x0, destination x_{m-1}, all successor maps in lexicographic
// order) for m = 3..max_vertices and returns the first witness in that
// order. Random mode samples gen_random instances. budget caps the
// number of instances examined; exhausting it yields nullopt.
std::optional<GapWitness> gap_search(int max_vertices, GapMode mode,
                                     std::uint64_t budget,
                                     std::uint64_t seed = 0);

}  // namespace arrival
