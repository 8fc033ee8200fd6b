#include "doctest.h"

#include <algorithm>

#include "arrival/certificates.hpp"
#include "arrival/generators.hpp"
#include "arrival/relaxation.hpp"
#include "arrival/run.hpp"

using namespace arrival;

namespace {

RationalPoint point_from(const Instance& inst,
                         std::initializer_list<std::pair<const char*, BigRat>> entries) {
  RationalPoint point;
  point.values.assign(inst.edge_count(), BigRat(0));
  for (auto& [key, value] : entries) {
    std::string k(key);
    auto arrow = k.find("->");
    int e = inst.edge_index(inst.vertex_index(k.substr(0, arrow)),
                            inst.vertex_index(k.substr(arrow + 2)));
    REQUIRE(e >= 0);
    point.values[e] = value;
  }
  return point;
}

RationalPoint lift(const Flow& flow) {
  RationalPoint point;
  for (const BigInt& v : flow.values) point.values.emplace_back(v);
  return point;
}

}  // namespace

TEST_CASE("constraint counts per instance structure") {
  SUBCASE("direct: two single-out vertices") {
    ConstraintSystem sys = build_constraints(gen_direct());
    CHECK(sys.num_vars == 2);
    CHECK(sys.equalities.size() == 2);
    CHECK(sys.inequalities.size() == 2);
  }
  SUBCASE("zigzag: only w carries a balance block") {
    ConstraintSystem sys = build_constraints(gen_zigzag());
    CHECK(sys.equalities.size() == 4);
    CHECK(sys.inequalities.size() == 3 + 3);
  }
  SUBCASE("counter(2): balance blocks at v1 and v2") {
    ConstraintSystem sys = build_constraints(gen_counter(2));
    CHECK(sys.equalities.size() == 4);
    CHECK(sys.inequalities.size() == 2 * 3 + 2);
  }
}

TEST_CASE("exact point checking") {
  SUBCASE("direct profile is feasible") {
    Instance inst = gen_direct();
    ConstraintSystem sys = build_constraints(inst);
    CHECK(check_point(sys, point_from(inst, {{"o->d", 1}, {"d->d", 0}})).feasible);
  }
  SUBCASE("half-integral zigzag point violates balance at w") {
    Instance inst = gen_zigzag();
    ConstraintSystem sys = build_constraints(inst);
    PointCheck result = check_point(
        sys, point_from(inst, {{"o->w", 1},
                               {"w->u", BigRat(1, 2)},
                               {"u->w", BigRat(1, 2)},
                               {"w->d", 1}}));
    CHECK_FALSE(result.feasible);
    CHECK(result.violations.size() == 1);  // x_even < x_odd at w
  }
  SUBCASE("trap point with positive o->t flow is infeasible") {
    Instance inst = gen_trap();
    ConstraintSystem sys = build_constraints(inst);
    CHECK_FALSE(check_point(sys, point_from(inst, {{"o->t", 1}})).feasible);
  }
  SUBCASE("dimension mismatch") {
    ConstraintSystem sys = build_constraints(gen_direct());
    RationalPoint wrong;
    wrong.values = {BigRat(1)};
    CHECK_THROWS_AS(check_point(sys, wrong), std::invalid_argument);
  }
}

TEST_CASE("rational point documents round-trip") {
  Instance inst = gen_zigzag();
  RationalPoint point = point_from(
      inst, {{"o->w", 1}, {"w->u", BigRat(1, 2)}, {"u->w", BigRat(1, 2)}, {"w->d", 1}});
  RationalPoint reparsed = RationalPoint::parse(inst, point.serialize(inst));
  CHECK(reparsed.values == point.values);
  CHECK_THROWS_AS(RationalPoint::parse(inst, R"({"edges": {"d->o": "1/2"}})"),
                  ParseError);
}

TEST_CASE("elimination decides the named instances") {
  SUBCASE("direct is feasible with a valid witness") {
    ConstraintSystem sys = build_constraints(gen_direct());
    Feasibility result = feasible(sys);
    REQUIRE(result.feasible);
    CHECK(check_point(sys, *result.witness).feasible);
  }
  SUBCASE("trap is infeasible") {
    CHECK_FALSE(feasible(build_constraints(gen_trap())).feasible);
  }
  SUBCASE("zigzag is feasible") {
    ConstraintSystem sys = build_constraints(gen_zigzag());
    Feasibility result = feasible(sys);
    REQUIRE(result.feasible);
    CHECK(check_point(sys, *result.witness).feasible);
  }
}

TEST_CASE("verdict does not depend on the elimination order") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Instance inst = gen_random(2 + static_cast<int>(seed % 5), seed);
    ConstraintSystem sys = build_constraints(inst);
    std::vector<int> reversed(sys.num_vars);
    for (int i = 0; i < sys.num_vars; ++i) reversed[i] = sys.num_vars - 1 - i;
    Feasibility forward = feasible(sys);
    Feasibility backward = feasible(sys, &reversed);
    CHECK(forward.feasible == backward.feasible);
    if (forward.feasible) {
      CHECK(check_point(sys, *forward.witness).feasible);
      CHECK(check_point(sys, *backward.witness).feasible);
    }
  }
}

TEST_CASE("relaxation is sound and one-way") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Instance inst = gen_random(2 + static_cast<int>(seed % 6), seed + 31);
    ConstraintSystem sys = build_constraints(inst);
    Decision d = decide(inst);
    Feasibility relaxed = feasible(sys);
    if (d.terminated()) {
      // the run profile is an integral witness, so the relaxation holds
      CHECK(relaxed.feasible);
      CHECK(check_point(sys, lift(d.profile())).feasible);
    } else if (!relaxed.feasible) {
      // INFEASIBLE must imply no integral switching flow at any cap
      if (inst.edge_count() <= 8)
        CHECK(enumerate_switching_flows(inst, 3).empty());
    }
    // integral flows always lift to feasible rational points
    if (inst.edge_count() <= 8)
      for (const Flow& f : enumerate_switching_flows(inst, 2))
        CHECK(check_point(sys, lift(f)).feasible);
  }
}

TEST_CASE("gap search: nothing below five vertices") {
  CHECK_FALSE(gap_search(2, GapMode::kExhaustive, 1'000'000).has_value());
  CHECK_FALSE(gap_search(4, GapMode::kExhaustive, 1'000'000).has_value());
}

TEST_CASE("gap search respects its budget") {
  CHECK_FALSE(gap_search(8, GapMode::kExhaustive, 10).has_value());
}

TEST_CASE("random-mode gap search is deterministic") {
  auto a = gap_search(6, GapMode::kSeededRandom, 2000, 7);
  auto b = gap_search(6, GapMode::kSeededRandom, 2000, 7);
  CHECK(a.has_value() == b.has_value());
  if (a) {
    CHECK(a->instance.serialize() == b->instance.serialize());
    ConstraintSystem sys = build_constraints(a->instance);
    CHECK(check_point(sys, a->point).feasible);
    CHECK_FALSE(decide(a->instance).terminated());
  }
}
