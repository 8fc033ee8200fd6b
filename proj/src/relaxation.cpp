#include "arrival/relaxation.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "arrival/analysis.hpp"
#include "arrival/generators.hpp"
#include "arrival/run.hpp"

namespace arrival {

ConstraintSystem build_constraints(const Instance& instance) {
  const int num_edges = instance.edge_count();
  ConstraintSystem system;
  system.num_vars = num_edges;

  for (int v = 0; v < instance.vertex_count(); ++v) {
    LinearConstraint eq;
    eq.coeffs.assign(num_edges, BigRat(0));
    for (int e = 0; e < num_edges; ++e) {
      const Edge& edge = instance.edge(e);
      if (edge.tail == v) eq.coeffs[e] += 1;
      if (edge.head == v) eq.coeffs[e] -= 1;
    }
    eq.rhs = v == instance.origin() ? 1 : (v == instance.destination() ? -1 : 0);
    system.equalities.push_back(std::move(eq));

    auto make = [&](std::initializer_list<std::pair<int, int>> terms, int rhs) {
      LinearConstraint c;
      c.coeffs.assign(num_edges, BigRat(0));
      for (auto [e, coeff] : terms) c.coeffs[e] = coeff;
      c.rhs = rhs;
      return c;
    };
    const int even_edge = instance.edge_index(v, instance.even(v));
    if (instance.even(v) == instance.odd(v)) {
      system.inequalities.push_back(make({{even_edge, -1}}, 0));
    } else {
      const int odd_edge = instance.edge_index(v, instance.odd(v));
      system.inequalities.push_back(make({{odd_edge, -1}}, 0));
      system.inequalities.push_back(make({{odd_edge, 1}, {even_edge, -1}}, 0));
      system.inequalities.push_back(make({{even_edge, 1}, {odd_edge, -1}}, 1));
    }
  }
  return system;
}

namespace {

std::string rational_str(const BigRat& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) out += "/" + denominator(r).str();
  return out;
}

BigRat parse_rational(const std::string& text, const std::string& key) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return BigRat(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den <= 0) throw std::runtime_error("nonpositive denominator");
    return BigRat(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError("value for \"" + key + "\" is not a rational num/den");
  }
}

}  // namespace

RationalPoint RationalPoint::from_json(const Instance& instance, const Json& doc) {
  if (!doc.is_object() || !doc.contains("edges"))
    throw ParseError("point document must be an object with an \"edges\" key");
  RationalPoint point;
  point.values.assign(instance.edge_count(), BigRat(0));
  for (const auto& [key, value] : doc.at("edges").items()) {
    auto arrow = key.find("->");
    if (arrow == std::string::npos)
      throw ParseError("edge key \"" + key + "\" is not of the form tail->head");
    int tail = instance.vertex_index(key.substr(0, arrow));
    int head = instance.vertex_index(key.substr(arrow + 2));
    int e = (tail >= 0 && head >= 0) ? instance.edge_index(tail, head) : -1;
    if (e < 0) throw ParseError("point references non-edge \"" + key + "\"");
    if (!value.is_string())
      throw ParseError("value for \"" + key + "\" must be a num/den string");
    point.values[e] = parse_rational(value.get<std::string>(), key);
  }
  return point;
}

RationalPoint RationalPoint::parse(const Instance& instance, std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid document: ") + e.what());
  }
  return from_json(instance, doc);
}

Json RationalPoint::to_json(const Instance& instance) const {
  Json edges = Json::object();
  for (int e = 0; e < instance.edge_count(); ++e) {
    const Edge& edge = instance.edge(e);
    edges[instance.name(edge.tail) + "->" + instance.name(edge.head)] =
        rational_str(values[e]);
  }
  Json doc;
  doc["edges"] = std::move(edges);
  return doc;
}

std::string RationalPoint::serialize(const Instance& instance) const {
  return to_json(instance).dump(2) + "\n";
}

PointCheck check_point(const ConstraintSystem& system, const RationalPoint& point) {
  if (static_cast<int>(point.values.size()) != system.num_vars)
    throw std::invalid_argument("point dimension does not match the system");
  PointCheck result;
  auto evaluate = [&](const LinearConstraint& c) {
    BigRat lhs = 0;
    for (int i = 0; i < system.num_vars; ++i)
      if (c.coeffs[i] != 0) lhs += c.coeffs[i] * point.values[i];
    return lhs;
  };
  for (size_t i = 0; i < system.equalities.size(); ++i) {
    BigRat lhs = evaluate(system.equalities[i]);
    if (lhs != system.equalities[i].rhs) {
      result.feasible = false;
      result.violations.push_back("equality " + std::to_string(i) + ": " +
                                  rational_str(lhs) + " != " +
                                  rational_str(system.equalities[i].rhs));
    }
  }
  for (size_t i = 0; i < system.inequalities.size(); ++i) {
    BigRat lhs = evaluate(system.inequalities[i]);
    if (lhs > system.inequalities[i].rhs) {
      result.feasible = false;
      result.violations.push_back("inequality " + std::to_string(i) + ": " +
                                  rational_str(lhs) + " > " +
                                  rational_str(system.inequalities[i].rhs));
    }
  }
  return result;
}

namespace {

struct Ineq {
  std::vector<BigRat> coeffs;
  BigRat rhs;
  std::vector<int> history;  // ancestor inequality ids, sorted
};

// Scale so the first nonzero coefficient has absolute value one; dedup key.
void normalize(Ineq& c) {
  for (const BigRat& x : c.coeffs) {
    if (x != 0) {
      BigRat scale = x > 0 ? x : BigRat(-x);
      for (BigRat& y : c.coeffs) y /= scale;
      c.rhs /= scale;
      return;
    }
  }
}

bool all_zero(const Ineq& c) {
  return std::all_of(c.coeffs.begin(), c.coeffs.end(),
                     [](const BigRat& x) { return x == 0; });
}

// One eliminated variable: either pivoted out of an equality (the
// variable equals expr evaluated at the later variables) or removed from
// the inequalities by combining its upper and lower bounds.
struct EliminationStep {
  int var;
  bool from_equality = false;
  std::vector<BigRat> expr_coeffs;  // x_var = expr_rhs + sum coeffs * x
  BigRat expr_rhs;
  std::vector<Ineq> lower;  // negative coefficient on var
  std::vector<Ineq> upper;  // positive coefficient on var
};

}  // namespace

Feasibility feasible(const ConstraintSystem& system,
                     const std::vector<int>* var_order,
                     std::size_t constraint_cap) {
  std::vector<int> order;
  if (var_order) {
    order = *var_order;
  } else {
    order.resize(system.num_vars);
    for (int i = 0; i < system.num_vars; ++i) order[i] = i;
  }

  std::vector<Ineq> equalities;
  for (const LinearConstraint& c : system.equalities)
    equalities.push_back({c.coeffs, c.rhs});
  std::vector<Ineq> inequalities;
  for (const LinearConstraint& c : system.inequalities)
    inequalities.push_back(
        {c.coeffs, c.rhs, {static_cast<int>(inequalities.size())}});

  std::vector<EliminationStep> steps;
  int fm_steps = 0;
  for (int var : order) {
    EliminationStep step;
    step.var = var;

    auto pivot = std::find_if(equalities.begin(), equalities.end(),
                              [var](const Ineq& e) { return e.coeffs[var] != 0; });
    if (pivot != equalities.end()) {
      // Substitute x_var from the equality into everything else.
      step.from_equality = true;
      const BigRat c = pivot->coeffs[var];
      step.expr_coeffs.assign(system.num_vars, BigRat(0));
      for (int i = 0; i < system.num_vars; ++i)
        if (i != var) step.expr_coeffs[i] = -pivot->coeffs[i] / c;
      step.expr_rhs = pivot->rhs / c;
      equalities.erase(pivot);
      auto substitute = [&](Ineq& target) {
        const BigRat factor = target.coeffs[var];
        if (factor == 0) return;
        target.coeffs[var] = 0;
        for (int i = 0; i < system.num_vars; ++i)
          target.coeffs[i] += factor * step.expr_coeffs[i];
        target.rhs -= factor * step.expr_rhs;
      };
      for (Ineq& e : equalities) substitute(e);
      for (Ineq& c2 : inequalities) substitute(c2);
    } else {
      // No equality mentions the variable: Fourier-Motzkin combination.
      std::vector<Ineq> untouched;
      for (Ineq& c : inequalities) {
        if (c.coeffs[var] > 0)
          step.upper.push_back(std::move(c));
        else if (c.coeffs[var] < 0)
          step.lower.push_back(std::move(c));
        else
          untouched.push_back(std::move(c));
      }
      std::vector<Ineq> next = std::move(untouched);
      ++fm_steps;
      std::set<std::pair<std::vector<BigRat>, BigRat>> seen;
      for (const Ineq& up : step.upper) {
        for (const Ineq& lo : step.lower) {
          Ineq combined;
          combined.history.resize(up.history.size() + lo.history.size());
          combined.history.erase(
              std::set_union(up.history.begin(), up.history.end(),
                             lo.history.begin(), lo.history.end(),
                             combined.history.begin()),
              combined.history.end());
          // Imbert: a derived inequality combining more than k+1
          // ancestors after k eliminations is redundant.
          if (combined.history.size() > static_cast<std::size_t>(fm_steps) + 1)
            continue;
          combined.coeffs.resize(system.num_vars);
          const BigRat a = up.coeffs[var];
          const BigRat b = -lo.coeffs[var];
          for (int i = 0; i < system.num_vars; ++i)
            combined.coeffs[i] = up.coeffs[i] / a + lo.coeffs[i] / b;
          combined.rhs = up.rhs / a + lo.rhs / b;
          if (all_zero(combined)) {
            if (combined.rhs < 0) return {};  // contradiction, infeasible
            continue;
          }
          normalize(combined);
          if (seen.emplace(combined.coeffs, combined.rhs).second)
            next.push_back(std::move(combined));
          if (next.size() > constraint_cap)
            throw InstanceTooLarge("instance too large for exact elimination");
        }
      }
      inequalities = std::move(next);
    }
    steps.push_back(std::move(step));
  }

  for (const Ineq& e : equalities)
    if (e.rhs != 0) return {};  // 0 == rhs fails
  for (const Ineq& c : inequalities)
    if (c.rhs < 0) return {};  // 0 <= rhs fails

  // Back-substitution: walk the elimination in reverse. FM variables are
  // picked inside their (nonempty by construction) interval; equality
  // variables are forced.
  RationalPoint witness;
  witness.values.assign(system.num_vars, BigRat(0));
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->from_equality) {
      BigRat value = it->expr_rhs;
      for (int i = 0; i < system.num_vars; ++i)
        if (it->expr_coeffs[i] != 0) value += it->expr_coeffs[i] * witness.values[i];
      witness.values[it->var] = value;
      continue;
    }
    auto partial = [&](const Ineq& c) {
      BigRat sum = 0;
      for (int i = 0; i < system.num_vars; ++i)
        if (i != it->var && c.coeffs[i] != 0) sum += c.coeffs[i] * witness.values[i];
      return sum;
    };
    std::optional<BigRat> lo, hi;
    for (const Ineq& c : it->upper) {
      BigRat bound = (c.rhs - partial(c)) / c.coeffs[it->var];
      if (!hi || bound < *hi) hi = bound;
    }
    for (const Ineq& c : it->lower) {
      BigRat bound = (c.rhs - partial(c)) / c.coeffs[it->var];
      if (!lo || bound > *lo) lo = bound;
    }
    BigRat value = 0;
    if (lo && hi)
      value = (*lo + *hi) / 2;
    else if (lo)
      value = *lo;
    else if (hi)
      value = *hi < 0 ? *hi : BigRat(0);
    witness.values[it->var] = value;
  }

  Feasibility result;
  result.feasible = true;
  result.witness = std::move(witness);
  return result;
}

Json GapWitness::to_json() const {
  Json doc;
  doc["instance"] = instance.to_json();
  doc["point"] = point.to_json(instance);
  return doc;
}

namespace {

// Lightweight pre-screen for the exhaustive scan, on raw successor
// arrays: true iff the run cycles while the origin still has a path to
// the destination (a rational conservation flow needs an o->d path, by
// flow decomposition).
bool gap_candidate(int m, const int* even, const int* odd) {
  const int o = 0;
  const int d = m - 1;
  // reverse reachability to d
  unsigned reach = 1u << d;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int v = 0; v < m; ++v) {
      if (reach & (1u << v)) continue;
      if ((reach >> even[v]) & 1 || (reach >> odd[v]) & 1) {
        reach |= 1u << v;
        grew = true;
      }
    }
  }
  if (!((reach >> o) & 1)) return false;  // origin dead: relaxation infeasible
  // simulate with dead-end cut
  unsigned parity = 0;
  int v = o;
  while (v != d) {
    const int w = (parity >> v) & 1 ? odd[v] : even[v];
    parity ^= 1u << v;
    v = w;
    if (!((reach >> v) & 1)) return true;  // cycles, origin hopeful
  }
  return false;  // terminates: relaxation trivially feasible, no gap
}

Instance decode_canonical(int m, std::uint64_t code) {
  std::vector<int> digits(2 * m);
  for (int i = 2 * m - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(code % m);
    code /= m;
  }
  std::vector<std::string> names;
  std::vector<int> even(m), odd(m);
  for (int v = 0; v < m; ++v) {
    names.push_back("x" + std::to_string(v));
    even[v] = digits[2 * v];
    odd[v] = digits[2 * v + 1];
  }
  return Instance(std::move(names), std::move(even), std::move(odd), 0, m - 1);
}

// Full check on one candidate; fills *witness on success.
bool gap_check(const Instance& instance, RationalPoint* witness) {
  if (decide(instance).terminated()) return false;
  Feasibility f = feasible(build_constraints(instance));
  if (!f.feasible) return false;
  *witness = std::move(*f.witness);
  return true;
}

std::optional<GapWitness> gap_search_exhaustive(int max_vertices,
                                                std::uint64_t budget) {
  std::uint64_t examined = 0;
  for (int m = 2; m <= max_vertices; ++m) {
    std::uint64_t total = 1;
    for (int i = 0; i < 2 * m; ++i) total *= static_cast<std::uint64_t>(m);
    constexpr std::uint64_t kChunk = 1u << 16;
    for (std::uint64_t chunk = 0; chunk < total; chunk += kChunk) {
      if (examined >= budget) return std::nullopt;
      const std::uint64_t end =
          std::min({chunk + kChunk, total, chunk + (budget - examined)});
      examined += end - chunk;
      std::uint64_t first_hit = UINT64_MAX;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256) reduction(min : first_hit)
#endif
      for (std::int64_t code = static_cast<std::int64_t>(chunk);
           code < static_cast<std::int64_t>(end); ++code) {
        int even[32];
        int odd[32];
        std::uint64_t c = static_cast<std::uint64_t>(code);
        for (int v = m - 1; v >= 0; --v) {
          odd[v] = static_cast<int>(c % m);
          c /= m;
          even[v] = static_cast<int>(c % m);
          c /= m;
        }
        if (!gap_candidate(m, even, odd)) continue;
        Instance instance = decode_canonical(m, static_cast<std::uint64_t>(code));
        RationalPoint point;
        if (gap_check(instance, &point))
          first_hit = std::min(first_hit, static_cast<std::uint64_t>(code));
      }
      if (first_hit != UINT64_MAX) {
        Instance instance = decode_canonical(m, first_hit);
        RationalPoint point;
        gap_check(instance, &point);
        return GapWitness{std::move(instance), std::move(point)};
      }
    }
  }
  return std::nullopt;
}

std::optional<GapWitness> gap_search_random(int max_vertices,
                                            std::uint64_t budget,
                                            std::uint64_t seed) {
  std::uint64_t state = seed;
  auto next = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  for (std::uint64_t trial = 0; trial < budget; ++trial) {
    const int n = 3 + static_cast<int>(next() % (max_vertices - 2));
    const std::uint64_t instance_seed = next();
    Instance instance = gen_random(n, instance_seed);
    RationalPoint point;
    if (gap_check(instance, &point))
      return GapWitness{std::move(instance), std::move(point)};
  }
  return std::nullopt;
}

}  // namespace

std::optional<GapWitness> gap_search(int max_vertices, GapMode mode,
                                     std::uint64_t budget, std::uint64_t seed) {
  if (max_vertices < 2)
    throw std::invalid_argument("gap search needs max_vertices >= 2");
  if (mode == GapMode::kExhaustive)
    return gap_search_exhaustive(max_vertices, budget);
  if (max_vertices < 3)
    throw std::invalid_argument("random gap search needs max_vertices >= 3");
  return gap_search_random(max_vertices, budget, seed);
}

}  // namespace arrival
