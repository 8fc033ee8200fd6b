#include "arrival/generators.hpp"

namespace arrival {

Instance gen_counter(int n) {
  if (n < 1 || n > 62)
    throw std::invalid_argument("counter width must be between 1 and 62");
  std::vector<std::string> names;
  names.push_back("o");
  for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  names.push_back("d");
  const int o = 0;
  const int d = n + 1;
  std::vector<int> even(n + 2), odd(n + 2);
  even[o] = odd[o] = 1;
  for (int i = 1; i <= n; ++i) {
    even[i] = o;                    // no carry: back to o for the next tick
    odd[i] = i < n ? i + 1 : d;     // carry into the next bit, or overflow
  }
  even[d] = odd[d] = d;
  return Instance(std::move(names), std::move(even), std::move(odd), o, d);
}

Instance gen_zigzag() {
  // o -> w; w alternates between u (even) and d (odd); u returns to w.
  return Instance({"o", "w", "u", "d"}, {1, 2, 1, 3}, {1, 3, 1, 3}, 0, 3);
}

Instance gen_trap() {
  return Instance({"o", "t", "d"}, {1, 1, 2}, {1, 1, 2}, 0, 2);
}

Instance gen_direct() {
  return Instance({"o", "d"}, {1, 1}, {1, 1}, 0, 1);
}

Instance gen_random(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random instance needs n >= 2");
  std::uint64_t state = seed;
  auto draw = [&state, n]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<int>((state >> 33) % static_cast<std::uint64_t>(n));
  };
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) names.push_back("x" + std::to_string(v));
  std::vector<int> even(n), odd(n);
  for (int v = 0; v < n; ++v) {
    even[v] = draw();
    odd[v] = draw();
  }
  return Instance(std::move(names), std::move(even), std::move(odd), 0, n - 1);
}

}  // namespace arrival
