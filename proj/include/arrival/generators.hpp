#pragma once

#include <cstdint>

#include "arrival/instance.hpp"

namespace arrival {

// Binary-counter family: vertices o, v1..vn, d. Each pass through o
// increments the n-bit counter held in the switch positions; the run
// terminates after the counter overflows, having traversed 3*2^n - 2
// edges with all switches back at even.
Instance gen_counter(int n);

// Fixed 4-vertex instance whose run visits w twice: it admits both the
// run profile and a strictly larger "fake" switching flow.
Instance gen_zigzag();

// 3-vertex instance whose origin has no path to the destination.
Instance gen_trap();

// Smallest legal instance: a single edge from origin to destination.
Instance gen_direct();

// Seeded random instance: vertices x0..x_{n-1}, origin x0, destination
// x_{n-1}. Successor targets are drawn with the 64-bit linear
// congruential generator
//   state <- state * 6364136223846793005 + 1442695040888963407
// seeded with `seed`; each draw takes bits 33..63 of the new state,
// reduced mod n. Draw order: even(x0), odd(x0), even(x1), ...
Instance gen_random(int n, std::uint64_t seed);

}  // namespace arrival
