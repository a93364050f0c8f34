#pragma once

#include <cstdint>

#include "ladderlab/execution.hpp"

namespace ladderlab {

inline constexpr double kSieveLimit = 1e8;

// Number of primes <= T by a segmented sieve of Eratosthenes, 2 <= T <= 1e8.
std::uint64_t sieve_pi(double T, Execution execution = Execution::parallel);

}  // namespace ladderlab
