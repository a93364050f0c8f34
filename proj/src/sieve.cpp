#include "ladderlab/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ladderlab/errors.hpp"
#include "parallel.hpp"

namespace ladderlab {

namespace {

constexpr std::uint64_t kSegment = 1u << 18;

std::vector<std::uint32_t> small_primes(std::uint64_t limit) {
  std::vector<char> composite(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return primes;
}

// Primes in [lo, hi).
std::uint64_t count_segment(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint32_t>& primes) {
  std::vector<char> composite(hi - lo, 0);
  for (std::uint32_t p : primes) {
    const std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
    if (pp >= hi) break;
    std::uint64_t start = std::max(pp, (lo + p - 1) / p * p);
    for (std::uint64_t j = start; j < hi; j += p) composite[j - lo] = 1;
  }
  std::uint64_t count = 0;
  for (std::uint64_t i = std::max<std::uint64_t>(lo, 2); i < hi; ++i) count += composite[i - lo] == 0;
  return count;
}

}  // namespace

std::uint64_t sieve_pi(double T, Execution execution) {
  if (!std::isfinite(T) || T < 2.0 || T > kSieveLimit) throw DomainError("sieve_pi: T must lie in [2, 1e8]");
  const std::uint64_t n = static_cast<std::uint64_t>(std::floor(T));
  const std::vector<std::uint32_t> primes = small_primes(static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n))) + 1);
  const long segments = static_cast<long>((n + kSegment) / kSegment);  // covers [0, n]
  std::vector<std::uint64_t> counts(segments, 0);
  auto run = [&](long s) {
    const std::uint64_t lo = static_cast<std::uint64_t>(s) * kSegment;
    const std::uint64_t hi = std::min(lo + kSegment, n + 1);
    counts[s] = count_segment(lo, hi, primes);
  };
  detail::for_each_index(segments, execution, run);
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  return total;
}

}  // namespace ladderlab
