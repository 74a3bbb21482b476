#pragma once

#include <cstdint>
#include <vector>

#include "azkit/exactnum.hpp"

namespace azkit {

/// Deterministic Miller-Rabin primality test with the fixed witness set
/// {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}, which is exact for all
/// n < 3.3e24 (in particular for the whole uint64 range).
bool is_prime(const BigInt& n);
bool is_prime(std::uint64_t n);

/// All primes in [lo, hi], ascending. Sieve of Eratosthenes over the range,
/// followed by a Miller-Rabin confirmation of every candidate. An empty
/// range yields an empty list. Throws std::invalid_argument when hi is
/// large enough that the sieve would not fit in memory.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

}  // namespace azkit
