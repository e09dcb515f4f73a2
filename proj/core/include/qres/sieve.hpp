#pragma once

#include <cstdint>
#include <vector>

namespace qres {

/// All primes in [lo, hi), ascending, by a segmented sieve of Eratosthenes.
/// Throws DomainError unless 2 <= lo < hi <= 2^31.
[[nodiscard]] std::vector<std::uint64_t> sieve_primes(std::uint64_t lo, std::uint64_t hi);

}  // namespace qres
