#pragma once

// Half-range counts behind the Gauss and Jenkins lemmas.
//
// All counts range over 1 <= k < n/2 and look at r_k = {kx}_n. Because
// gcd(x, n) = 1 and n is odd, r_k is never 0 and never equal to n/2, so the
// strict comparisons below never meet a tie.

#include <cstdint>
#include <vector>

#include "qres/modular.hpp"
#include "qres/record.hpp"

namespace qres {

enum class CountKind {
  above_half,     // {kx}_n > n/2
  exceeds_index,  // {kx}_n > k
  both_above,     // {kx}_n > n/2 and {k(1-x)}_n > n/2
  both_below,     // {kx}_n < n/2 and {k(1-x)}_n < n/2
  first_above_second_below,
  second_above_first_below,
};

enum class JointMode {
  both_above,
  both_below,
  first_above_second_below,
  second_above_first_below,
};

struct HalfRangeCount {
  std::uint64_t count = 0;
  std::int64_t x = 0;
  std::uint64_t n = 0;
  CountKind kind = CountKind::above_half;
};

/// |{1 <= k < n/2 : {kx}_n > n/2}|. Throws DomainError if gcd(x, n) != 1.
[[nodiscard]] HalfRangeCount count_above_half(std::int64_t x, const Modulus& n);

/// |{1 <= k < n/2 : {kx}_n > k}|. Throws DomainError if gcd(x, n) != 1.
[[nodiscard]] HalfRangeCount count_exceeds_index(std::int64_t x, const Modulus& n);

/// Joint count over the pair ({kx}_n, {k(1-x)}_n). Throws DomainError if
/// gcd(x(1-x), n) != 1.
[[nodiscard]] HalfRangeCount joint_count(std::int64_t x, const Modulus& n, JointMode mode);

/// All six counts from a single pass over k.
struct GaussCounts {
  std::uint64_t above_half = 0;
  std::uint64_t exceeds_index = 0;
  std::uint64_t both_above = 0;
  std::uint64_t both_below = 0;
  std::uint64_t first_above_second_below = 0;
  std::uint64_t second_above_first_below = 0;
};

/// Single-pass version of the counts. The joint counts are only meaningful
/// when gcd(1 - x, n) = 1 as well. Throws DomainError if gcd(x, n) != 1.
[[nodiscard]] GaussCounts gauss_counts(std::int64_t x, const Modulus& n);

/// Jenkins' identity and the four sign identities for (x, n), one record each
/// (item "thm1.1", params eq = 2..6 and x). The eq 3..6 records are only
/// produced when gcd(x(1-x), n) = 1. Throws DomainError if gcd(x, n) != 1.
[[nodiscard]] std::vector<VerificationRecord> verify_gauss_jenkins_identities(std::int64_t x,
                                                                              const Modulus& n);

/// The five (count-parity, symbol) pairs for (x, n), eq 2..6; used by both the
/// per-x records and the aggregated sweep path.
struct IdentitySides {
  int eq;
  Sign count_side;
  Sign symbol_side;
};
[[nodiscard]] std::vector<IdentitySides> gauss_jenkins_sides(std::int64_t x, const Modulus& n);

}  // namespace qres
