#pragma once

// Lucas sequences u_n(A), v_n(A) reduced mod p:
//   u_0 = 0, u_1 = 1, v_0 = 2, v_1 = A, w_{n+1} = A w_n + w_{n-1}.
// With D = A^2 + 4 every pair satisfies v_n^2 - D u_n^2 = 4 (-1)^n.

#include <cstdint>
#include <vector>

#include "qres/modular.hpp"
#include "qres/record.hpp"

namespace qres {

struct LucasPair {
  std::int64_t A = 0;
  std::uint64_t n = 0;
  Residue u;
  Residue v;
};

/// (u_n(A), v_n(A)) mod p by fast doubling, O(log n).
[[nodiscard]] LucasPair lucas_pair_mod(std::int64_t A, std::uint64_t n, const OddPrime& p);

/// Entry-point facts for D = A^2 + 4 with p not dividing D, two records
/// (item "lem4.1"):
///   part 1: u_{p - (D/p)}(A) == 0 (mod p)               (lhs = u, rhs = 0)
///   part 2: p | v_{(p - (D/p))/2}(A)  <=>  (-1/p) = -1  (lhs, rhs as 0/1)
/// Throws DomainError if p | A^2 + 4.
[[nodiscard]] std::vector<VerificationRecord> entry_point_checks(std::int64_t A, const OddPrime& p);

/// The measured sign e with
///   u_{(p + (D/p))/2} == e D^{(p-1)/4}       when p == 1 (mod 4),
///   u_{(p - (D/p))/2} == e 2 D^{(p-3)/4}     when p == 3 (mod 4).
/// Throws DomainError if p | D and Inconsistent if neither sign fits.
[[nodiscard]] Sign half_index_sign(std::int64_t A, const OddPrime& p);

}  // namespace qres
