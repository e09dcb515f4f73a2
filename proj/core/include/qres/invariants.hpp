#pragma once

// Class numbers of Q(sqrt(-4p)), Q(sqrt(-3p)), Q(sqrt(-p)) from character
// sums, the normalized two-square decomposition of p == 1 (mod 4), and the
// classical quartic-residue congruences built on it.

#include <cstdint>
#include <vector>

#include "qres/modular.hpp"
#include "qres/products.hpp"
#include "qres/record.hpp"

namespace qres {

struct ClassNumber {
  std::int64_t discriminant = 0;
  std::uint64_t h = 0;
};

/// p = x^2 + y^2 with x == 1 (mod 4) and y == ((p-1)/2)! x (mod p).
struct TwoSquares {
  std::uint64_t p = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const TwoSquares&, const TwoSquares&) = default;
};

/// h(-4p) = (p-1)/2 - 4 |{1 <= k < p/4 : (k/p) = -1}|, p == 1 (mod 4).
[[nodiscard]] ClassNumber h_minus_4p(const OddPrime& p);
[[nodiscard]] ClassNumber h_minus_4p(const LegendreTable& table);

/// h(-3p) = 2 sum_{1 <= k < p/3} (k/p), p == 1 (mod 4).
[[nodiscard]] ClassNumber h_minus_3p(const OddPrime& p);
[[nodiscard]] ClassNumber h_minus_3p(const LegendreTable& table);

/// s with ((p-1)/2)! == s (mod p), for p == 3 (mod 4), p > 3.
[[nodiscard]] Sign mordell_sign(const OddPrime& p);

/// h(-p) = (sum_{k <= (p-1)/2} (k/p)) / (2 - (2/p)), for p == 3 (mod 4), p > 3.
/// Throws IntegrityError if the division is not exact.
[[nodiscard]] ClassNumber h_minus_p(const OddPrime& p);
[[nodiscard]] ClassNumber h_minus_p(const LegendreTable& table);

/// Throws DomainError unless p == 1 (mod 4).
[[nodiscard]] TwoSquares two_square_decomposition(const OddPrime& p);

/// One record per classical congruence for p == 1 (mod 4):
///   bg.dirichlet2   2 is a quartic residue  <=>  8 | y
///   bg.burde        #{k < p/4 : (k/p) = 1} even  <=>  y == (-1)^{(p-1)/4} - 1 (mod 8)
///   bg.williams     2^{(p-1)/4} against the count of non-residues below p/4
///   bg.gauss        C((p-1)/2, (p-1)/4) == 2x (mod p)
///   bg.cde          C((p-1)/2, (p-1)/4) == (2^{p-1}+1)/2 (2x - p/(2x)) (mod p^2)
///   bg.lerch        (-3)^{(p-1)/4} against h(-3p)   (p > 3)
/// Biconditionals are recorded as 0/1 on each side. A false record is a
/// counterexample, not an exception. Throws DomainError unless p == 1 (mod 4).
[[nodiscard]] std::vector<VerificationRecord> background_checks(const OddPrime& p);
[[nodiscard]] std::vector<VerificationRecord> background_checks(const LegendreTable& table);

}  // namespace qres
