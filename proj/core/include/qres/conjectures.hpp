#pragma once

// Displays of the ten open residue-product conjectures. Each conjecture id
// carries a sign parameter delta that selects between its paired displays:
//
//   7.1   (2i^2 + 5 delta ij + 2j^2 / p) over i < j
//   7.2   (i^2 + delta ij + j^2 / p) over i < j
//   7.3   (i^2 + 3 delta ij + j^2 / p) over i < j
//   7.4   (i^2 + 4 delta ij + j^2 / p) over i < j; residue companion T_p(1, 4 delta, 1)
//   7.5   (4i^2 + j^2 / p) over i <= j            (delta ignored)
//   7.6   (3i + delta j / p) over the half square
//   7.7   (4i + delta j / p)
//   7.8   (5i + delta j / p)
//   7.9   (6i + delta j / p)
//   7.10  (8i + delta j / p)
//
// conjecture_lhs() evaluates the left side by brute force, including any
// (-1)^{count} prefactor shown on that side; conjecture_rhs() evaluates the
// right side exactly as displayed, one arm per congruence class.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qres/closed_forms.hpp"
#include "qres/modular.hpp"
#include "qres/products.hpp"

namespace qres {

enum class Conjecture { c7_1, c7_2, c7_3, c7_4, c7_5, c7_6, c7_7, c7_8, c7_9, c7_10 };

inline constexpr std::array<Conjecture, 10> kAllConjectures = {
    Conjecture::c7_1, Conjecture::c7_2, Conjecture::c7_3, Conjecture::c7_4, Conjecture::c7_5,
    Conjecture::c7_6, Conjecture::c7_7, Conjecture::c7_8, Conjecture::c7_9, Conjecture::c7_10,
};

/// "7.1" .. "7.10" (a "conj" prefix is accepted). Throws UnknownItem.
[[nodiscard]] Conjecture parse_conjecture(std::string_view id);
[[nodiscard]] std::string_view conjecture_name(Conjecture c) noexcept;

/// Whether the conjecture's displays depend on delta.
[[nodiscard]] bool conjecture_uses_delta(Conjecture c) noexcept;

/// Smallest admissible prime (5, or 7 for 7.8).
[[nodiscard]] std::uint64_t conjecture_min_prime(Conjecture c) noexcept;

/// Brute-force left side. Throws DomainError below the admissible range.
[[nodiscard]] Sign conjecture_lhs(Conjecture c, Sign delta, const LegendreTable& table);

/// Displayed right side. Throws DomainError below the admissible range, or
/// when no arm of the display covers p (7.4 for p == 5, 11, 13, 23 mod 24).
[[nodiscard]] Sign conjecture_rhs(Conjecture c, Sign delta, const LegendreTable& table);
[[nodiscard]] Sign conjecture_rhs(Conjecture c, Sign delta, const OddPrime& p);

/// The residue companion of 7.4: T_p(1, 4 delta, 1) == -3^{(p-1)/4} for
/// p == 1 (mod 12). Throws DomainError otherwise.
[[nodiscard]] ClosedFormResult conjecture_residue_rhs(Sign delta, const OddPrime& p);

}  // namespace qres
