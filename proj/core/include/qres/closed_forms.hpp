#pragma once

// Closed-form values of the residue products, one dispatch arm per congruence
// class. Each function returns the value mod p together with the label of the
// branch that fired, so callers can check case coverage.

#include <array>
#include <optional>
#include <string_view>

#include "qres/modular.hpp"
#include "qres/products.hpp"

namespace qres {

struct ClosedFormResult {
  Residue value;
  std::string_view label;
  /// Set only when the literal product definition and the closed form
  /// disagree by convention (p | a, b, c: empty product 1 vs stated 0).
  std::optional<Residue> convention_value;
};

namespace s_case {
inline constexpr std::string_view kDiscZero = "p|disc";
inline constexpr std::string_view kDiscNonzero = "p!|disc";
inline constexpr std::string_view kAllZero = "degenerate-all-zero";
inline constexpr std::string_view kOnlyA = "p!|a,p|b,p|c";
inline constexpr std::string_view kOnlyB = "p|a,p!|b,p|c";
inline constexpr std::string_view kOnlyC = "p|a,p|b,p!|c";
inline constexpr std::string_view kAZeroBcOpposite = "p|a,p!|bc,p|b+c";
inline constexpr std::string_view kCZeroAbOpposite = "p!|ab,p|a+b,p|c";
inline constexpr std::string_view kAEqualsC = "p!|ac,p|a-c,p|a+b+c";
inline constexpr std::string_view kSumZero = "p!|ac(a-c),p|a+b+c";
inline constexpr std::string_view kCZero = "p!|ab(a+b),p|c";
inline constexpr std::string_view kAZero = "p|a,p!|bc(b+c)";
}  // namespace s_case

/// The ten branches taken when p | ac(a+b+c), in table order.
inline constexpr std::array<std::string_view, 10> kDivisibleCaseLabels = {
    s_case::kAllZero,         s_case::kOnlyA,          s_case::kOnlyB,     s_case::kOnlyC,
    s_case::kAZeroBcOpposite, s_case::kCZeroAbOpposite, s_case::kAEqualsC, s_case::kSumZero,
    s_case::kCZero,           s_case::kAZero,
};

/// S_p(a, b, c) mod p. In the all-divisible case the stated value 0 is
/// returned with convention_value = 1 (the empty product). Throws
/// CaseFallthrough if no branch matches.
[[nodiscard]] ClosedFormResult closed_S(const QuadraticForm& f, const OddPrime& p);

/// {a, b}_p mod p for ab == -1 (mod p). Throws DomainError otherwise.
[[nodiscard]] ClosedFormResult closed_braces(std::int64_t a, std::int64_t b, const OddPrime& p);

/// T_p(1, -A, -1) mod p, dispatched on ((A^2 + 4)/p).
[[nodiscard]] ClosedFormResult closed_T_general(std::int64_t A, const OddPrime& p);

/// T_p(1, -1, -1) by p mod 20. Throws DomainError for p = 5.
[[nodiscard]] ClosedFormResult closed_T_fibonacci(const OddPrime& p);

/// T_p(1, -2, -1) by p mod 8.
[[nodiscard]] ClosedFormResult closed_T_pell(const OddPrime& p);

/// T_p(2, 5 delta, 2). Throws DomainError for p <= 3 or delta = 0.
[[nodiscard]] ClosedFormResult closed_T_form252(Sign delta, const OddPrime& p);

/// prod_{1 <= i < j <= (p-1)/2} ((j + delta i)/p). Throws DomainError for p <= 3.
[[nodiscard]] Sign closed_triangle_linear(Sign delta, const LegendreTable& table);
[[nodiscard]] Sign closed_triangle_linear(Sign delta, const OddPrime& p);

}  // namespace qres
