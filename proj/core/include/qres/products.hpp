#pragma once

// Brute-force O(p^2) evaluation of the residue products. These loops are the
// oracles the closed forms are checked against, so they stay literal: every
// factor is formed and reduced, factors divisible by p are skipped, and an
// empty product is 1.

#include <cstdint>
#include <span>
#include <vector>

#include "qres/modular.hpp"

namespace qres {

struct QuadraticForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  [[nodiscard]] constexpr std::int64_t discriminant() const noexcept { return b * b - 4 * a * c; }
  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

struct ProductValue {
  Residue value;
  /// Index pairs whose factor was divisible by p.
  std::uint64_t skipped = 0;
  /// All index pairs in the range, skipped ones included.
  std::uint64_t total = 0;
};

/// (k/p) for every k in [0, p), built once per prime by marking squares.
class LegendreTable {
 public:
  explicit LegendreTable(const OddPrime& p);

  [[nodiscard]] const OddPrime& prime() const noexcept { return p_; }
  [[nodiscard]] Sign operator[](std::uint64_t k) const noexcept { return Sign(symbols_[k]); }
  [[nodiscard]] std::span<const std::int8_t> raw() const noexcept { return symbols_; }

 private:
  OddPrime p_;
  std::vector<std::int8_t> symbols_;
};

enum class TriangleRange {
  strict_upper,         // 1 <= i < j <= (p-1)/2
  upper_with_diagonal,  // 1 <= i <= j <= (p-1)/2
};

enum class LinearRange {
  full_square,   // 1 <= i, j <= (p-1)/2
  strict_upper,  // 1 <= i < j <= (p-1)/2
};

enum class BackgroundProduct {
  squares_diff_triangular,  // prod_{i<j} (j^2 - i^2)
  squares_diff_full,        // prod_{i,j} (i^2 - j^2)
  sum_squares_triangular,   // prod_{i<j} (i^2 + j^2)
};

/// prod over 1 <= i < j <= p-1 of a i^2 + b ij + c j^2.
[[nodiscard]] ProductValue product_S(const QuadraticForm& f, const OddPrime& p);

/// prod over 1 <= i, j <= (p-1)/2 of a i^2 + b ij + c j^2.
[[nodiscard]] ProductValue product_T(const QuadraticForm& f, const OddPrime& p);

/// prod over 1 <= i, j <= (p-1)/2 with i != aj, bj (mod p) of (i - aj)(i - bj).
/// Throws DomainError unless ab == -1 (mod p).
[[nodiscard]] ProductValue product_braces(std::int64_t a, std::int64_t b, const OddPrime& p);

/// A = ((p-1)/2)!! prod (2i + j) and B = ((p-3)/2)!! prod (2i - j) over the
/// half square, factors divisible by p skipped. Both are +/-1 and A == (-2/p) B.
struct DoubleFactorialProducts {
  Residue plus;
  Residue minus;
};
/// Throws DomainError for p <= 3.
[[nodiscard]] DoubleFactorialProducts double_factorial_products(const OddPrime& p);

/// prod of (f(i, j)/p) over the triangle, skipping p | f(i, j).
[[nodiscard]] Sign symbol_product_quadratic(const QuadraticForm& f, const LegendreTable& table,
                                            TriangleRange range);
[[nodiscard]] Sign symbol_product_quadratic(const QuadraticForm& f, const OddPrime& p, TriangleRange range);

/// prod of ((r i + s j)/p) over the range, skipping p | r i + s j.
[[nodiscard]] Sign symbol_product_linear(std::int64_t r, std::int64_t s, const LegendreTable& table,
                                         LinearRange range);
[[nodiscard]] Sign symbol_product_linear(std::int64_t r, std::int64_t s, const OddPrime& p,
                                         LinearRange range);

/// Throws DomainError for p < 5.
[[nodiscard]] ProductValue product_background(const OddPrime& p, BackgroundProduct which);

/// |{k in [lo, hi] : (k/p) = sign}|. Throws DomainError unless 1 <= lo <= hi < p
/// and sign is +1 or -1.
[[nodiscard]] std::uint64_t qr_count_interval(const LegendreTable& table, std::int64_t lo, std::int64_t hi,
                                              Sign sign);
[[nodiscard]] std::uint64_t qr_count_interval(const OddPrime& p, std::int64_t lo, std::int64_t hi, Sign sign);

/// Like qr_count_interval, but an empty interval (hi < lo) counts 0; the
/// interval is clipped to [1, p-1].
[[nodiscard]] std::uint64_t qr_count_range(const LegendreTable& table, std::int64_t lo, std::int64_t hi,
                                           Sign sign);

/// |{1 <= k < p * num / den : (k/p) = sign}| with the bound taken exactly.
[[nodiscard]] std::uint64_t qr_count_below(const LegendreTable& table, std::int64_t num, std::int64_t den,
                                           Sign sign);

}  // namespace qres
