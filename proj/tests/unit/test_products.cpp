#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qres/error.hpp"
#include "qres/products.hpp"

using namespace qres;

namespace {

std::uint64_t S(std::int64_t a, std::int64_t b, std::int64_t c, std::uint64_t p) {
  return product_S({a, b, c}, OddPrime(p)).value.value;
}
std::uint64_t T(std::int64_t a, std::int64_t b, std::int64_t c, std::uint64_t p) {
  return product_T({a, b, c}, OddPrime(p)).value.value;
}

}  // namespace

TEST(ProductS, Examples) {
  EXPECT_EQ(S(1, 0, 1, 5), 1u);
  EXPECT_EQ(S(1, 2, 1, 5), 1u);
  EXPECT_EQ(S(1, 0, 5, 5), 4u);
}

TEST(ProductT, Examples) {
  EXPECT_EQ(T(1, -2, -1, 5), 2u);
  EXPECT_EQ(T(1, -1, -1, 5), 4u);
  EXPECT_EQ(T(2, 5, 2, 7), 1u);
  EXPECT_EQ(T(1, -1, -1, 7), 6u);
  EXPECT_EQ(T(1, -1, -1, 13), 5u);
}

TEST(ProductT, SkipAccounting) {
  const ProductValue v = product_T({0, 0, 0}, OddPrime(7));
  EXPECT_EQ(v.value.value, 1u);
  EXPECT_EQ(v.skipped, 9u);
  EXPECT_EQ(v.total, 9u);
}

TEST(Products, MatchDefinitionsOnSmallPrimes) {
  for (auto pv : oracle::odd_primes_below(60)) {
    const auto p = static_cast<std::uint64_t>(pv);
    for (std::int64_t a = -3; a <= 3; ++a)
      for (std::int64_t b = -3; b <= 3; ++b)
        for (std::int64_t c = -3; c <= 3; ++c) {
          ASSERT_EQ(S(a, b, c, p), static_cast<std::uint64_t>(oracle::product_S(a, b, c, pv)));
          ASSERT_EQ(T(a, b, c, p), static_cast<std::uint64_t>(oracle::product_T(a, b, c, pv)));
        }
  }
}

TEST(Braces, Examples) {
  EXPECT_EQ(product_braces(2, 2, OddPrime(5)).value.value, 1u);
  EXPECT_EQ(product_braces(2, 3, OddPrime(7)).value.value, 1u);
  EXPECT_EQ(product_braces(1, 4, OddPrime(5)).value.value, T(1, 0, -1, 5));
  EXPECT_THROW((void)product_braces(1, 1, OddPrime(5)), DomainError);
}

TEST(Braces, MatchesDefinition) {
  for (auto pv : oracle::odd_primes_below(80)) {
    const OddPrime p(static_cast<std::uint64_t>(pv));
    for (std::int64_t a = 1; a < pv; ++a) {
      const auto b = static_cast<std::int64_t>(p.neg(mod_inv(a, p).value));
      ASSERT_EQ(product_braces(a, b, p).value.value, static_cast<std::uint64_t>(oracle::braces(a, b, pv)));
    }
  }
}

TEST(DoubleFactorialProducts, SignRelations) {
  for (auto pv : oracle::odd_primes_below(400)) {
    if (pv <= 3) continue;
    const OddPrime p(static_cast<std::uint64_t>(pv));
    const auto d = double_factorial_products(p);
    const std::uint64_t m2 = legendre(-2, p).to_residue(p);
    ASSERT_EQ(p.mul(d.plus.value, d.minus.value), m2);
    ASSERT_EQ(d.plus.value, p.mul(m2, d.minus.value));
    ASSERT_TRUE(d.plus.value == 1 || d.plus.value == p.value() - 1);
  }
  EXPECT_THROW((void)double_factorial_products(OddPrime(3)), DomainError);
}

TEST(SymbolProducts, Examples) {
  EXPECT_EQ(symbol_product_quadratic({2, 5, 2}, OddPrime(7), TriangleRange::strict_upper), Sign::minus());
  EXPECT_EQ(symbol_product_quadratic({1, -1, 1}, OddPrime(7), TriangleRange::strict_upper), Sign::minus());
  EXPECT_EQ(symbol_product_quadratic({1, 0, 1}, OddPrime(5), TriangleRange::strict_upper), Sign::plus());
  EXPECT_EQ(symbol_product_linear(1, 1, OddPrime(7), LinearRange::strict_upper), Sign::plus());
  EXPECT_EQ(symbol_product_linear(-1, 1, OddPrime(7), LinearRange::strict_upper), Sign::plus());
  EXPECT_EQ(symbol_product_linear(3, 1, OddPrime(5), LinearRange::full_square), Sign::plus());
}

TEST(SymbolProducts, TableAndPrimeOverloadsAgree) {
  for (auto pv : oracle::odd_primes_below(120)) {
    const OddPrime p(static_cast<std::uint64_t>(pv));
    const LegendreTable t(p);
    for (std::int64_t k = 0; k < pv; ++k) ASSERT_EQ(t[static_cast<std::uint64_t>(k)].value(), oracle::legendre(k, pv));
    for (std::int64_t r = -3; r <= 3; ++r) {
      ASSERT_EQ(symbol_product_linear(r, 1, t, LinearRange::full_square),
                symbol_product_linear(r, 1, p, LinearRange::full_square));
      ASSERT_EQ(symbol_product_quadratic({1, r, 1}, t, TriangleRange::upper_with_diagonal),
                symbol_product_quadratic({1, r, 1}, p, TriangleRange::upper_with_diagonal));
    }
  }
}

TEST(Background, Examples) {
  EXPECT_EQ(product_background(OddPrime(5), BackgroundProduct::squares_diff_triangular).value.value, 3u);
  EXPECT_EQ(product_background(OddPrime(7), BackgroundProduct::squares_diff_triangular).value.value, 1u);
  // 1 - 4 = -3 and 4 - 1 = 3 survive: -9 == 1 (mod 5)
  EXPECT_EQ(product_background(OddPrime(5), BackgroundProduct::squares_diff_full).value.value, 1u);
  EXPECT_THROW((void)product_background(OddPrime(3), BackgroundProduct::squares_diff_full), DomainError);
}

TEST(QrCount, Examples) {
  EXPECT_EQ(qr_count_interval(OddPrime(13), 1, 3, Sign::plus()), 2u);
  EXPECT_EQ(qr_count_interval(OddPrime(13), 1, 3, Sign::minus()), 1u);
  EXPECT_EQ(qr_count_interval(OddPrime(5), 1, 1, Sign::minus()), 0u);
  EXPECT_THROW((void)qr_count_interval(OddPrime(5), 3, 1, Sign::plus()), DomainError);
  const LegendreTable t(OddPrime(13));
  EXPECT_EQ(qr_count_range(t, 5, 2, Sign::plus()), 0u);
  // k < 13/4: {1, 2, 3}, residues 1 and 3
  EXPECT_EQ(qr_count_below(t, 1, 4, Sign::plus()), 2u);
}
