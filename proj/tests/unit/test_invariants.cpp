#include <gtest/gtest.h>

#include <algorithm>

#include "oracle.hpp"
#include "qres/error.hpp"
#include "qres/invariants.hpp"

using namespace qres;

TEST(ClassNumbers, Examples) {
  EXPECT_EQ(h_minus_4p(OddPrime(5)).h, 2u);
  EXPECT_EQ(h_minus_4p(OddPrime(13)).h, 2u);
  EXPECT_EQ(h_minus_4p(OddPrime(17)).h, 4u);
  EXPECT_EQ(h_minus_4p(OddPrime(13)).discriminant, -52);
  EXPECT_EQ(h_minus_3p(OddPrime(5)).h, 2u);
  EXPECT_EQ(h_minus_3p(OddPrime(13)).h, 4u);
  EXPECT_EQ(h_minus_3p(OddPrime(17)).h, 2u);
  EXPECT_EQ(h_minus_p(OddPrime(7)).h, 1u);
  EXPECT_EQ(h_minus_p(OddPrime(23)).h, 3u);
  EXPECT_EQ(h_minus_p(OddPrime(47)).h, 5u);
  EXPECT_THROW((void)h_minus_4p(OddPrime(7)), DomainError);
  EXPECT_THROW((void)h_minus_p(OddPrime(13)), DomainError);
}

TEST(ClassNumbers, MatchReducedFormCount) {
  for (auto pv : oracle::odd_primes_below(2000)) {
    const OddPrime p(static_cast<std::uint64_t>(pv));
    if (pv % 4 == 1) {
      ASSERT_EQ(h_minus_4p(p).h, static_cast<std::uint64_t>(oracle::class_number(-4 * pv))) << pv;
      ASSERT_EQ(h_minus_3p(p).h, static_cast<std::uint64_t>(oracle::class_number(-3 * pv))) << pv;
      ASSERT_EQ((pv - 1) / 2 - static_cast<std::int64_t>(h_minus_4p(p).h), 4 * static_cast<std::int64_t>(qr_count_interval(p, 1, (pv + 3) / 4 - 1, Sign::minus())));
    } else if (pv > 3) {
      const auto h = h_minus_p(p).h;
      ASSERT_EQ(h, static_cast<std::uint64_t>(oracle::class_number(-pv))) << pv;
      ASSERT_EQ(h % 2, 1u);
      ASSERT_EQ(Sign::parity(static_cast<std::int64_t>(h + 1) / 2), mordell_sign(p)) << pv;
    }
  }
}

TEST(Mordell, Examples) {
  EXPECT_EQ(mordell_sign(OddPrime(7)), Sign::minus());
  // 5! = 120 == -1 (mod 11), and h(-11) = 1
  EXPECT_EQ(mordell_sign(OddPrime(11)), Sign::minus());
  EXPECT_EQ(mordell_sign(OddPrime(23)), Sign::plus());
  EXPECT_THROW((void)mordell_sign(OddPrime(3)), DomainError);
  EXPECT_THROW((void)mordell_sign(OddPrime(13)), DomainError);
}

TEST(TwoSquares, Examples) {
  EXPECT_EQ(two_square_decomposition(OddPrime(5)), (TwoSquares{5, 1, 2}));
  EXPECT_EQ(two_square_decomposition(OddPrime(13)), (TwoSquares{13, -3, -2}));
  const auto d = two_square_decomposition(OddPrime(17));
  EXPECT_EQ(d.x, 1);
  EXPECT_EQ(oracle::md(d.y, 17), oracle::factorial(8, 17));
  EXPECT_THROW((void)two_square_decomposition(OddPrime(7)), DomainError);
}

TEST(TwoSquares, UniqueUnderNormalisation) {
  for (auto pv : oracle::odd_primes_below(1000)) {
    if (pv % 4 != 1) continue;
    const std::int64_t z = oracle::factorial(pv / 2, pv);
    std::vector<std::pair<std::int64_t, std::int64_t>> normal;
    for (auto [x, y] : oracle::two_squares(pv))
      if (oracle::md(x, 4) == 1 && oracle::md(y - z * x, pv) == 0) normal.emplace_back(x, y);
    ASSERT_EQ(normal.size(), 1u) << pv;
    const auto d = two_square_decomposition(OddPrime(static_cast<std::uint64_t>(pv)));
    ASSERT_EQ(std::pair(d.x, d.y), normal[0]) << pv;
  }
}

TEST(BackgroundChecks, ThirteenPinned) {
  const auto records = background_checks(OddPrime(13));
  ASSERT_EQ(records.size(), 6u);
  for (const auto& r : records) EXPECT_TRUE(r.ok) << r.item;
  const auto cde = std::find_if(records.begin(), records.end(), [](const auto& r) { return r.item == "bg.cde"; });
  ASSERT_NE(cde, records.end());
  EXPECT_EQ(cde->lhs, 20);
  EXPECT_EQ(cde->rhs, 20);
  const auto gauss = std::find_if(records.begin(), records.end(), [](const auto& r) { return r.item == "bg.gauss"; });
  EXPECT_EQ(gauss->lhs, 7);
}

TEST(BackgroundChecks, RejectsThreeModFour) { EXPECT_THROW((void)background_checks(OddPrime(7)), DomainError); }
