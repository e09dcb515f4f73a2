#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qres/error.hpp"
#include "qres/gauss_lemma.hpp"

using namespace qres;

namespace {

std::uint64_t naive_above_half(std::int64_t x, std::int64_t n) {
  std::uint64_t c = 0;
  for (std::int64_t k = 1; 2 * k < n; ++k)
    if (2 * oracle::md(k * x, n) > n) ++c;
  return c;
}

}  // namespace

TEST(HalfRange, Examples) {
  EXPECT_EQ(count_above_half(1, Modulus(7)).count, 0u);
  EXPECT_EQ(count_above_half(3, Modulus(7)).count, 1u);
  EXPECT_EQ(count_exceeds_index(1, Modulus(9)).count, 0u);
  EXPECT_EQ(count_exceeds_index(3, Modulus(7)).count, 2u);
  EXPECT_EQ(count_exceeds_index(5, Modulus(7)).count, 2u);
  EXPECT_EQ(joint_count(3, Modulus(7), JointMode::both_above).count, 0u);
  EXPECT_EQ(joint_count(3, Modulus(7), JointMode::both_below).count, 1u);
  EXPECT_EQ(joint_count(3, Modulus(7), JointMode::first_above_second_below).count, 1u);
}

TEST(HalfRange, RejectsNonCoprime) {
  EXPECT_THROW((void)count_above_half(3, Modulus(9)), DomainError);
  EXPECT_THROW((void)joint_count(1, Modulus(9), JointMode::both_above), DomainError);
}

TEST(HalfRange, FactorialRootCount) {
  // p = 13: ((p-1)/2)! = 720 == 5, count is (13-1)/4
  EXPECT_EQ(count_above_half(5, Modulus(13)).count, 3u);
}

TEST(HalfRange, GaussLemmaRecoversJacobi) {
  for (std::int64_t n = 3; n < 400; n += 2) {
    const Modulus m(static_cast<std::uint64_t>(n));
    for (std::int64_t x = 1; x < n; ++x) {
      if (std::gcd(x, n) != 1) continue;
      const auto c = count_above_half(x, m).count;
      ASSERT_EQ(c, naive_above_half(x, n));
      ASSERT_EQ(Sign::parity(static_cast<std::int64_t>(c)), jacobi(x, m)) << x << " " << n;
    }
  }
}

TEST(HalfRange, JointModesPartitionTheHalfRange) {
  for (std::int64_t n = 3; n < 200; n += 2) {
    const Modulus m(static_cast<std::uint64_t>(n));
    for (std::int64_t x = 1; x < n; ++x) {
      if (std::gcd(x * (1 - x) % n, n) != 1) continue;
      const GaussCounts g = gauss_counts(x, m);
      ASSERT_EQ(g.both_above + g.both_below + g.first_above_second_below + g.second_above_first_below,
                static_cast<std::uint64_t>(n / 2));
      ASSERT_EQ(g.both_above, joint_count(x, m, JointMode::both_above).count);
      ASSERT_EQ(g.second_above_first_below, joint_count(x, m, JointMode::second_above_first_below).count);
      ASSERT_EQ(g.exceeds_index, count_exceeds_index(x, m).count);
    }
  }
}

TEST(Identities, SevenThree) {
  const auto sides = gauss_jenkins_sides(3, Modulus(7));
  ASSERT_EQ(sides.size(), 5u);
  for (const auto& s : sides) EXPECT_EQ(s.count_side, s.symbol_side) << "eq " << s.eq;
  const auto records = verify_gauss_jenkins_identities(3, Modulus(7));
  ASSERT_EQ(records.size(), 5u);
  for (const auto& r : records) {
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.item, "thm1.1");
  }
  // fourth identity: symbol side is (2*3*2/7) = (5/7) = -1
  EXPECT_EQ(sides[3].eq, 5);
  EXPECT_EQ(sides[3].symbol_side, Sign::minus());
}

TEST(Identities, OnlyJenkinsWhenOneMinusXShares) {
  // x = 4, n = 9: 1 - x = -3 shares a factor with 9
  const auto sides = gauss_jenkins_sides(4, Modulus(9));
  ASSERT_EQ(sides.size(), 1u);
  EXPECT_EQ(sides[0].eq, 2);
  EXPECT_EQ(sides[0].count_side, sides[0].symbol_side);
}

TEST(Identities, AllOddModuliUpTo301) {
  for (std::uint64_t n = 3; n <= 301; n += 2) {
    const Modulus m(n);
    for (std::int64_t x = 1; x < static_cast<std::int64_t>(n); ++x) {
      if (gcd_u64(static_cast<std::uint64_t>(x), n) != 1) continue;
      for (const auto& s : gauss_jenkins_sides(x, m)) ASSERT_EQ(s.count_side, s.symbol_side) << n << " " << x << " " << s.eq;
    }
  }
}
