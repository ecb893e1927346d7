#include "twohook/counting.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "twohook/errors.hpp"

namespace twohook {
namespace {

TEST(CountDirectTest, SmallValues) {
  EXPECT_EQ(count_direct(3), 1);
  EXPECT_EQ(count_direct(4), 2);
  EXPECT_EQ(count_direct(5), 6);
  EXPECT_THROW(count_direct(2), DomainError);
}

TEST(A006012Test, Values) {
  EXPECT_EQ(a006012(0), 1);
  EXPECT_EQ(a006012(1), 2);
  EXPECT_EQ(a006012(4), 68);
  EXPECT_EQ(a006012(7), 2704);
  for (int k = 0; k <= 30; ++k) EXPECT_EQ(a006012(k), oracle::a006012(k)) << k;
  EXPECT_THROW(a006012(-1), DomainError);
}

TEST(RecurrenceTest, CorrectedBounds) {
  EXPECT_EQ(recurrence_count(2), 1);
  EXPECT_EQ(recurrence_count(4), 1 + 1);
  EXPECT_EQ(recurrence_count(5), 2 + 1 + 3 * 1);
  for (int n = 3; n <= 25; ++n) EXPECT_EQ(recurrence_count(n), oracle::a006012(n - 3)) << n;
}

TEST(RecurrenceTest, CheckThroughTen) {
  const CountReport report = recurrence_check(10);
  EXPECT_TRUE(report.ok());
  ASSERT_EQ(report.rows.size(), 8u);
  EXPECT_EQ(report.rows.front().n, 3);
  EXPECT_EQ(report.rows.back().direct, 2704);
  for (const CountRow& row : report.rows) EXPECT_TRUE(row.agree()) << row.n;
  EXPECT_THROW(recurrence_check(2), DomainError);
}

}  // namespace
}  // namespace twohook
