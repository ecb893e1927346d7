#include "twohook/counting.hpp"

#include "twohook/construction.hpp"
#include "twohook/errors.hpp"

namespace twohook {

std::int64_t count_direct(int n) {
  std::int64_t count = 0;
  for_each_construction(n, [&](const ConstructionResult&) { ++count; });
  return count;
}

std::int64_t a006012(int k) {
  if (k < 0) throw DomainError("a006012 needs k >= 0");
  std::int64_t prev = 1, cur = 2;
  if (k == 0) return prev;
  for (int i = 2; i <= k; ++i) {
    std::int64_t next;
    if (__builtin_mul_overflow(cur, 4, &next) ||
        __builtin_sub_overflow(next, 2 * prev, &next)) {
      throw Error("a006012 overflows int64");
    }
    prev = cur;
    cur = next;
  }
  return cur;
}

std::int64_t recurrence_count(int n) {
  if (n < 2) throw DomainError("recurrence starts at N_2");
  std::vector<std::int64_t> counts(static_cast<size_t>(n) + 1, 0);
  counts[2] = 1;
  for (int m = 3; m <= n; ++m) {
    std::int64_t value = counts[static_cast<size_t>(m - 1)];
    std::int64_t power = 1;
    for (int i = 0; m - 2 - i >= 2; ++i) {
      value += power * counts[static_cast<size_t>(m - 2 - i)];
      power *= 3;
    }
    counts[static_cast<size_t>(m)] = value;
  }
  return counts[static_cast<size_t>(n)];
}

CountReport recurrence_check(int n_max) {
  if (n_max < 3) throw DomainError("recurrence check needs n_max >= 3");
  CountReport report;
  for (int n = 3; n <= n_max; ++n) {
    CountRow row{n, count_direct(n), a006012(n - 3), recurrence_count(n)};
    if (!row.agree() && !report.first_failure) report.first_failure = n;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace twohook
