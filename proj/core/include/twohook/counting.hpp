#ifndef TWOHOOK_COUNTING_HPP_
#define TWOHOOK_COUNTING_HPP_

#include <cstdint>
#include <optional>
#include <vector>

namespace twohook {

// Number of 2-hook permutations of length n, by enumerating the construction.
std::int64_t count_direct(int n);

// A006012: a(0)=1, a(1)=2, a(k)=4a(k-1)-2a(k-2).
std::int64_t a006012(int k);

// N_n = N_{n-1} + sum_{i=0}^{n-4} 3^i N_{n-2-i}, N_2 = 1.
std::int64_t recurrence_count(int n);

struct CountRow {
  int n = 0;
  std::int64_t direct = 0;
  std::int64_t oeis = 0;        // a006012(n-3)
  std::int64_t recurrence = 0;  // recurrence_count(n)
  bool agree() const { return direct == oeis && oeis == recurrence; }
};

struct CountReport {
  std::vector<CountRow> rows;
  std::optional<int> first_failure;
  bool ok() const { return !first_failure.has_value(); }
};

CountReport recurrence_check(int n_max);

}  // namespace twohook

#endif  // TWOHOOK_COUNTING_HPP_
