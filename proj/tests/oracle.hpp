#ifndef TWOHOOK_TESTS_ORACLE_HPP_
#define TWOHOOK_TESTS_ORACLE_HPP_

// Slow reference implementations used only by tests. Nothing here calls into
// the library beyond its value types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twohook/hookcore.hpp"

namespace twohook::oracle {

using Big = boost::multiprecision::cpp_int;

// Pairs (a,b) with a < b <= n; with skip_path, only those with b - a >= 2.
inline std::vector<std::pair<int, int>> pairs_of(int n, bool skip_path = false) {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + (skip_path ? 2 : 1); b <= n; ++b) out.emplace_back(a, b);
  }
  return out;
}

// base + v(subset) for the pairs selected by mask.
inline std::vector<int> shifted(const std::vector<int>& base,
                                const std::vector<std::pair<int, int>>& pairs,
                                std::uint64_t mask) {
  std::vector<int> out = base;
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (mask >> i & 1) {
      out[static_cast<size_t>(pairs[i].first - 1)] -= 1;
      out[static_cast<size_t>(pairs[i].second - 1)] += 1;
    }
  }
  return out;
}

inline std::vector<int> hook_base(int n) {
  std::vector<int> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = n - 1 - i;
  out.front() += 2;
  for (int i = 1; i + 1 < n; ++i) out[static_cast<size_t>(i)] += 1;
  return out;
}

// Every subset of E_n, as a sorted list of sorted pair lists, whose shift of
// the 2-hook base equals t.
inline std::vector<std::vector<std::pair<int, int>>> justifying(
    const std::vector<int>& t) {
  const int n = static_cast<int>(t.size());
  const auto pairs = pairs_of(n);
  const std::vector<int> base = hook_base(n);
  std::vector<std::vector<std::pair<int, int>>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    if (shifted(base, pairs, mask) != t) continue;
    std::vector<std::pair<int, int>> chosen;
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) chosen.push_back(pairs[i]);
    }
    out.push_back(chosen);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every distinct vector reachable as base + v(E) over all E in E_n, or over
// E avoiding the path edges.
inline std::set<std::vector<int>> reachable(int n, bool skip_path = false) {
  const auto pairs = pairs_of(n, skip_path);
  const std::vector<int> base = hook_base(n);
  std::set<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    out.insert(shifted(base, pairs, mask));
  }
  return out;
}

// Sign of a permutation by cycle decomposition.
inline int cycle_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    size_t len = 0;
    for (size_t j = i; !seen[j]; j = static_cast<size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

// A006012 as the rational part of (2 + sqrt 2)^k.
inline std::int64_t a006012(int k) {
  std::int64_t a = 1, b = 0;  // a + b sqrt 2
  for (int i = 0; i < k; ++i) {
    const std::int64_t na = 2 * a + 2 * b;
    const std::int64_t nb = a + 2 * b;
    a = na;
    b = nb;
  }
  return a;
}

// Alternant by the Leibniz sum, divided by the Vandermonde product.
inline Big schur_at(const std::vector<int>& mu, const std::vector<int>& x) {
  const size_t n = x.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Big alt = 0;
  do {
    Big term = cycle_sign(perm);
    for (size_t j = 0; j < n; ++j) {
      const int e = mu[j] + static_cast<int>(n - 1 - j);
      for (int k = 0; k < e; ++k) term *= x[static_cast<size_t>(perm[j])];
    }
    alt += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  Big vdm = 1;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) vdm *= x[i] - x[j];
  }
  return alt / vdm;
}

// Semistandard tableaux counted by filling cells row by row with every value
// and checking the row/column conditions at each step.
inline std::int64_t kostka(const std::vector<int>& shape, const std::vector<int>& content) {
  std::vector<std::pair<int, int>> cells;
  for (size_t r = 0; r < shape.size(); ++r) {
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  }
  const int values = static_cast<int>(content.size());
  std::map<std::pair<int, int>, int> fill;
  std::vector<int> used(static_cast<size_t>(values), 0);
  std::int64_t count = 0;
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == cells.size()) {
      if (std::equal(used.begin(), used.end(), content.begin())) ++count;
      return;
    }
    const auto [r, c] = cells[idx];
    for (int v = 0; v < values; ++v) {
      if (used[static_cast<size_t>(v)] == content[static_cast<size_t>(v)]) continue;
      if (c > 0 && fill[{r, c - 1}] > v) continue;
      if (r > 0 && fill[{r - 1, c}] >= v) continue;
      fill[{r, c}] = v;
      ++used[static_cast<size_t>(v)];
      self(self, idx + 1);
      --used[static_cast<size_t>(v)];
    }
    fill.erase({r, c});
  };
  rec(rec, 0);
  return count;
}

}  // namespace twohook::oracle

#endif  // TWOHOOK_TESTS_ORACLE_HPP_
