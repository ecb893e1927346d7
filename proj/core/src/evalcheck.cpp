#include "twohook/evalcheck.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "twohook/errors.hpp"

namespace twohook {

namespace {

void check_distinct(const ExponentVector& point) {
  std::set<int> seen(point.begin(), point.end());
  if (static_cast<int>(seen.size()) != point.size()) {
    throw SingularPointError("evaluation point " + to_string(point) +
                             " has repeated coordinates");
  }
}

void check_bound(int n, int max_n) {
  if (n > max_n) {
    throw ResourceBoundError("permutation sum limited to n <= " +
                             std::to_string(max_n) + ", got n=" + std::to_string(n));
  }
}

BigInt power(int base, int exponent) {
  BigInt out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

BigInt vandermonde(const ExponentVector& point) {
  BigInt out = 1;
  for (int i = 0; i < point.size(); ++i) {
    for (int j = i + 1; j < point.size(); ++j) out *= point[i] - point[j];
  }
  return out;
}

// Boost 1.74 rejects a negative denominator, so move the sign up first.
ExactRational make_rational(BigInt numerator, BigInt denominator) {
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  return ExactRational(numerator, denominator);
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (size_t i = 0; i < perm.size(); ++i) {
    for (size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

ExactRational eval_divsym(const Partition& lambda, const GraphSpec& g,
                          const ExponentVector& point, int max_n) {
  const int n = point.size();
  if (lambda.size() != n || g.n() != n) {
    throw DomainError("eval_divsym: lambda, graph and point disagree on n");
  }
  check_bound(n, max_n);
  check_distinct(point);
  const ExponentVector exponent = lambda.as_vector() + o_vector(g.edges(), n);
  const PairSet edges = g.edges();

  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  ExactRational total = 0;
  do {
    BigInt numerator = 1;
    for (int i = 0; i < n; ++i) {
      numerator *= power(point[perm[static_cast<size_t>(i)]], exponent[i]);
    }
    BigInt denominator = 1;
    for (Pair e : edges) {
      denominator *= point[perm[static_cast<size_t>(e.a - 1)]] -
                     point[perm[static_cast<size_t>(e.b - 1)]];
    }
    total += make_rational(numerator, denominator);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m) {
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  }
  int sign = 1;
  BigInt previous = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      }
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

ExactRational eval_schur(const Partition& mu, const ExponentVector& point) {
  const int n = point.size();
  if (mu.size() != n) throw DomainError("eval_schur: shape and point disagree on n");
  check_distinct(point);
  std::vector<std::vector<BigInt>> alternant(static_cast<size_t>(n),
                                             std::vector<BigInt>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      alternant[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          power(point[i], mu[j] + n - 1 - j);
    }
  }
  const BigInt numerator = bareiss_determinant(std::move(alternant));
  const BigInt denominator = vandermonde(point);
  if (numerator % denominator != 0) {
    throw VerificationFailure("alternant of " + to_string(mu) + " at " +
                              to_string(point) + " is not divisible by the Vandermonde product");
  }
  return ExactRational(numerator / denominator);
}

ExactRational eval_antisymmetrized(const ExponentVector& t,
                                   const ExponentVector& point, int max_n) {
  const int n = point.size();
  if (t.size() != n) throw DomainError("exponent and point disagree on n");
  check_bound(n, max_n);
  check_distinct(point);
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    BigInt term = permutation_sign(perm);
    for (int i = 0; i < n; ++i) term *= power(point[perm[static_cast<size_t>(i)]], t[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return make_rational(total, vandermonde(point));
}

std::vector<ExponentVector> sample_points(int n, int count, std::uint64_t seed) {
  constexpr int kRange = 1000;
  if (n > kRange) throw DomainError("cannot draw that many distinct coordinates");
  std::mt19937_64 rng(seed);
  std::vector<ExponentVector> out;
  for (int c = 0; c < count; ++c) {
    std::set<int> used;
    ExponentVector point = ExponentVector::zeros(n);
    for (int i = 0; i < n; ++i) {
      int x;
      do {
        x = static_cast<int>(rng() % kRange) + 1;
      } while (!used.insert(x).second);
      point[i] = x;
    }
    out.push_back(std::move(point));
  }
  return out;
}

bool PointReport::all_match() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const PointCheck& c) { return c.match; });
}

PointReport verify_expansion_at_points(const SchurExpansion& expansion,
                                       const GraphSpec& g,
                                       const std::vector<ExponentVector>& points,
                                       int max_n) {
  const int n = g.n();
  PointReport report;
  report.n = n;
  report.expansion = expansion;
  const Partition hook = two_hook(n);
  for (const ExponentVector& point : points) {
    PointCheck check;
    check.point = point;
    check.lhs = eval_divsym(hook, g, point, max_n);
    check.rhs = 0;
    for (const auto& [shape, coeff] : expansion.terms()) {
      check.rhs += eval_schur(shape, point) * coeff;
    }
    check.match = check.lhs == check.rhs;
    report.checks.push_back(check);
    if (!check.match) {
      std::ostringstream msg;
      msg << "n=" << n << " graph extra edges " << g.extra_edges() << " at point "
          << point << ": divided symmetrization " << check.lhs
          << " != Schur side " << check.rhs;
      throw VerificationFailure(msg.str());
    }
  }
  return report;
}

PointReport verify_at_points(int n, const GraphSpec& g, int count,
                             std::uint64_t seed, int max_n) {
  check_bound(n, max_n);
  return verify_expansion_at_points(schur_expansion(n, g, JustifyMethod::kBrute, max_n), g,
                                    sample_points(n, count, seed), max_n);
}

}  // namespace twohook
