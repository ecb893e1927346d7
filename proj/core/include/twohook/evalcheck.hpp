#ifndef TWOHOOK_EVALCHECK_HPP_
#define TWOHOOK_EVALCHECK_HPP_

// Exact pointwise evaluation of both sides of the expansion: the divided
// symmetrization summed over all n! permutations, and Schur polynomials via
// the bialternant formula.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twohook/expansion.hpp"
#include "twohook/hookcore.hpp"
#include "twohook/polynomial.hpp"

namespace twohook {

using ExactRational = boost::multiprecision::cpp_rational;

inline constexpr int kDefaultEvalBound = 8;
inline constexpr std::uint64_t kDefaultSeed = 42;

// sum over permutations d of x_d^{lambda + o^{E(g)}} / prod_{(i,j) in E(g)}
// (x_{d(i)} - x_{d(j)}).
ExactRational eval_divsym(const Partition& lambda, const GraphSpec& g,
                          const ExponentVector& point,
                          int max_n = kDefaultEvalBound);

// det(x_i^{mu_j + n - j}) / prod_{i<j} (x_i - x_j).
ExactRational eval_schur(const Partition& mu, const ExponentVector& point);

// sum over permutations d of sign(d) x_d^t, divided by the Vandermonde
// product. Equals sign(sort t) * s_{l(t)}(x) for t with distinct entries.
ExactRational eval_antisymmetrized(const ExponentVector& t,
                                   const ExponentVector& point,
                                   int max_n = kDefaultEvalBound);

// Fraction-free determinant of a square matrix.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> matrix);

// `count` points of n distinct integers drawn from {1, ..., 1000}.
std::vector<ExponentVector> sample_points(int n, int count, std::uint64_t seed);

struct PointCheck {
  ExponentVector point;
  ExactRational lhs;
  ExactRational rhs;
  bool match = false;
};

struct PointReport {
  int n = 0;
  SchurExpansion expansion;
  std::vector<PointCheck> checks;
  bool all_match() const;
};

// Compares eval_divsym(two_hook(n), g, x) with sum coeff * eval_schur(mu, x)
// at each point. Throws VerificationFailure on the first mismatch.
PointReport verify_expansion_at_points(const SchurExpansion& expansion,
                                       const GraphSpec& g,
                                       const std::vector<ExponentVector>& points,
                                       int max_n = kDefaultEvalBound);

// verify_expansion_at_points against schur_expansion(n, g) at `count` seeded
// points.
PointReport verify_at_points(int n, const GraphSpec& g, int count,
                             std::uint64_t seed = kDefaultSeed,
                             int max_n = kDefaultEvalBound);

}  // namespace twohook

#endif  // TWOHOOK_EVALCHECK_HPP_
