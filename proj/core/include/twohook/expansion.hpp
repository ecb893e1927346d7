#ifndef TWOHOOK_EXPANSION_HPP_
#define TWOHOOK_EXPANSION_HPP_

// Schur expansion of the graph-directed divided symmetrization of the 2-hook.
//
// Two independent routes produce the same SchurExpansion:
//   * schur_expansion: sum over t in {constructions} u {two_hook_base} of
//     sign(sort t) * c_t * s_{l(t)}, where c_t is the signed count of the
//     justifying sets of t that avoid the graph's edges;
//   * direct_expansion_oracle: multiply out
//     x^{lambda + o^{E(G)}} * prod_{(i,j) not in E(G)} (x_i - x_j)
//     and antisymmetrize every monomial.

#include <cstdint>
#include <map>
#include <vector>

#include "twohook/hookcore.hpp"
#include "twohook/justify.hpp"

namespace twohook {

// Integer-valued symmetric-function expansion keyed by partitions of n, with
// no stored zeros. Additions detect int64 overflow.
class SchurExpansion {
 public:
  using TermMap = std::map<Partition, std::int64_t>;

  SchurExpansion() = default;
  explicit SchurExpansion(int n) : n_(n) {}
  SchurExpansion(int n, TermMap terms);

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::int64_t coefficient(const Partition& shape) const;
  void add(const Partition& shape, std::int64_t coeff);

  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

 private:
  int n_ = 0;
  TermMap terms_;
};

// Coefficients in the monomial basis m_mu.
using MonomialExpansion = std::map<Partition, std::int64_t>;

enum class JustifyMethod {
  kBrute,    // exhaustive search, exact
  kClosure,  // arc-break closure of the placement solution
  kBoth,     // both; VerificationFailure if they disagree
};

inline constexpr int kDefaultOracleFactorBound = 21;

// Signed count of the justifying sets of t that avoid E(g). t must be a 2-hook
// permutation or two_hook_base(n). brute_max_n bounds the exhaustive search.
std::int64_t coefficient(const ExponentVector& t, const GraphSpec& g,
                         JustifyMethod method = JustifyMethod::kBrute,
                         int brute_max_n = kDefaultBruteForceBound);

SchurExpansion schur_expansion(int n, const GraphSpec& g,
                               JustifyMethod method = JustifyMethod::kBrute,
                               int brute_max_n = kDefaultBruteForceBound);

// Throws ResourceBoundError when |E_n - E(g)| exceeds max_factors.
SchurExpansion direct_expansion_oracle(
    const GraphSpec& g, int max_factors = kDefaultOracleFactorBound);

// Number of semistandard tableaux of shape lambda and content mu.
std::int64_t kostka(const Partition& lambda, const Partition& mu);

// Partitions of `total` padded with zeros to `length` parts, in decreasing
// lexicographic order. Partitions with more than `length` parts are skipped.
std::vector<Partition> partitions_of(int total, int length);

MonomialExpansion to_monomial_basis(const SchurExpansion& expansion);

}  // namespace twohook

#endif  // TWOHOOK_EXPANSION_HPP_
