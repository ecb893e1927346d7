#ifndef TWOHOOK_POLYNOMIAL_HPP_
#define TWOHOOK_POLYNOMIAL_HPP_

#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "twohook/hookcore.hpp"

namespace twohook {

using BigInt = boost::multiprecision::cpp_int;

// Polynomial in x_1..x_n with arbitrary-precision integer coefficients. Zero
// coefficients are never stored.
class SparsePolynomial {
 public:
  using TermMap = std::map<ExponentVector, BigInt>;

  explicit SparsePolynomial(int n) : n_(n) {}

  static SparsePolynomial monomial(const ExponentVector& exponent,
                                   const BigInt& coeff = 1);
  // x_i - x_j (1-based).
  static SparsePolynomial difference(int i, int j, int n);

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }
  BigInt coefficient(const ExponentVector& exponent) const;
  // Value at x = (1, ..., 1).
  BigInt coefficient_sum() const;

  void add_term(const ExponentVector& exponent, const BigInt& coeff);
  SparsePolynomial& operator+=(const SparsePolynomial& other);
  friend SparsePolynomial operator*(const SparsePolynomial& lhs,
                                    const SparsePolynomial& rhs);

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

 private:
  int n_;
  TermMap terms_;
};

}  // namespace twohook

#endif  // TWOHOOK_POLYNOMIAL_HPP_
