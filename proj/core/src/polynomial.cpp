#include "twohook/polynomial.hpp"

#include "twohook/errors.hpp"

namespace twohook {

SparsePolynomial SparsePolynomial::monomial(const ExponentVector& exponent,
                                            const BigInt& coeff) {
  SparsePolynomial p(exponent.size());
  p.add_term(exponent, coeff);
  return p;
}

SparsePolynomial SparsePolynomial::difference(int i, int j, int n) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) {
    throw DomainError("difference needs distinct indices in [n]");
  }
  SparsePolynomial p(n);
  ExponentVector e = ExponentVector::zeros(n);
  e[i - 1] = 1;
  p.add_term(e, 1);
  e[i - 1] = 0;
  e[j - 1] = 1;
  p.add_term(e, -1);
  return p;
}

BigInt SparsePolynomial::coefficient(const ExponentVector& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt SparsePolynomial::coefficient_sum() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

void SparsePolynomial::add_term(const ExponentVector& exponent,
                                const BigInt& coeff) {
  if (exponent.size() != n_) throw DomainError("exponent length mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& lhs,
                           const SparsePolynomial& rhs) {
  if (lhs.n_ != rhs.n_) throw DomainError("polynomials over different n");
  SparsePolynomial out(lhs.n_);
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  }
  return out;
}

}  // namespace twohook
