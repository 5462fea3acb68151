#pragma once

#include <vector>

#include "hypersig/matrix.hpp"
#include "hypersig/polynomial.hpp"

namespace hypersig {

long euler_phi(long m);

/// The m-th cyclotomic polynomial Φ_m (integer coefficients, monic).
RatPoly cyclotomic_polynomial(long m);

/// All m ≥ 1 with φ(m) ≤ bound, ascending.
std::vector<long> orders_with_phi_at_most(long bound);

/// Arithmetic in Q(ζ_m) = Q[t]/Φ_m(t). Elements are reduced polynomials.
class CyclotomicField {
 public:
  explicit CyclotomicField(long m);

  using Element = RatPoly;

  long order() const { return m_; }
  int degree() const { return modulus_.degree(); }
  const RatPoly& modulus() const { return modulus_; }

  Element reduce(const RatPoly& p) const { return p % modulus_; }
  Element from_rational(const Rational& q) const { return RatPoly(q); }
  /// ζ^k for any integer k.
  Element zeta_power(long k) const;
  Element mul(const Element& a, const Element& b) const { return reduce(a * b); }
  Element inv(const Element& a) const;

  /// Exact rank of a matrix over Q(ζ_m).
  std::size_t rank(DenseMatrix<Element> m) const;

  /// Lifts a rational matrix into the field.
  DenseMatrix<Element> embed(const RatMatrix& m) const;

 private:
  long m_;
  RatPoly modulus_;
};

}  // namespace hypersig
