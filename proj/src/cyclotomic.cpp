#include "hypersig/cyclotomic.hpp"

#include <utility>

namespace hypersig {

long euler_phi(long m) {
  if (m <= 0) throw InputError("euler_phi: argument must be positive");
  long result = m;
  long x = m;
  for (long p = 2; p * p <= x; ++p) {
    if (x % p) continue;
    while (x % p == 0) x /= p;
    result -= result / p;
  }
  if (x > 1) result -= result / x;
  return result;
}

namespace {

// p(t^k)
RatPoly inflate(const RatPoly& p, long k) {
  if (p.is_zero()) return p;
  std::vector<Rational> c(p.degree() * k + 1);
  for (int d = 0; d <= p.degree(); ++d) c[d * k] = p.coeffs()[d];
  return RatPoly(std::move(c));
}

}  // namespace

RatPoly cyclotomic_polynomial(long m) {
  if (m <= 0) throw InputError("cyclotomic_polynomial: order must be positive");
  // Φ_{p·r}(t) = Φ_r(t^p) / Φ_r(t) for primes p not dividing r, and
  // Φ_m(t) = Φ_{rad m}(t^{m / rad m}).
  std::vector<long> primes;
  long x = m;
  for (long p = 2; p * p <= x; ++p) {
    if (x % p) continue;
    primes.push_back(p);
    while (x % p == 0) x /= p;
  }
  if (x > 1) primes.push_back(x);
  RatPoly phi({-1, 1});
  long rad = 1;
  for (long p : primes) {
    phi = inflate(phi, p) / phi;
    rad *= p;
  }
  return inflate(phi, m / rad);
}

std::vector<long> orders_with_phi_at_most(long bound) {
  std::vector<long> out;
  if (bound < 1) return out;
  // φ(m) ≥ sqrt(m/2), so m ≤ 2·bound² covers every candidate.
  const long limit = 2 * bound * bound + 2;
  for (long m = 1; m <= limit; ++m)
    if (euler_phi(m) <= bound) out.push_back(m);
  return out;
}

CyclotomicField::CyclotomicField(long m) : m_(m), modulus_(cyclotomic_polynomial(m)) {}

CyclotomicField::Element CyclotomicField::zeta_power(long k) const {
  long e = ((k % m_) + m_) % m_;
  return reduce(RatPoly::monomial(Rational(1), static_cast<int>(e)));
}

CyclotomicField::Element CyclotomicField::inv(const Element& a) const {
  if (a.is_zero()) throw SingularMatrixError("inverse of zero in cyclotomic field");
  auto eg = extended_gcd(a, modulus_);
  // Φ_m is irreducible, so the gcd is 1 and s·a ≡ 1.
  return reduce(eg.s);
}

std::size_t CyclotomicField::rank(DenseMatrix<Element> m) const {
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    Element inv_p = inv(m(row, col));
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      Element f = mul(m(i, col), inv_p);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (m(row, j).is_zero()) continue;
        m(i, j) = reduce(m(i, j) - f * m(row, j));
      }
    }
    ++row;
  }
  return row;
}

DenseMatrix<CyclotomicField::Element> CyclotomicField::embed(const RatMatrix& m) const {
  DenseMatrix<Element> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = from_rational(m(i, j));
  return out;
}

}  // namespace hypersig
