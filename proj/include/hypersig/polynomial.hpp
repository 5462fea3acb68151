#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "hypersig/rational.hpp"

namespace hypersig {

/// Univariate polynomial over Q, coefficients indexed by degree. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<long long> coeffs);
  explicit RatPoly(const Rational& c);

  static RatPoly monomial(const Rational& c, int degree);
  /// t (the indeterminate).
  static RatPoly t() { return monomial(Rational(1), 1); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  const Rational& leading() const { return c_.back(); }

  RatPoly monic() const;
  RatPoly derivative() const;
  /// t^deg · p(1/t).
  RatPoly reversed() const;

  Rational operator()(const Rational& x) const;
  std::complex<double> operator()(std::complex<double> z) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const Rational& s);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator-(RatPoly a) { return a *= Rational(-1); }
  friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division; throws on a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
inline RatPoly operator/(const RatPoly& a, const RatPoly& b) { return divmod(a, b).first; }
inline RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// Returns (g, s, u) with s·a + u·b = g = gcd(a, b) monic.
struct ExtendedGcd {
  RatPoly g, s, u;
};
ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b);

/// Scales p to integer coefficients with content 1 and positive leading
/// coefficient, and strips any power of t so the constant term is nonzero.
/// The zero polynomial is returned unchanged.
RatPoly normalize_integral(const RatPoly& p);

/// Square-free decomposition p = c · Π f_k^k with f_k monic, square-free and
/// pairwise coprime; returns the pairs (f_k, k) with deg f_k > 0.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p);

}  // namespace hypersig
