#pragma once

#include <Eigen/Core>

#include <complex>
#include <cstddef>

namespace hypersig {

using ComplexMatrix = Eigen::MatrixXcd;

struct Inertia {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  long signature() const { return static_cast<long>(n_plus) - static_cast<long>(n_minus); }
  std::size_t size() const { return n_plus + n_minus + n_zero; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Default relative tolerance for eigenvalue sign decisions.
inline constexpr double kDefaultRelativeTolerance = 1e-9;

/// Upper bound on the spectral norm (the Frobenius norm).
double spectral_norm_bound(const ComplexMatrix& h);

/// tol = relative · spectral_norm_bound(h).
double scaled_tolerance(const ComplexMatrix& h, double relative = kDefaultRelativeTolerance);

/// Counts eigenvalues > tol, < -tol and within [-tol, tol]. Throws InputError
/// when h differs from its conjugate transpose by more than tol.
Inertia hermitian_inertia(const ComplexMatrix& h, double tol);

/// Inertia when the nullity is known exactly: the `nullity` eigenvalues of
/// least modulus are taken as zero and the rest must be outside [-tol, tol]
/// (PrecisionError otherwise).
Inertia hermitian_inertia_with_nullity(const ComplexMatrix& h, std::size_t nullity, double tol);

}  // namespace hypersig
