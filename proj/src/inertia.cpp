#include "hypersig/inertia.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <vector>

#include "hypersig/errors.hpp"

namespace hypersig {

double spectral_norm_bound(const ComplexMatrix& h) { return h.norm(); }

double scaled_tolerance(const ComplexMatrix& h, double relative) {
  return relative * spectral_norm_bound(h);
}

namespace {

Eigen::VectorXd eigenvalues_checked(const ComplexMatrix& h, double tol) {
  if (h.rows() != h.cols()) throw InputError("hermitian_inertia: non-square matrix");
  if (!(tol >= 0)) throw InputError("hermitian_inertia: tolerance must be non-negative");
  if (h.size() > 0 && (h - h.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw InputError("hermitian_inertia: matrix is not hermitian within tolerance");
  if (h.size() == 0) return Eigen::VectorXd();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw PrecisionError("hermitian eigenvalue solver failed");
  return solver.eigenvalues();
}

}  // namespace

Inertia hermitian_inertia(const ComplexMatrix& h, double tol) {
  Eigen::VectorXd ev = eigenvalues_checked(h, tol);
  Inertia out;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > tol)
      ++out.n_plus;
    else if (ev(i) < -tol)
      ++out.n_minus;
    else
      ++out.n_zero;
  }
  return out;
}

Inertia hermitian_inertia_with_nullity(const ComplexMatrix& h, std::size_t nullity, double tol) {
  Eigen::VectorXd ev = eigenvalues_checked(h, tol);
  if (nullity > static_cast<std::size_t>(ev.size())) throw InputError("nullity exceeds matrix size");
  std::vector<double> vals(ev.data(), ev.data() + ev.size());
  std::sort(vals.begin(), vals.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
  Inertia out;
  out.n_zero = nullity;
  for (std::size_t i = nullity; i < vals.size(); ++i) {
    if (std::abs(vals[i]) <= tol)
      throw PrecisionError("eigenvalue sign undecidable at working tolerance");
    (vals[i] > 0 ? out.n_plus : out.n_minus)++;
  }
  return out;
}

}  // namespace hypersig
