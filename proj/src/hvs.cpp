#include "hypersig/hvs.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "hypersig/cyclotomic.hpp"
#include "hypersig/errors.hpp"
#include "hypersig/inertia.hpp"
#include "hypersig/pencil_det.hpp"
#include "hypersig/signatures.hpp"
#include "hypersig/unit_circle.hpp"

namespace hypersig {

namespace {

ComplexMatrix to_complex(const RatMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

std::complex<double> unit(double angle) { return std::polar(1.0, 2 * std::numbers::pi * angle); }

// f(h) by Horner's rule.
RatMatrix evaluate(const RatPoly& f, const RatMatrix& h) {
  const auto id = RatMatrix::identity(h.rows());
  RatMatrix acc(h.rows(), h.cols());
  for (int k = f.degree(); k >= 0; --k) acc = acc * h + id * f.coeff(k);
  return acc;
}

// Block counts from a nullity sequence null_1 < null_2 < ... (ending at the
// algebraic multiplicity): blocks of size ≥ j number null_j - null_{j-1}.
std::vector<std::pair<int, int>> blocks_from_nullities(const std::vector<int>& nullity) {
  std::vector<int> at_least;
  int prev = 0;
  for (int nj : nullity) {
    at_least.push_back(nj - prev);
    prev = nj;
  }
  std::vector<std::pair<int, int>> out;  // (size, count)
  for (std::size_t j = 0; j < at_least.size(); ++j) {
    const int next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
    if (at_least[j] - next > 0) out.emplace_back(static_cast<int>(j + 1), at_least[j] - next);
  }
  return out;
}

// ker Φ_m(h)^j over Q splits into φ(m) Galois-conjugate pieces of equal
// dimension, one per primitive m-th root of unity.
std::vector<int> exact_nullities(const RatMatrix& h, long m, int multiplicity) {
  if (multiplicity == 1) return {1};
  const RatMatrix base = evaluate(cyclotomic_polynomial(m), h);
  const int mu = static_cast<int>(h.rows());
  const int phi = static_cast<int>(euler_phi(m));
  std::vector<int> nullity;
  RatMatrix power = base;
  for (;;) {
    const int nj = (mu - static_cast<int>(rank_rational(power))) / phi;
    if (!nullity.empty() && nj == nullity.back())
      throw CalibrationError("Jordan chain stalled below the algebraic multiplicity");
    nullity.push_back(nj);
    if (nj >= multiplicity) break;
    power = power * base;
  }
  return nullity;
}

// Singular values (descending) and right singular vectors from the
// eigen-decomposition of M*M; only used to pick eigenspace bases whose
// dimension is already known exactly.
struct Singular {
  Eigen::VectorXd values;
  ComplexMatrix vectors;  // columns match `values`
};

Singular singular_system(const ComplexMatrix& m, bool with_vectors = true) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m.adjoint() * m,
                                                  with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  const Eigen::Index n = m.cols();
  Singular out{Eigen::VectorXd(n), ComplexMatrix()};
  for (Eigen::Index i = 0; i < n; ++i) out.values(i) = std::sqrt(std::max(0.0, es.eigenvalues()(n - 1 - i)));
  if (with_vectors) out.vectors = es.eigenvectors().rowwise().reverse();
  return out;
}

// Numeric rank with a two-sided certification band scaled by ‖M‖.
int numeric_nullity(const ComplexMatrix& m, double relative_tol) {
  // Plain SVD here: squaring would hide singular values below √eps.
  const Eigen::VectorXd sv = Eigen::JacobiSVD<ComplexMatrix>(m).singularValues();
  const double scale = std::max(1.0, sv.size() ? sv(0) : 0.0);
  const double zero = relative_tol * scale;
  const double nonzero = std::sqrt(relative_tol) * scale;
  int nullity = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) <= zero)
      ++nullity;
    else if (sv(i) < nonzero)
      throw PrecisionError("rank decision ambiguous at working precision; raise precision");
  }
  return nullity;
}

std::vector<int> numeric_nullities(const RatMatrix& h, std::complex<double> lambda, int multiplicity,
                                   double relative_tol) {
  const ComplexMatrix base =
      to_complex(h) - lambda * ComplexMatrix::Identity(h.rows(), h.cols());
  std::vector<int> nullity;
  ComplexMatrix power = base;
  for (int j = 1; j <= multiplicity; ++j) {
    const int nj = numeric_nullity(power, relative_tol);
    if (!nullity.empty() && nj <= nullity.back())
      throw PrecisionError("Jordan chain inconsistent at working precision; raise precision");
    nullity.push_back(nj);
    if (nj >= multiplicity) break;
    power = power * base;
  }
  if (nullity.empty() || nullity.back() != multiplicity)
    throw PrecisionError("eigenspace dimension unresolved; raise precision");
  return nullity;
}

std::optional<CertifiedReal> circle_angle(std::complex<double> z, const std::vector<AngleRecord>& circle) {
  for (const auto& r : circle)
    if (std::abs(unit(r.alpha.approx()) - z) < 1e-6) return r.alpha;
  return std::nullopt;
}

std::string format_complex(std::complex<double> z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

HVS hvs_from_seifert(const SeifertMatrix& s) {
  HVS out;
  out.dim_u = s.mu();
  out.epsilon = s.epsilon();
  if (s.mu() == 0) return out;
  if (determinant(s.matrix()) == 0) throw SingularMatrixError("HVS requires det S ≠ 0");
  out.v = inverse(s.matrix()).transpose();
  const RatMatrix vt_inv = inverse(out.v.transpose());
  out.h = Rational(-out.epsilon) * (out.v * vt_inv);
  out.b = Rational(-1) * inverse(out.v) - Rational(out.epsilon) * vt_inv;
  return out;
}

HvsAxioms check_axioms(const HVS& hvs) {
  const auto id = RatMatrix::identity(hvs.dim_u);
  const Rational eps = hvs.epsilon;
  HvsAxioms ax;
  ax.variation = hvs.v * hvs.b == hvs.h - id;
  ax.variation_symmetry = hvs.v.transpose() == Rational(-eps) * (hvs.v * hvs.h.transpose());
  ax.preserves_b = hvs.h.transpose() * hvs.b * hvs.h == hvs.b;
  ax.form_symmetry = hvs.b.transpose() == eps * hvs.b;
  return ax;
}

RatPoly monodromy_charpoly(const HVS& hvs) {
  if (hvs.dim_u == 0) return RatPoly(Rational(1));
  // For a structure coming from an integral Seifert form S = (V^T)^{-1},
  // det(tI - h) = det(t·S + ε·S^T) / det S, which the multi-modular pencil
  // determinant handles quickly. Anything else goes through Hessenberg.
  try {
    const RatMatrix s = inverse(hvs.v.transpose());
    bool integral = true;
    for (std::size_t i = 0; i < s.rows() && integral; ++i)
      for (std::size_t j = 0; j < s.cols() && integral; ++j) integral = is_integer(s(i, j));
    if (integral && hvs.h == Rational(-hvs.epsilon) * (hvs.v * s))
      return pencil_determinant(s, hvs.epsilon, s.transpose()).monic();
  } catch (const SingularMatrixError&) {
  }
  return RatPoly(characteristic_coefficients(hvs.h));
}

int JordanData::total() const {
  int t = 0;
  for (const auto& b : blocks) t += b.size * b.count;
  return t;
}

JordanData jordan_data(const HVS& hvs, const NumericOptions& opts) {
  JordanData out;
  if (hvs.dim_u == 0) return out;
  const RatPoly chi = monodromy_charpoly(hvs);
  const auto split = split_cyclotomic(chi);

  for (const auto& [m, mult] : split.factors) {
    // Galois conjugate eigenvalues share one Jordan structure.
    const auto blocks = blocks_from_nullities(exact_nullities(hvs.h, m, mult));
    for (long k = 1; k <= m; ++k) {
      if (std::gcd(k, m) != 1) continue;
      const Rational a = make_rational(k, m);
      for (const auto& [size, count] : blocks)
        out.blocks.push_back({unit(to_double(a)), CertifiedReal::exact(a), size, count});
    }
  }

  if (split.cofactor.degree() > 0) {
    const auto circle = unit_circle_roots(split.cofactor, RootOptions{opts.precision_bits});
    for (const auto& [factor, mult] : squarefree_decomposition(split.cofactor)) {
      for (const auto& lambda : numeric_roots(factor)) {
        const auto blocks =
            blocks_from_nullities(numeric_nullities(hvs.h, lambda, mult, opts.relative_tol));
        const auto angle = std::abs(std::abs(lambda) - 1) < 1e-6 ? circle_angle(lambda, circle)
                                                                 : std::nullopt;
        for (const auto& [size, count] : blocks) out.blocks.push_back({lambda, angle, size, count});
      }
    }
  }
  std::sort(out.blocks.begin(), out.blocks.end(), [](const JordanBlock& a, const JordanBlock& b) {
    const double aa = std::arg(a.lambda), ab = std::arg(b.lambda);
    if (aa != ab) return aa < ab;
    return a.size < b.size;
  });
  return out;
}

std::vector<UnitBlock> semisimple_signs(const HVS& hvs, const NumericOptions& opts) {
  std::vector<UnitBlock> out;
  const std::size_t mu = hvs.dim_u;
  if (mu == 0) return out;
  const RatPoly chi = monodromy_charpoly(hvs);
  const auto roots = unit_circle_roots(chi, RootOptions{opts.precision_bits});
  if (total_multiplicity(roots) != static_cast<int>(mu))
    throw OffCircleError("monodromy has eigenvalues off the unit circle");

  // h is semisimple iff f(h) has nullity d·deg f for every square-free part f
  // of multiplicity d.
  for (const auto& [f, d] : squarefree_decomposition(chi))
    if (d > 1 && mu - rank_rational(evaluate(f, hvs.h)) != static_cast<std::size_t>(d * f.degree()))
      throw UnsupportedError("sign classification beyond k=1 unsupported");

  // Seifert form S = (V^T)^{-1}; unlike b it stays nondegenerate on the
  // eigenspace of 1.
  const ComplexMatrix s = to_complex(inverse(hvs.v.transpose()));
  const ComplexMatrix h = to_complex(hvs.h);
  // Hermitianizing constant: 1 for ε = -1, i for ε = +1.
  const std::complex<double> c = hvs.epsilon == 1 ? std::complex<double>(0, 1) : 1.0;

  for (const auto& r : roots) {
    // The jump at θ is governed by the eigenspace of conj(λ), angle θ' = 1 - θ.
    const bool at_one = r.alpha.is_exact() && r.alpha.value() == 1;
    const int d = r.multiplicity;

    const double th_conj = at_one ? 0.0 : 1.0 - r.alpha.approx();
    const std::complex<double> lam_conj = unit(th_conj);
    const ComplexMatrix shifted = h - lam_conj * ComplexMatrix::Identity(mu, mu);
    const Singular svd = singular_system(shifted);
    const double scale = std::max(1.0, svd.values(0));
    const ComplexMatrix x = svd.vectors.rightCols(d);
    ComplexMatrix g = c * std::polar(1.0, -std::numbers::pi * th_conj) * (x.adjoint() * s * x);
    g = (0.5 * (g + g.adjoint())).eval();
    const Inertia in = hermitian_inertia(g, scaled_tolerance(g, opts.relative_tol) + 1e-12 * scale);
    if (in.n_zero != 0) throw PrecisionError("degenerate eigenspace form; raise precision");
    const long sig = in.signature();
    const int m_lower = static_cast<int>((d - sig) / 2);
    const int m_upper = d - m_lower;
    // u = -1 puts the block at the lower value for θ < 1 and at 2 for θ = 1.
    if (at_one) {
      out.push_back({r.alpha, 1, +1, m_lower});
      out.push_back({r.alpha, 1, -1, m_upper});
    } else {
      out.push_back({r.alpha, 1, -1, m_lower});
      out.push_back({r.alpha, 1, +1, m_upper});
    }
  }
  std::erase_if(out, [](const UnitBlock& b) { return b.count == 0; });
  return out;
}

Spectrum extract_spectrum(const SeifertMatrix& s, const NumericOptions& opts) {
  Spectrum sp;
  const std::size_t mu = s.mu();
  if (mu == 0) return sp;
  if (determinant(s.matrix()) == 0) throw SingularMatrixError("spectrum requires det S ≠ 0");

  const RatPoly delta = alexander(s);
  const auto roots = unit_circle_roots(delta, RootOptions{opts.precision_bits});
  if (total_multiplicity(roots) < delta.degree()) {
    std::complex<double> worst = 1.0;
    for (const auto& z : numeric_roots(delta))
      if (std::abs(std::abs(z) - 1) > std::abs(std::abs(worst) - 1)) worst = z;
    throw OffCircleError("monodromy eigenvalue " + format_complex(worst) + " lies off the unit circle");
  }

  const auto prof = signature_profile(s, opts, ProfileOptions{false});
  std::vector<long> f;
  for (const auto& iv : prof.intervals) {
    const long twice = static_cast<long>(mu) - iv.value.sigma;
    if (twice % 2 != 0) throw CalibrationError("convention calibration violated or input non-geometric");
    f.push_back(twice / 2);
  }

  auto checked = [](long twice) {
    if (twice < 0 || twice % 2 != 0)
      throw CalibrationError("convention calibration violated or input non-geometric");
    return static_cast<int>(twice / 2);
  };

  for (std::size_t k = 0; k < prof.jumps.size(); ++k) {
    const auto& jump = prof.jumps[k];
    const long jmp = f[k + 1] - f[k];
    sp.add(jump.alpha, checked(jump.multiplicity - jmp));
    sp.add(jump.alpha.shifted(Rational(1)), checked(jump.multiplicity + jmp));
  }

  int mu_one = 0;
  for (const auto& r : roots)
    if (r.alpha.is_exact() && r.alpha.value() == 1) mu_one = r.multiplicity;
  const long f0 = f.front(), f1 = f.back(), m = static_cast<long>(mu);
  sp.add(CertifiedReal::exact(1), checked(mu_one + f0 + f1 - m));
  sp.add(CertifiedReal::exact(2), checked(mu_one - f0 - f1 + m));
  return sp;
}

}  // namespace hypersig
