#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "hypersig/matrix.hpp"
#include "hypersig/options.hpp"
#include "hypersig/seifert.hpp"
#include "hypersig/spectrum.hpp"

namespace hypersig {

/// Simple hermitian variation structure (U; b, h, V) over Q, ε = ±1.
struct HVS {
  std::size_t dim_u = 0;
  int epsilon = -1;
  RatMatrix b, h, v;
};

/// V = (S^{-1})^T, h = -ε V (V^T)^{-1}, b = -V^{-1} - ε (V^T)^{-1}.
/// Throws SingularMatrixError when det S = 0.
HVS hvs_from_seifert(const SeifertMatrix& s);

struct HvsAxioms {
  bool variation = false;          // V b = h - I
  bool variation_symmetry = false; // V^T = -ε V h^T
  bool preserves_b = false;        // h^T b h = b
  bool form_symmetry = false;      // b^T = ε b
  bool all() const { return variation && variation_symmetry && preserves_b && form_symmetry; }
};

/// Exact check of the structure identities.
HvsAxioms check_axioms(const HVS& hvs);

/// Characteristic polynomial det(t·I - h), lowest degree first.
RatPoly monodromy_charpoly(const HVS& hvs);

struct JordanBlock {
  std::complex<double> lambda;
  /// Angle in (0, 1] when λ is on the unit circle (exact for roots of unity).
  std::optional<CertifiedReal> angle;
  int size = 1;
  int count = 0;
};

struct JordanData {
  std::vector<JordanBlock> blocks;
  int total() const;
};

/// Jordan structure of h. Roots of unity use exact ranks over Q(ζ_m); other
/// eigenvalues use numeric ranks and throw PrecisionError("... raise precision")
/// when a rank decision falls inside the ambiguity band.
JordanData jordan_data(const HVS& hvs, const NumericOptions& opts = {});

/// p_λ^1(u) multiplicities for a semisimple h with all eigenvalues on the
/// unit circle. Throws UnsupportedError when h is not semisimple and
/// OffCircleError when an eigenvalue lies off the circle.
std::vector<UnitBlock> semisimple_signs(const HVS& hvs, const NumericOptions& opts = {});

/// Spectrum from the signature jumps of S. Throws SingularMatrixError,
/// OffCircleError or CalibrationError.
Spectrum extract_spectrum(const SeifertMatrix& s, const NumericOptions& opts = {});

}  // namespace hypersig
