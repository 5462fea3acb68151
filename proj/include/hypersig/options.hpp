#pragma once

#include "hypersig/inertia.hpp"

namespace hypersig {

/// Numerical knobs shared by the signature and spectrum routines.
struct NumericOptions {
  /// Eigenvalues within relative_tol · ‖H‖ of zero count as zero.
  double relative_tol = kDefaultRelativeTolerance;
  /// Enclosure refinement for non-cyclotomic unit-circle roots.
  int precision_bits = 64;
};

}  // namespace hypersig
