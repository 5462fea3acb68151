#pragma once

#include <complex>
#include <vector>

#include "hypersig/certified_real.hpp"
#include "hypersig/polynomial.hpp"

namespace hypersig {

struct RootOptions {
  /// Non-cyclotomic roots are refined until their t + 1/t enclosure is
  /// narrower than 2^-precision_bits.
  int precision_bits = 64;
};

/// All roots of p on the unit circle as angles α ∈ (0, 1] (root e^{2πiα}),
/// sorted by α, with multiplicity. Cyclotomic roots carry exact angles.
std::vector<AngleRecord> unit_circle_roots(const RatPoly& p, const RootOptions& opts = {});

/// Cyclotomic factors of p: pairs (m, multiplicity of Φ_m), and the cofactor.
struct CyclotomicSplit {
  std::vector<std::pair<long, int>> factors;
  RatPoly cofactor;
};
CyclotomicSplit split_cyclotomic(const RatPoly& p);

/// Numerical roots (companion matrix eigenvalues), repeated by multiplicity.
std::vector<std::complex<double>> numeric_roots(const RatPoly& p);

/// Sum of multiplicities.
int total_multiplicity(const std::vector<AngleRecord>& roots);

}  // namespace hypersig
