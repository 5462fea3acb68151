#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "hypersig/certified_real.hpp"

namespace hypersig {

struct SpectralEntry {
  CertifiedReal value;
  int multiplicity = 0;
};

/// Multiset of spectral numbers in (0, 2], kept sorted with equal values merged.
class Spectrum {
 public:
  Spectrum() = default;
  static Spectrum from_values(const std::vector<Rational>& values);

  void add(const CertifiedReal& value, int multiplicity);
  const std::vector<SpectralEntry>& entries() const { return entries_; }
  int total() const;
  bool empty() const { return entries_.empty(); }

  /// Multiplicity of an exact value (0 if absent).
  int multiplicity_of(const Rational& value) const;

  friend bool operator==(const Spectrum& a, const Spectrum& b);

 private:
  std::vector<SpectralEntry> entries_;
};

/// Off-circle part of the extended spectrum: z = α + iβ with multiplicity.
struct ISpEntry {
  std::complex<double> z;
  int multiplicity = 0;
};
using ISp = std::vector<ISpEntry>;

/// p_λ^k(u) data: `count` copies of W_λ^k(u), λ = e^{2πi·angle}, angle ∈ (0, 1].
struct UnitBlock {
  CertifiedReal angle;
  int size = 1;
  int u = 1;
  int count = 0;
};

/// q_λ^k data: `count` copies of V_λ^{2k}, 0 < |λ| < 1.
struct OffCircleBlock {
  std::complex<double> lambda;
  int size = 1;
  int count = 0;
};

/// Spectrum and ISp from decomposition multiplicities. Throws InputError on
/// malformed block data.
std::pair<Spectrum, ISp> spectrum_from_decomposition(const std::vector<UnitBlock>& p_data,
                                                     const std::vector<OffCircleBlock>& q_data);

/// Folds a spectrum in (0, n+1) into (0, 2] by subtracting even integers.
Spectrum mod2_reduce(const std::vector<Rational>& full_spectrum, int n);

struct IntervalCount {
  /// Multiplicity in the open interval (α, α+1).
  int inside = 0;
  /// Multiplicity in (0, α) ∪ (α+1, 2].
  int outside = 0;
  /// Multiplicity exactly at α or α+1.
  int boundary = 0;
};

IntervalCount interval_count(const Spectrum& sp, const Rational& alpha);

}  // namespace hypersig
