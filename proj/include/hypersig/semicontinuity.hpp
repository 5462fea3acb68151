#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypersig/certified_real.hpp"
#include "hypersig/options.hpp"
#include "hypersig/seifert.hpp"
#include "hypersig/signatures.hpp"
#include "hypersig/spectrum.hpp"

namespace hypersig {

/// b_n of Σ₀ ∪ Y ∪ Σ₁ and of the two Seifert surfaces.
struct CobordismBettiData {
  long b_n_total = 0;
  long b_n_sigma0 = 0;
  long b_n_sigma1 = 0;
};

struct BoundRecord {
  long lhs = 0;
  long rhs = 0;
  bool holds = false;
};

/// |σ₀ - σ₁| ≤ b_total - b₀ - b₁ + null₀ + null₁.
BoundRecord mk_bound(long sigma0, long sigma1, long null0, long null1, const CobordismBettiData& betti);

/// |σ_M - Σ σ_j| ≤ smoothing_betti - μ(M) - Σ μ_j + n_M + Σ n_j at ξ = p.
/// Throws InputError when the matrices do not share n.
BoundRecord local_global_bound(const SeifertMatrix& central, const std::vector<SeifertMatrix>& locals,
                               const CirclePoint& p, long smoothing_betti,
                               const NumericOptions& opts = {});

/// Interval midpoints of (0, 1) minus the forbidden angles; the first and
/// last stand in for α = 0 and α = 1.
std::vector<Rational> admissible_alphas(const std::vector<CertifiedReal>& forbidden);
std::vector<Rational> admissible_alphas(const std::vector<AngleRecord>& forbidden);

/// Angles in (0, 1] of e^{2πi·v} over the values v of a spectrum.
std::vector<CertifiedReal> spectrum_angles(const Spectrum& sp);

struct DeformationInstance {
  std::string name;
  SeifertMatrix central;
  std::vector<SeifertMatrix> locals;
  bool declared_tame = false;
  /// Curated expectation (catalog instances only).
  bool expected_holds = true;
};

enum class Mode { local, infinity, local_to_global };
enum class Verdict { holds, fails, vacuous };
std::string to_string(Mode m);
std::string to_string(Verdict v);

/// n = 1 only: |Δσ| + |Δnull| ≤ b_1(Y, M₀).
struct StrictRecord {
  long lhs = 0;
  long rhs = 0;
  bool holds = false;
};

struct SemicontinuityRecord {
  Rational alpha;
  int lhs_inside = 0, rhs_inside = 0;
  int lhs_outside = 0, rhs_outside = 0;
  int slack_inside = 0, slack_outside = 0;
  bool admissible = true;
  std::optional<StrictRecord> strict;
};

struct SemicontinuityReport {
  Mode mode = Mode::local;
  std::vector<SemicontinuityRecord> records;
  Verdict verdict = Verdict::vacuous;
};

struct SemicontinuityOptions {
  NumericOptions numeric;
  /// Adds the classical n = 1 inequality to the verdict; ignored for n ≥ 2.
  bool strict = false;
  /// b_1(Y, M₀); defaults to μ₀ - Σ μ_j + k - 1.
  std::optional<long> strict_b1;
};

SemicontinuityReport check_local(const DeformationInstance& inst, const SemicontinuityOptions& opts = {});

SemicontinuityReport check_infinity(const Spectrum& sp_t, const Spectrum& sp_0,
                                    const std::vector<CertifiedReal>& forbidden);

SemicontinuityReport check_local_to_global(const Spectrum& sp_inf, const std::vector<Spectrum>& locals,
                                           const std::vector<CertifiedReal>& forbidden);

}  // namespace hypersig
