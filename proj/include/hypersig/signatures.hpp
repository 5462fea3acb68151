#pragma once

#include <optional>
#include <vector>

#include "hypersig/certified_real.hpp"
#include "hypersig/inertia.hpp"
#include "hypersig/options.hpp"
#include "hypersig/seifert.hpp"

namespace hypersig {

/// ξ = e^{2πiα} with α ∈ (0, 1); ξ = 1 is excluded.
class CirclePoint {
 public:
  explicit CirclePoint(Rational alpha);
  const Rational& alpha() const { return alpha_; }
  std::complex<double> xi() const;

 private:
  Rational alpha_;
};

/// (1-ξ)S + (-1)^{n+1}(1-ξ̄)S^T for odd n; i times that for even n, where the
/// plain pencil is skew-hermitian.
ComplexMatrix hermitian_pencil(const SeifertMatrix& s, const CirclePoint& p);

/// Global factor applied to the pencil for even n. Fixed once so that the
/// signature/spectrum identity holds on the Brieskorn catalog.
inline constexpr std::complex<double> kEvenHermitianization{0.0, 1.0};

Inertia pencil_inertia(const SeifertMatrix& s, const CirclePoint& p, const NumericOptions& opts = {});
long lt_signature(const SeifertMatrix& s, const CirclePoint& p, const NumericOptions& opts = {});
std::size_t lt_nullity(const SeifertMatrix& s, const CirclePoint& p, const NumericOptions& opts = {});

/// Exact nullity at rational α = k/q. Off the roots of Δ it is n₀, at a simple
/// root n₀ + 1; repeated roots take the rank of the reduced pencil over Q(ζ_q).
class NullityOracle {
 public:
  explicit NullityOracle(const SeifertMatrix& s);
  std::size_t operator()(const CirclePoint& p) const;
  /// Inertia of the hermitian pencil at p with the nullity fixed exactly.
  Inertia inertia(const CirclePoint& p, const NumericOptions& opts = {}) const;

  std::size_t n0() const { return keef_.n0; }
  const RatPoly& alexander() const { return delta_; }

 private:
  SeifertMatrix s_;
  KeefDecomposition keef_;
  RatPoly delta_;
};

std::size_t lt_nullity_exact(const SeifertMatrix& s, const CirclePoint& p);

struct ProfileValue {
  long sigma = 0;
  std::size_t nullity = 0;
};

struct ProfileInterval {
  /// Open interval (lo, hi) of angles; lo = 0 and hi = 1 are virtual bounds.
  CertifiedReal lo, hi;
  /// Exact evaluation point inside the interval.
  Rational sample;
  ProfileValue value;
};

struct SignatureProfile {
  std::size_t mu = 0;
  std::size_t n0 = 0;
  /// Roots of the Alexander polynomial at angles in (0, 1), ascending.
  std::vector<AngleRecord> jumps;
  /// jumps.size() + 1 intervals.
  std::vector<ProfileInterval> intervals;
  /// Values exactly at each jump; empty optional when the jump angle is
  /// irrational or jump evaluation was not requested.
  std::vector<std::optional<ProfileValue>> at_jumps;

  /// Index of the interval containing α (α must avoid the jumps).
  std::size_t interval_index(const Rational& alpha) const;
};

struct ProfileOptions {
  bool evaluate_jumps = true;
};

SignatureProfile signature_profile(const SeifertMatrix& s, const NumericOptions& opts = {},
                                   const ProfileOptions& profile_opts = {});

/// `count` exact rationals strictly inside (lo, hi), evenly placed; with
/// count = 1 and exact endpoints this is the midpoint.
std::vector<Rational> interior_points(const CertifiedReal& lo, const CertifiedReal& hi, int count);

/// Angles of roots of the Alexander polynomial in (0, 1).
std::vector<AngleRecord> jump_angles(const SeifertMatrix& s, const NumericOptions& opts = {});

}  // namespace hypersig
