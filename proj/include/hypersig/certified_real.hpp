#pragma once

#include <optional>
#include <string>

#include "hypersig/rational.hpp"

namespace hypersig {

/// A real number known either exactly (rational) or through a certified
/// enclosure [lo, hi].
class CertifiedReal {
 public:
  CertifiedReal() = default;
  static CertifiedReal exact(Rational q);
  static CertifiedReal enclosure(double lo, double hi);

  bool is_exact() const { return exact_.has_value(); }
  const Rational& value() const { return *exact_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double approx() const;
  double width() const { return is_exact() ? 0.0 : hi_ - lo_; }

  /// this + q, keeping exactness.
  CertifiedReal shifted(const Rational& q) const;

  /// "p/q" when exact, otherwise a 17-digit decimal of the midpoint.
  std::string to_string() const;

 private:
  std::optional<Rational> exact_;
  double lo_ = 0;
  double hi_ = 0;
};

/// Certified comparison; overlapping enclosures fall back to midpoints.
int compare(const CertifiedReal& a, const CertifiedReal& b);
int compare(const CertifiedReal& a, const Rational& b);
inline bool operator<(const CertifiedReal& a, const CertifiedReal& b) { return compare(a, b) < 0; }
bool same_value(const CertifiedReal& a, const CertifiedReal& b);

/// A root e^{2πiα} on the unit circle, α ∈ (0, 1], with multiplicity.
struct AngleRecord {
  CertifiedReal alpha;
  int multiplicity = 0;
  /// Order of the root of unity when cyclotomic, 0 otherwise.
  long order = 0;
};

}  // namespace hypersig
