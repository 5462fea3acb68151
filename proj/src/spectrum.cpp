#include "hypersig/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypersig/errors.hpp"

namespace hypersig {

Spectrum Spectrum::from_values(const std::vector<Rational>& values) {
  Spectrum sp;
  for (const auto& v : values) sp.add(CertifiedReal::exact(v), 1);
  return sp;
}

void Spectrum::add(const CertifiedReal& value, int multiplicity) {
  if (multiplicity < 0) throw InputError("negative spectral multiplicity");
  if (multiplicity == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), value,
                             [](const SpectralEntry& e, const CertifiedReal& v) { return e.value < v; });
  if (it != entries_.end() && same_value(it->value, value)) {
    it->multiplicity += multiplicity;
    return;
  }
  entries_.insert(it, SpectralEntry{value, multiplicity});
}

int Spectrum::total() const {
  int t = 0;
  for (const auto& e : entries_) t += e.multiplicity;
  return t;
}

int Spectrum::multiplicity_of(const Rational& value) const {
  for (const auto& e : entries_)
    if (e.value.is_exact() && e.value.value() == value) return e.multiplicity;
  return 0;
}

bool operator==(const Spectrum& a, const Spectrum& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    if (a.entries_[k].multiplicity != b.entries_[k].multiplicity ||
        !same_value(a.entries_[k].value, b.entries_[k].value))
      return false;
  return true;
}

std::pair<Spectrum, ISp> spectrum_from_decomposition(const std::vector<UnitBlock>& p_data,
                                                     const std::vector<OffCircleBlock>& q_data) {
  Spectrum sp;
  for (const auto& blk : p_data) {
    if (blk.size < 1 || blk.count < 0 || (blk.u != 1 && blk.u != -1))
      throw InputError("malformed W block: size ≥ 1, count ≥ 0 and u = ±1 required");
    if (!(compare(blk.angle, Rational(0)) > 0 && compare(blk.angle, Rational(1)) <= 0))
      throw InputError("malformed W block: angle must lie in (0, 1]");
    // The two values in (0, 2] with e^{2πiα} = λ, and their floors.
    const bool at_one = blk.angle.is_exact() && blk.angle.value() == 1;
    const CertifiedReal lower = blk.angle;
    const CertifiedReal upper = blk.angle.shifted(Rational(1));
    const int floor_lower = at_one ? 1 : 0;
    const int floor_upper = at_one ? 2 : 1;
    auto weight = [&](int fl) {
      const int sign_term = blk.u * (fl % 2 == 0 ? 1 : -1);
      if (blk.size % 2 == 1) return (blk.size - sign_term) / 2;  // (2n-1 - u(-1)^⌊α⌋)/2
      return blk.size / 2;                                       // n for size 2n
    };
    sp.add(lower, weight(floor_lower) * blk.count);
    sp.add(upper, weight(floor_upper) * blk.count);
  }

  ISp isp;
  for (const auto& blk : q_data) {
    const double r = std::abs(blk.lambda);
    if (!(r > 0 && r < 1) || blk.size < 1 || blk.count < 0)
      throw InputError("malformed V block: 0 < |λ| < 1, size ≥ 1 and count ≥ 0 required");
    if (blk.count == 0) continue;
    double alpha = std::arg(blk.lambda) / (2 * std::numbers::pi);
    if (alpha <= 0) alpha += 1;  // α ∈ (0, 1]
    const double beta = -std::log(r) / (2 * std::numbers::pi);
    // e^{2πiz} = λ with α ≤ 1, β > 0, and e^{2πiz} = 1/λ̄ with α > 1, β < 0.
    const int mult = blk.size * blk.count;
    isp.push_back({{alpha, beta}, mult});
    isp.push_back({{alpha + 1, -beta}, mult});
  }
  return {std::move(sp), std::move(isp)};
}

Spectrum mod2_reduce(const std::vector<Rational>& full_spectrum, int n) {
  Spectrum sp;
  const Rational top = n + 1;
  for (const auto& v : full_spectrum) {
    if (!(v > 0 && v < top))
      throw InputError("spectral number " + to_string(v) + " outside (0, " + to_string(top) + ")");
    Rational w = v;
    while (w > 2) w -= 2;
    sp.add(CertifiedReal::exact(w), 1);
  }
  return sp;
}

IntervalCount interval_count(const Spectrum& sp, const Rational& alpha) {
  if (alpha < 0 || alpha > 1) throw InputError("interval_count: alpha must lie in [0, 1]");
  const Rational upper = alpha + 1;
  IntervalCount out;
  for (const auto& e : sp.entries()) {
    const int lo = compare(e.value, alpha);
    const int hi = compare(e.value, upper);
    if (lo > 0 && hi < 0)
      out.inside += e.multiplicity;
    else if (lo == 0 || hi == 0)
      out.boundary += e.multiplicity;
    else
      out.outside += e.multiplicity;
  }
  return out;
}

}  // namespace hypersig
