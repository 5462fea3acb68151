#include "hypersig/semicontinuity.hpp"

#include <algorithm>
#include <cstdlib>

#include "hypersig/errors.hpp"
#include "hypersig/hvs.hpp"
#include "hypersig/unit_circle.hpp"

namespace hypersig {

namespace {

void require_same_n(const SeifertMatrix& central, const std::vector<SeifertMatrix>& locals) {
  for (const auto& l : locals)
    if (l.n() != central.n())
      throw InputError("dimension mismatch: central has n = " + std::to_string(central.n()) +
                       ", local has n = " + std::to_string(l.n()));
}

SemicontinuityRecord compare_counts(const Rational& alpha, const Spectrum& big,
                                    const std::vector<const Spectrum*>& parts) {
  SemicontinuityRecord rec;
  rec.alpha = alpha;
  const auto c = interval_count(big, alpha);
  rec.lhs_inside = c.inside;
  rec.lhs_outside = c.outside;
  for (const auto* sp : parts) {
    const auto cj = interval_count(*sp, alpha);
    rec.rhs_inside += cj.inside;
    rec.rhs_outside += cj.outside;
  }
  rec.slack_inside = rec.lhs_inside - rec.rhs_inside;
  rec.slack_outside = rec.lhs_outside - rec.rhs_outside;
  return rec;
}

Verdict verdict_of(const std::vector<SemicontinuityRecord>& records) {
  for (const auto& r : records) {
    if (!r.admissible) continue;
    if (r.slack_inside < 0 || r.slack_outside < 0) return Verdict::fails;
    if (r.strict && !r.strict->holds) return Verdict::fails;
  }
  return Verdict::holds;
}

SemicontinuityReport compare_spectra(Mode mode, const Spectrum& big, const std::vector<const Spectrum*>& parts,
                                     const std::vector<CertifiedReal>& forbidden) {
  SemicontinuityReport rep;
  rep.mode = mode;
  for (const auto& a : admissible_alphas(forbidden)) rep.records.push_back(compare_counts(a, big, parts));
  rep.verdict = verdict_of(rep.records);
  return rep;
}

}  // namespace

BoundRecord mk_bound(long sigma0, long sigma1, long null0, long null1, const CobordismBettiData& betti) {
  BoundRecord r;
  r.lhs = std::labs(sigma0 - sigma1);
  r.rhs = betti.b_n_total - betti.b_n_sigma0 - betti.b_n_sigma1 + null0 + null1;
  r.holds = r.lhs <= r.rhs;
  return r;
}

BoundRecord local_global_bound(const SeifertMatrix& central, const std::vector<SeifertMatrix>& locals,
                               const CirclePoint& p, long smoothing_betti, const NumericOptions& opts) {
  require_same_n(central, locals);
  long sigma_sum = 0, null_sum = 0, mu_sum = 0;
  for (const auto& l : locals) {
    sigma_sum += lt_signature(l, p, opts);
    null_sum += static_cast<long>(lt_nullity_exact(l, p));
    mu_sum += static_cast<long>(l.mu());
  }
  BoundRecord r;
  r.lhs = std::labs(lt_signature(central, p, opts) - sigma_sum);
  r.rhs = smoothing_betti - static_cast<long>(central.mu()) - mu_sum +
          static_cast<long>(lt_nullity_exact(central, p)) + null_sum;
  r.holds = r.lhs <= r.rhs;
  return r;
}

std::vector<Rational> admissible_alphas(const std::vector<CertifiedReal>& forbidden) {
  std::vector<CertifiedReal> inner;
  for (const auto& f : forbidden)
    if (compare(f, Rational(0)) > 0 && compare(f, Rational(1)) < 0) inner.push_back(f);
  std::sort(inner.begin(), inner.end());
  inner.erase(std::unique(inner.begin(), inner.end(), same_value), inner.end());

  std::vector<CertifiedReal> bounds{CertifiedReal::exact(0)};
  bounds.insert(bounds.end(), inner.begin(), inner.end());
  bounds.push_back(CertifiedReal::exact(1));
  std::vector<Rational> out;
  for (std::size_t k = 0; k + 1 < bounds.size(); ++k)
    out.push_back(interior_points(bounds[k], bounds[k + 1], 1).front());
  return out;
}

std::vector<Rational> admissible_alphas(const std::vector<AngleRecord>& forbidden) {
  std::vector<CertifiedReal> angles;
  for (const auto& r : forbidden) angles.push_back(r.alpha);
  return admissible_alphas(angles);
}

std::vector<CertifiedReal> spectrum_angles(const Spectrum& sp) {
  std::vector<CertifiedReal> out;
  for (const auto& e : sp.entries()) {
    CertifiedReal a = e.value;
    while (compare(a, Rational(1)) > 0) a = a.shifted(Rational(-1));
    out.push_back(a);
  }
  return out;
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::local: return "local";
    case Mode::infinity: return "infinity";
    case Mode::local_to_global: return "local_to_global";
  }
  return "local";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::vacuous: return "vacuous";
  }
  return "fails";
}

SemicontinuityReport check_local(const DeformationInstance& inst, const SemicontinuityOptions& opts) {
  require_same_n(inst.central, inst.locals);
  SemicontinuityReport rep;
  rep.mode = Mode::local;
  if (inst.locals.empty()) return rep;  // vacuous

  const Spectrum sp0 = extract_spectrum(inst.central, opts.numeric);
  std::vector<Spectrum> spj;
  for (const auto& l : inst.locals) spj.push_back(extract_spectrum(l, opts.numeric));
  std::vector<const Spectrum*> parts;
  for (const auto& s : spj) parts.push_back(&s);

  const auto forbidden =
      unit_circle_roots(alexander(inst.central), RootOptions{opts.numeric.precision_bits});
  const bool strict = opts.strict && inst.central.n() == 1;
  long b1 = static_cast<long>(inst.central.mu()) + static_cast<long>(inst.locals.size()) - 1;
  for (const auto& l : inst.locals) b1 -= static_cast<long>(l.mu());
  if (opts.strict_b1) b1 = *opts.strict_b1;

  std::vector<NullityOracle> nullity_at;
  if (strict) {
    nullity_at.emplace_back(inst.central);
    for (const auto& l : inst.locals) nullity_at.emplace_back(l);
  }
  for (const auto& a : admissible_alphas(forbidden)) {
    auto rec = compare_counts(a, sp0, parts);
    if (strict) {
      const CirclePoint p(a);
      const Inertia c = nullity_at[0].inertia(p, opts.numeric);
      long sig = c.signature();
      long nul = static_cast<long>(c.n_zero);
      for (std::size_t j = 0; j < inst.locals.size(); ++j) {
        const Inertia l = nullity_at[j + 1].inertia(p, opts.numeric);
        sig -= l.signature();
        nul -= static_cast<long>(l.n_zero);
      }
      StrictRecord s{std::labs(sig) + std::labs(nul), b1, false};
      s.holds = s.lhs <= s.rhs;
      rec.strict = s;
    }
    rep.records.push_back(std::move(rec));
  }
  rep.verdict = verdict_of(rep.records);
  return rep;
}

SemicontinuityReport check_infinity(const Spectrum& sp_t, const Spectrum& sp_0,
                                    const std::vector<CertifiedReal>& forbidden) {
  return compare_spectra(Mode::infinity, sp_t, {&sp_0}, forbidden);
}

SemicontinuityReport check_local_to_global(const Spectrum& sp_inf, const std::vector<Spectrum>& locals,
                                           const std::vector<CertifiedReal>& forbidden) {
  if (locals.empty()) {
    SemicontinuityReport rep;
    rep.mode = Mode::local_to_global;
    return rep;
  }
  std::vector<const Spectrum*> parts;
  for (const auto& s : locals) parts.push_back(&s);
  return compare_spectra(Mode::local_to_global, sp_inf, parts, forbidden);
}

}  // namespace hypersig
