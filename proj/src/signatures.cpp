#include "hypersig/signatures.hpp"

#include <cmath>
#include <numbers>

#include "hypersig/cyclotomic.hpp"
#include "hypersig/unit_circle.hpp"

namespace hypersig {

CirclePoint::CirclePoint(Rational alpha) : alpha_(std::move(alpha)) {
  if (!(alpha_ > 0 && alpha_ < 1))
    throw InputError("circle point: alpha must lie in (0, 1), got " + to_string(alpha_));
}

std::complex<double> CirclePoint::xi() const {
  const double a = alpha_.get_d();
  return std::polar(1.0, 2.0 * std::numbers::pi * a);
}

ComplexMatrix hermitian_pencil(const SeifertMatrix& s, const CirclePoint& p) {
  const std::size_t mu = s.mu();
  const std::complex<double> xi = p.xi();
  const std::complex<double> a = 1.0 - xi;
  // (-1)^{n+1} = -ε
  const std::complex<double> b = static_cast<double>(-s.epsilon()) * (1.0 - std::conj(xi));
  const std::complex<double> scale = s.n() % 2 == 0 ? kEvenHermitianization : 1.0;
  ComplexMatrix h(mu, mu);
  const RatMatrix& m = s.matrix();
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j)
      h(i, j) = scale * (a * m(i, j).get_d() + b * m(j, i).get_d());
  return h;
}

// The nullity is decided exactly; floating point only signs the rest. A
// purely relative tolerance cannot tell a vanishing pencil from rounding noise.
Inertia pencil_inertia(const SeifertMatrix& s, const CirclePoint& p, const NumericOptions& opts) {
  return NullityOracle(s).inertia(p, opts);
}

long lt_signature(const SeifertMatrix& s, const CirclePoint& p, const NumericOptions& opts) {
  return pencil_inertia(s, p, opts).signature();
}

std::size_t lt_nullity(const SeifertMatrix& s, const CirclePoint& p, const NumericOptions& opts) {
  return pencil_inertia(s, p, opts).n_zero;
}

namespace {

// dim ker(ζ_q^k·m + ε·m^T) over Q(ζ_q); proportional to the pencil at ξ.
std::size_t field_nullity(const RatMatrix& m, int epsilon, long q, long k) {
  const std::size_t mu = m.rows();
  if (mu == 0) return 0;
  CyclotomicField field(q);
  const auto z = field.zeta_power(k);
  const Rational eps = epsilon;
  DenseMatrix<CyclotomicField::Element> h(mu, mu);
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j) h(i, j) = field.reduce(z * m(i, j) + RatPoly(eps * m(j, i)));
  return mu - field.rank(std::move(h));
}

}  // namespace

NullityOracle::NullityOracle(const SeifertMatrix& s) : s_(s), keef_(keef_reduce(s)), delta_(hypersig::alexander(s)) {}

std::size_t NullityOracle::operator()(const CirclePoint& p) const {
  if (s_.mu() == 0) return 0;
  const long q = p.alpha().get_den().get_si();
  const long k = p.alpha().get_num().get_si();
  if (keef_.warning) return field_nullity(s_.matrix(), s_.epsilon(), q, k);
  // The reduced pencil is regular with determinant ∝ Δ, so its nullity at ξ
  // is 0 off the roots and lies in [1, m] at a root of multiplicity m.
  const RatPoly phi = cyclotomic_polynomial(q);
  int mult = 0;
  for (RatPoly d = delta_; d.degree() >= phi.degree(); ++mult) {
    auto [quot, rem] = divmod(d, phi);
    if (!rem.is_zero()) break;
    d = std::move(quot);
  }
  if (mult <= 1) return keef_.n0 + static_cast<std::size_t>(mult);
  return keef_.n0 + field_nullity(keef_.s_ndeg, s_.epsilon(), q, k);
}

Inertia NullityOracle::inertia(const CirclePoint& p, const NumericOptions& opts) const {
  const ComplexMatrix h = hermitian_pencil(s_, p);
  return hermitian_inertia_with_nullity(h, (*this)(p), scaled_tolerance(h, opts.relative_tol));
}

std::size_t lt_nullity_exact(const SeifertMatrix& s, const CirclePoint& p) { return NullityOracle(s)(p); }

std::vector<Rational> interior_points(const CertifiedReal& lo, const CertifiedReal& hi, int count) {
  std::vector<Rational> out;
  if (lo.is_exact() && hi.is_exact()) {
    const Rational step = (hi.value() - lo.value()) / (count + 1);
    for (int j = 1; j <= count; ++j) out.push_back(lo.value() + step * j);
    return out;
  }
  const Rational a = lo.is_exact() ? lo.value() : Rational(lo.hi());
  const Rational b = hi.is_exact() ? hi.value() : Rational(hi.lo());
  if (!(a < b)) throw PrecisionError("adjacent root enclosures overlap; raise precision");
  const Rational step = (b - a) / (count + 1);
  for (int j = 1; j <= count; ++j) {
    Rational centre = a + step * j;
    out.push_back(simplest_between(centre - step / 4, centre + step / 4));
  }
  return out;
}

std::vector<AngleRecord> jump_angles(const SeifertMatrix& s, const NumericOptions& opts) {
  std::vector<AngleRecord> out;
  for (auto& r : unit_circle_roots(alexander(s), RootOptions{opts.precision_bits}))
    if (compare(r.alpha, Rational(1)) < 0) out.push_back(std::move(r));
  return out;
}

std::size_t SignatureProfile::interval_index(const Rational& alpha) const {
  std::size_t k = 0;
  while (k < jumps.size() && compare(jumps[k].alpha, alpha) < 0) ++k;
  return k;
}

SignatureProfile signature_profile(const SeifertMatrix& s, const NumericOptions& opts,
                                   const ProfileOptions& profile_opts) {
  SignatureProfile prof;
  const NullityOracle oracle(s);
  prof.mu = s.mu();
  prof.n0 = oracle.n0();
  for (auto& r : unit_circle_roots(oracle.alexander(), RootOptions{opts.precision_bits}))
    if (compare(r.alpha, Rational(1)) < 0) prof.jumps.push_back(std::move(r));

  std::vector<CertifiedReal> bounds{CertifiedReal::exact(0)};
  for (const auto& j : prof.jumps) bounds.push_back(j.alpha);
  bounds.push_back(CertifiedReal::exact(1));
  for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
    ProfileInterval iv{bounds[k], bounds[k + 1], interior_points(bounds[k], bounds[k + 1], 1).front(), {}};
    Inertia in = oracle.inertia(CirclePoint(iv.sample), opts);
    iv.value = {in.signature(), in.n_zero};
    prof.intervals.push_back(std::move(iv));
  }

  prof.at_jumps.resize(prof.jumps.size());
  if (profile_opts.evaluate_jumps) {
    for (std::size_t k = 0; k < prof.jumps.size(); ++k) {
      const auto& a = prof.jumps[k].alpha;
      if (!a.is_exact()) continue;
      try {
        const Inertia in = oracle.inertia(CirclePoint(a.value()), opts);
        prof.at_jumps[k] = ProfileValue{in.signature(), in.n_zero};
      } catch (const PrecisionError&) {
        // left unevaluated
      }
    }
  }
  return prof;
}

}  // namespace hypersig
