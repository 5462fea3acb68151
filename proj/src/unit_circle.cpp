#include "hypersig/unit_circle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <numeric>

#include "hypersig/cyclotomic.hpp"
#include "hypersig/errors.hpp"

namespace hypersig {

CyclotomicSplit split_cyclotomic(const RatPoly& p) {
  if (p.is_zero()) throw InputError("split_cyclotomic: zero polynomial");
  CyclotomicSplit out;
  RatPoly rest = p;
  for (long m : orders_with_phi_at_most(std::max(rest.degree(), 0))) {
    if (euler_phi(m) > rest.degree()) continue;
    RatPoly phi = cyclotomic_polynomial(m);
    int count = 0;
    for (;;) {
      auto [q, r] = divmod(rest, phi);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++count;
    }
    if (count) out.factors.emplace_back(m, count);
  }
  out.cofactor = std::move(rest);
  return out;
}

namespace {

int sign(const Rational& q) { return sgn(q); }

// Sturm chain of a square-free polynomial.
std::vector<RatPoly> sturm_chain(const RatPoly& f) {
  std::vector<RatPoly> chain{f, f.derivative()};
  while (chain.back().degree() > 0) {
    RatPoly r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    // Positive rescaling keeps signs; monic-ish scaling tames coefficient growth.
    Rational lead = abs(r.leading());
    chain.push_back(r * Rational(-1 / lead));
  }
  return chain;
}

int sign_changes(const std::vector<RatPoly>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sign(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

struct XRoot {
  Rational lo, hi;  // lo == hi for an exactly known root
};

// Roots of square-free f in (a, b); f(a), f(b) nonzero.
void isolate(const RatPoly& f, const std::vector<RatPoly>& chain, Rational a, Rational b,
             const Rational& width, std::vector<XRoot>& out) {
  int count = sign_changes(chain, a) - sign_changes(chain, b);
  if (count == 0) return;
  if (count == 1) {
    int sa = sign(f(a));
    while (b - a > width) {
      Rational m = (a + b) / 2;
      int sm = sign(f(m));
      if (sm == 0) {
        out.push_back({m, m});
        return;
      }
      if (sm == sa)
        a = m;
      else
        b = m;
    }
    out.push_back({a, b});
    return;
  }
  Rational m = (a + b) / 2;
  if (f(m) == 0) {
    out.push_back({m, m});
    Rational eps = (b - a) / 4;
    while (sign_changes(chain, m - eps) - sign_changes(chain, m + eps) != 1 || f(m - eps) == 0 ||
           f(m + eps) == 0)
      eps /= 2;
    isolate(f, chain, a, m - eps, width, out);
    isolate(f, chain, m + eps, b, width, out);
    return;
  }
  isolate(f, chain, a, m, width, out);
  isolate(f, chain, m, b, width, out);
}

// For palindromic g of degree 2d, the polynomial r with g(t) = t^d r(t + 1/t).
RatPoly chebyshev_fold(const RatPoly& g) {
  const int deg = g.degree();
  if (deg % 2) throw Error("chebyshev_fold: odd degree reciprocal factor");
  const int d = deg / 2;
  for (int k = 0; k <= d; ++k)
    if (g.coeff(d + k) != g.coeff(d - k)) throw Error("chebyshev_fold: factor is not palindromic");
  // P_0 = 2, P_1 = x, P_k = x P_{k-1} - P_{k-2};  t^k + t^-k = P_k(t + 1/t).
  RatPoly x = RatPoly::t();
  RatPoly prev(Rational(2)), cur = x;
  RatPoly r(g.coeff(d));
  for (int k = 1; k <= d; ++k) {
    r += cur * g.coeff(d + k);
    RatPoly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return r;
}

double acos_angle(double x) {
  double c = std::clamp(x / 2.0, -1.0, 1.0);
  return std::acos(c) / (2.0 * std::numbers::pi);
}

}  // namespace

std::vector<AngleRecord> unit_circle_roots(const RatPoly& p, const RootOptions& opts) {
  if (p.is_zero()) throw InputError("unit_circle_roots: zero polynomial");
  std::vector<AngleRecord> out;
  auto split = split_cyclotomic(p);
  for (auto [m, mult] : split.factors)
    for (long k = 1; k <= m; ++k)
      if (std::gcd(k, m) == 1)
        out.push_back({CertifiedReal::exact(Rational(k, m)), mult, m});

  RatPoly rest = split.cofactor;
  // Drop roots at t = 0.
  std::size_t shift = 0;
  while (shift < rest.coeffs().size() && rest.coeffs()[shift] == 0) ++shift;
  if (shift) rest = RatPoly(std::vector<Rational>(rest.coeffs().begin() + shift, rest.coeffs().end()));

  if (rest.degree() >= 2) {
    // Unit-circle roots are shared with the reciprocal polynomial.
    RatPoly g = gcd(rest, rest.reversed());
    Rational width = Rational(1);
    width /= Rational(Integer(1) << opts.precision_bits);
    for (auto& [f, mult] : squarefree_decomposition(g)) {
      RatPoly r = chebyshev_fold(f);
      if (r.degree() < 1) continue;
      auto chain = sturm_chain(r);
      std::vector<XRoot> xs;
      isolate(r, chain, Rational(-2), Rational(2), width, xs);
      for (const auto& x : xs) {
        // α(x) = acos(x/2)/2π is decreasing in x; pad by a few ulps.
        const double pad = 8 * DBL_EPSILON;
        double a_lo = acos_angle(x.hi.get_d()) - pad;
        double a_hi = acos_angle(x.lo.get_d()) + pad;
        out.push_back({CertifiedReal::enclosure(a_lo, a_hi), mult, 0});
        out.push_back({CertifiedReal::enclosure(1.0 - a_hi, 1.0 - a_lo), mult, 0});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const AngleRecord& a, const AngleRecord& b) { return a.alpha < b.alpha; });
  return out;
}

std::vector<std::complex<double>> numeric_roots(const RatPoly& p) {
  if (p.degree() < 1) return {};
  const int n = p.degree();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  const double lead = p.leading().get_d();
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.coeffs()[i].get_d() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < n; ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

int total_multiplicity(const std::vector<AngleRecord>& roots) {
  int total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  return total;
}

}  // namespace hypersig
