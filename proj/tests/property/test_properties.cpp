// Randomized properties; every generator is seeded so failures reproduce.
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "generators.hpp"
#include "hypersig/catalog.hpp"
#include "hypersig/cyclotomic.hpp"
#include "hypersig/hvs.hpp"
#include "hypersig/inertia.hpp"
#include "hypersig/poly_matrix.hpp"
#include "hypersig/semicontinuity.hpp"
#include "hypersig/signatures.hpp"
#include "hypersig/unit_circle.hpp"

using namespace hypersig;
using namespace hypersig::testing;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

// Random α ∈ (0, 1) with small denominator.
Rational random_alpha(std::mt19937& rng) {
  std::uniform_int_distribution<long> den(2, 60);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(1, d - 1);
  return make_rational(num(rng), d);
}

bool is_root_angle(const std::vector<AngleRecord>& roots, const Rational& a) {
  for (const auto& r : roots)
    if (r.alpha.is_exact() ? r.alpha.value() == a : compare(r.alpha, a) == 0) return true;
  return false;
}

RatPoly poly_det(const PolyMatrix& m) {
  const std::size_t k = m.rows();
  if (k == 0) return RatPoly(Rational(1));
  if (k == 1) return m(0, 0);
  RatPoly out;
  for (std::size_t j = 0; j < k; ++j) {
    if (m(0, j).is_zero()) continue;
    PolyMatrix minor(k - 1, k - 1);
    for (std::size_t r = 1; r < k; ++r)
      for (std::size_t c = 0, cc = 0; c < k; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    RatPoly term = m(0, j) * poly_det(minor);
    out = (j % 2 == 0) ? out + term : out - term;
  }
  return out;
}

// gcd of all r×r minors of a square polynomial matrix.
RatPoly minor_gcd(const PolyMatrix& m, std::size_t r) {
  const std::size_t k = m.rows();
  RatPoly g;
  std::vector<std::size_t> rows(r), cols(r);
  std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, const std::function<void()>&)> choose =
      [&](std::size_t start, std::size_t depth, std::vector<std::size_t>& sel, const std::function<void()>& f) {
        if (depth == r) return f();
        for (std::size_t i = start; i < k; ++i) {
          sel[depth] = i;
          choose(i + 1, depth + 1, sel, f);
        }
      };
  choose(0, 0, rows, [&] {
    choose(0, 0, cols, [&] {
      PolyMatrix sub(r, r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) sub(i, j) = m(rows[i], cols[j]);
      g = gcd(g, poly_det(sub));
    });
  });
  return g.is_zero() ? g : g.monic();
}

ComplexMatrix random_hermitian(std::mt19937& rng, int k) {
  std::normal_distribution<double> d;
  ComplexMatrix a(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a(i, j) = {d(rng), d(rng)};
  return a + a.adjoint();
}

}  // namespace

TEST_CASE("rank + kernel dimension = columns") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<std::size_t> dim(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    // Low rank products show up often this way.
    const std::size_t inner = dim(rng);
    RatMatrix m = random_matrix(rng, r, inner, -2, 2) * random_matrix(rng, inner, c, -2, 2);
    const auto ker = kernel_basis(m);
    CHECK(rank_rational(m) + ker.size() == c);
    for (const auto& v : ker) {
      RatMatrix col(c, 1);
      for (std::size_t i = 0; i < c; ++i) col(i, 0) = v[i];
      CHECK((m * col).is_zero());
    }
  }
}

TEST_CASE("invariant factors multiply to the minor gcd") {
  std::mt19937 rng(202);
  std::uniform_int_distribution<int> rank_pick(2, 4);
  for (int trial = 0; trial < 25; ++trial) {
    // Rank of the pencil is at most r: factor through r-dimensional space.
    const std::size_t r = static_cast<std::size_t>(rank_pick(rng));
    RatMatrix left = random_matrix(rng, 4, r, -2, 2), right = random_matrix(rng, r, 4, -2, 2);
    RatMatrix a = left * random_matrix(rng, r, r, -2, 2) * right;
    RatMatrix b = left * random_matrix(rng, r, r, -2, 2) * right;
    const PolyMatrix p = linear_pencil(a, Rational(1), b);
    const auto f = invariant_factors(p);
    REQUIRE(f.size() == 4);
    std::size_t nonzero = 0;
    RatPoly prod(Rational(1));
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i].is_zero()) {
        for (std::size_t j = i; j < f.size(); ++j) CHECK(f[j].is_zero());
        break;
      }
      CHECK(f[i].leading() == 1);
      if (i > 0) CHECK((f[i] % f[i - 1]).is_zero());
      prod = prod * f[i];
      ++nonzero;
    }
    if (nonzero == 0) continue;
    CHECK(prod == minor_gcd(p, nonzero));
    if (nonzero < 4) CHECK(minor_gcd(p, nonzero + 1).is_zero());
  }
}

TEST_CASE("inertia is invariant under congruence") {
  std::mt19937 rng(303);
  std::normal_distribution<double> d;
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 7;
    ComplexMatrix h = random_hermitian(rng, k);
    // Force a kernel sometimes.
    if (trial % 3 == 0 && k > 1) {
      ComplexMatrix v = ComplexMatrix::Zero(k, k - 1);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k - 1; ++j) v(i, j) = {d(rng), d(rng)};
      h = v * random_hermitian(rng, k - 1) * v.adjoint();
    }
    ComplexMatrix p(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) p(i, j) = {d(rng), d(rng)};
    p += 3.0 * ComplexMatrix::Identity(k, k);
    const ComplexMatrix g = p.adjoint() * h * p;
    const auto a = hermitian_inertia(h, scaled_tolerance(h));
    const auto b = hermitian_inertia(g, scaled_tolerance(g));
    CHECK(a == b);
    CHECK(a.size() == static_cast<std::size_t>(k));
  }
}

TEST_CASE("unit-circle roots of a product are the union") {
  std::mt19937 rng(404);
  std::uniform_int_distribution<long> order(1, 30);
  for (int trial = 0; trial < 40; ++trial) {
    const long m1 = order(rng), m2 = order(rng);
    const RatPoly f = cyclotomic_polynomial(m1) * RatPoly({2, -3, 2});
    const RatPoly g = cyclotomic_polynomial(m2) * RatPoly({1, 0, 3});  // 3t²+1 has no circle roots
    const auto rf = unit_circle_roots(f), rg = unit_circle_roots(g), rfg = unit_circle_roots(f * g);
    CHECK(total_multiplicity(rfg) == total_multiplicity(rf) + total_multiplicity(rg));
    std::map<Rational, int> want, got;
    for (const auto* rs : {&rf, &rg})
      for (const auto& r : *rs)
        if (r.alpha.is_exact()) want[r.alpha.value()] += r.multiplicity;
    for (const auto& r : rfg)
      if (r.alpha.is_exact()) got[r.alpha.value()] += r.multiplicity;
    CHECK(want == got);
    CHECK(total_multiplicity(rg) == euler_phi(m2));
  }
}

TEST_CASE("Alexander polynomial normalization and padding") {
  std::mt19937 rng(505);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = trial % 2 ? random_seifert(rng, 6, false) : random_degenerate_seifert(rng, 5);
    const RatPoly d = alexander(s);
    CHECK(d.leading() > 0);
    CHECK(d.coeff(0) != 0);
    for (int k = 0; k <= d.degree(); ++k) CHECK(is_integer(d.coeff(k)));
    CHECK(normalize_integral(d) == d);
    const std::size_t pad = 1 + static_cast<std::size_t>(trial % 3);
    const auto p = s.padded(pad);
    CHECK(alexander(p) == d);
    CHECK(n0(p) == n0(s) + pad);
    const auto kd = keef_reduce(s);
    if (!kd.warning) CHECK(kd.s_ndeg.rows() + kd.n0 == s.mu());
  }
}

TEST_CASE("signature symmetry under α ↦ 1 - α") {
  std::mt19937 rng(606);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = random_seifert(rng, 6, trial % 2 == 0);
    const Rational a = random_alpha(rng);
    const auto sa = lt_signature(s, CirclePoint(a)), sb = lt_signature(s, CirclePoint(1 - a));
    if (s.n() % 2 == 1)
      CHECK(sa == sb);
    else
      CHECK(sa == -sb);
  }
  for (const char* name : {"A3", "A3@2", "E6", "D4", "brieskorn:2,2,3", "brieskorn:3,3,4"}) {
    const auto s = catalog_entry(name);
    for (const auto& a : {q(1, 7), q(2, 9), q(1, 3)}) {
      const auto sa = lt_signature(s, CirclePoint(a)), sb = lt_signature(s, CirclePoint(1 - a));
      CHECK((s.n() % 2 == 1 ? sa == sb : sa == -sb));
    }
  }
}

TEST_CASE("nullity off the roots equals n0; |σ| ≤ μ - nullity") {
  std::mt19937 rng(707);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = trial % 2 ? random_seifert(rng, 6, false) : random_degenerate_seifert(rng, 5);
    const auto roots = unit_circle_roots(alexander(s));
    const std::size_t base = n0(s);
    const NullityOracle oracle(s);
    for (int k = 0; k < 6; ++k) {
      const Rational a = random_alpha(rng);
      const CirclePoint p(a);
      const auto nu = oracle(p);
      if (!is_root_angle(roots, a)) {
        CHECK(nu == base);
        CHECK(lt_nullity(s, p) == base);
      } else {
        CHECK(nu > base);
      }
      CHECK(std::labs(lt_signature(s, p)) + static_cast<long>(nu) <= static_cast<long>(s.mu()));
    }
  }
}

TEST_CASE("profile: σ constant on each interval, nullity n0 inside") {
  std::mt19937 rng(808);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = trial % 2 ? random_seifert(rng, 6, true) : random_degenerate_seifert(rng, 5);
    const auto prof = signature_profile(s);
    REQUIRE(prof.intervals.size() == prof.jumps.size() + 1);
    for (const auto& iv : prof.intervals) {
      CHECK(iv.value.nullity == prof.n0);
      for (const auto& a : interior_points(iv.lo, iv.hi, 3)) {
        const CirclePoint p(a);
        CHECK(lt_signature(s, p) == iv.value.sigma);
        CHECK(lt_nullity_exact(s, p) == prof.n0);
      }
    }
    for (std::size_t j = 0; j < prof.jumps.size(); ++j)
      if (prof.at_jumps[j]) {
        CHECK(prof.at_jumps[j]->nullity > prof.n0);
        CHECK(std::labs(prof.at_jumps[j]->sigma) + static_cast<long>(prof.at_jumps[j]->nullity) <=
              static_cast<long>(s.mu()));
      }
  }
}

TEST_CASE("padding shifts nullity and keeps σ") {
  std::mt19937 rng(909);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = random_seifert(rng, 5, trial % 2 == 0);
    const auto p = s.padded(2);
    const auto a = signature_profile(s), b = signature_profile(p);
    REQUIRE(a.intervals.size() == b.intervals.size());
    for (std::size_t i = 0; i < a.intervals.size(); ++i) {
      CHECK(a.intervals[i].value.sigma == b.intervals[i].value.sigma);
      CHECK(b.intervals[i].value.nullity == a.intervals[i].value.nullity + 2);
    }
    for (std::size_t j = 0; j < a.jumps.size(); ++j)
      if (a.at_jumps[j] && b.at_jumps[j]) {
        CHECK(a.at_jumps[j]->sigma == b.at_jumps[j]->sigma);
        CHECK(b.at_jumps[j]->nullity == a.at_jumps[j]->nullity + 2);
      }
  }
}

TEST_CASE("HVS axioms on random nondegenerate input") {
  std::mt19937 rng(1001);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = random_seifert(rng, 7, true);
    const auto hvs = hvs_from_seifert(s);
    CHECK(check_axioms(hvs).all());
    CHECK(monodromy_charpoly(hvs).monic() == alexander(s).monic());
  }
}

TEST_CASE("mod2_reduce preserves total multiplicity") {
  std::mt19937 rng(1102);
  std::uniform_int_distribution<int> nd(1, 5), len(0, 12), den(1, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = nd(rng);
    std::vector<Rational> values;
    for (int i = len(rng); i > 0; --i) {
      const long d = den(rng);
      std::uniform_int_distribution<long> num(1, (n + 1) * d - 1);
      values.push_back(make_rational(num(rng), d));
    }
    const auto sp = mod2_reduce(values, n);
    CHECK(sp.total() == static_cast<int>(values.size()));
    for (const auto& e : sp.entries()) {
      CHECK(compare(e.value, Rational(0)) > 0);
      CHECK(compare(e.value, Rational(2)) <= 0);
    }
  }
}

TEST_CASE("Brieskorn oracle: Thom-Sebastiani is a Minkowski sum") {
  for (const auto& [e1, e2] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
           {{2, 3}, {2}}, {{3, 4}, {5}}, {{2, 2}, {3, 3}}, {{2, 5}, {3, 2}}}) {
    std::vector<Rational> sum;
    // One-exponent "oracle" is {k/a}.
    auto single = [](const std::vector<int>& e) {
      if (e.size() >= 2) return brieskorn_spectrum_oracle(e);
      std::vector<Rational> v;
      for (int k = 1; k < e[0]; ++k) v.push_back(make_rational(k, e[0]));
      return v;
    };
    for (const auto& x : single(e1))
      for (const auto& y : single(e2)) sum.push_back(x + y);
    std::sort(sum.begin(), sum.end());
    std::vector<int> joined = e1;
    joined.insert(joined.end(), e2.begin(), e2.end());
    CHECK(brieskorn_spectrum_oracle(joined) == sum);
  }
}

TEST_CASE("Brieskorn Alexander roots sit at the oracle angles") {
  for (const auto& e : brieskorn_lists(24, 4)) {
    std::map<Rational, int> want;
    for (const auto& v : brieskorn_spectrum_oracle(e)) {
      Rational a = v - Rational(floor(v));
      if (a == 0) a = 1;
      want[a] += 1;
    }
    std::map<Rational, int> got;
    for (const auto& r : unit_circle_roots(alexander(brieskorn(e)))) {
      REQUIRE(r.alpha.is_exact());
      got[r.alpha.value()] += r.multiplicity;
    }
    CHECK(want == got);
    CHECK(brieskorn(e).mu() == static_cast<std::size_t>(milnor_number(e)));
  }
}

TEST_CASE("check_local on (X, [X]) has zero slack") {
  for (const auto& e : brieskorn_lists(12, 3)) {
    const auto s = brieskorn(e);
    DeformationInstance inst{"self", s, {s}, false, true};
    const auto rep = check_local(inst);
    CHECK(rep.verdict == Verdict::holds);
    for (const auto& r : rep.records) {
      CHECK(r.slack_inside == 0);
      CHECK(r.slack_outside == 0);
    }
  }
}
