#include <doctest.h>

#include <algorithm>

#include "hypersig/catalog.hpp"
#include "hypersig/errors.hpp"
#include "hypersig/hvs.hpp"
#include "hypersig/semicontinuity.hpp"

using namespace hypersig;

namespace {
Rational q(long p, long d = 1) { return make_rational(p, d); }
std::vector<CertifiedReal> exact_angles(std::initializer_list<Rational> xs) {
  std::vector<CertifiedReal> out;
  for (const auto& x : xs) out.push_back(CertifiedReal::exact(x));
  return out;
}
DeformationInstance deformation(const char* central, std::vector<const char*> locals) {
  DeformationInstance inst{central, catalog_entry(central), {}, false, true};
  for (auto l : locals) inst.locals.push_back(catalog_entry(l));
  return inst;
}
}  // namespace

TEST_CASE("mk_bound") {
  auto r = mk_bound(-3, -2, 0, 0, {6, 3, 2});
  CHECK(r.lhs == 1);
  CHECK(r.rhs == 1);
  CHECK(r.holds);
  CHECK(mk_bound(5, 5, 0, 0, {1, 0, 0}).holds);
  auto f = mk_bound(4, 0, 0, 0, {2, 0, 0});
  CHECK(f.rhs == 2);
  CHECK_FALSE(f.holds);
}

TEST_CASE("local_global_bound") {
  const auto a3 = catalog_entry("A3"), a2 = catalog_entry("A2");
  const CirclePoint minus_one(q(1, 2));
  CHECK(lt_signature(a3, minus_one) == -3);
  CHECK(lt_signature(a2, minus_one) == -2);
  auto r = local_global_bound(a3, {a2}, minus_one, 6);
  CHECK(r.lhs == 1);
  CHECK(r.rhs == 1);
  CHECK(r.holds);
  // Same numbers through mk_bound.
  auto m = mk_bound(-3, -2, 0, 0, {6, 3, 2});
  CHECK(m.lhs == r.lhs);
  CHECK(m.rhs == r.rhs);

  auto none = local_global_bound(a3, {}, minus_one, 6);
  CHECK(none.lhs == 3);
  CHECK(none.rhs == 3);

  auto self = local_global_bound(a3, {a3}, minus_one, 6);
  CHECK(self.lhs == 0);
  CHECK(self.rhs == 0);
  CHECK(self.holds);

  CHECK_THROWS_AS(local_global_bound(a3, {catalog_entry("A2@2")}, minus_one, 6), InputError);
}

TEST_CASE("admissible_alphas") {
  CHECK(admissible_alphas(exact_angles({q(1, 6), q(5, 6)})) == std::vector<Rational>{q(1, 12), q(1, 2), q(11, 12)});
  CHECK(admissible_alphas(std::vector<CertifiedReal>{}) == std::vector<Rational>{q(1, 2)});
  CHECK(admissible_alphas(exact_angles({q(1, 3), q(2, 3)})) == std::vector<Rational>{q(1, 6), q(1, 2), q(5, 6)});
  // Angle 1 and duplicates do not split (0, 1) further.
  CHECK(admissible_alphas(exact_angles({q(1), q(1, 2), q(1, 2)})) == std::vector<Rational>{q(1, 4), q(3, 4)});
}

TEST_CASE("check_local") {
  auto rep = check_local(deformation("A3", {"A2"}));
  CHECK(rep.verdict == Verdict::holds);
  auto half = std::find_if(rep.records.begin(), rep.records.end(), [](const auto& r) { return r.alpha == q(1, 2); });
  REQUIRE(half != rep.records.end());
  CHECK(half->lhs_inside == 3);
  CHECK(half->rhs_inside == 2);
  CHECK(half->lhs_outside == 0);
  CHECK(half->rhs_outside == 0);

  auto same = check_local(deformation("E6", {"E6"}));
  CHECK(same.verdict == Verdict::holds);
  for (const auto& r : same.records) {
    CHECK(r.slack_inside == 0);
    CHECK(r.slack_outside == 0);
  }

  auto rev = check_local(deformation("A2", {"A3"}));
  CHECK(rev.verdict == Verdict::fails);
  auto h2 = std::find_if(rev.records.begin(), rev.records.end(), [](const auto& r) { return r.alpha == q(1, 2); });
  REQUIRE(h2 != rev.records.end());
  CHECK(h2->lhs_inside == 2);
  CHECK(h2->rhs_inside == 3);

  CHECK(check_local(deformation("A3", {})).verdict == Verdict::vacuous);
  CHECK_THROWS_AS(check_local(deformation("A3", {"A2@2"})), InputError);
}

TEST_CASE("check_local strict mode") {
  SemicontinuityOptions strict;
  strict.strict = true;
  auto rep = check_local(deformation("A3", {"A2"}), strict);
  CHECK(rep.verdict == Verdict::holds);
  for (const auto& r : rep.records) {
    REQUIRE(r.strict.has_value());
    CHECK(r.strict->rhs == 1);
  }
  // Too small a cobordism: forced failure.
  strict.strict_b1 = 0;
  CHECK(check_local(deformation("A3", {"A2"}), strict).verdict == Verdict::fails);
  // n ≥ 2: strict mode never contributes.
  auto high = check_local(deformation("A3@2", {"A2@2"}), strict);
  CHECK(high.verdict == Verdict::holds);
  for (const auto& r : high.records) CHECK_FALSE(r.strict.has_value());
}

TEST_CASE("check_infinity") {
  const auto a3 = Spectrum::from_values({q(3, 4), q(1), q(5, 4)});
  const auto a2 = Spectrum::from_values({q(5, 6), q(7, 6)});
  auto eq = check_infinity(a3, a3, spectrum_angles(a3));
  CHECK(eq.verdict == Verdict::holds);
  for (const auto& r : eq.records) CHECK(r.slack_inside == 0);
  CHECK(check_infinity(a3, a2, spectrum_angles(a3)).verdict == Verdict::holds);
  const auto half = Spectrum::from_values({q(1, 2)});
  CHECK(check_infinity(half, Spectrum::from_values({q(1, 2), q(3, 2)}), spectrum_angles(half)).verdict ==
        Verdict::fails);
}

TEST_CASE("check_local_to_global") {
  const auto inf = mod2_reduce(brieskorn_spectrum_oracle({2, 2, 3}), 2);
  auto rep = check_local_to_global(inf, {Spectrum::from_values({q(3, 2)})}, spectrum_angles(inf));
  auto half = std::find_if(rep.records.begin(), rep.records.end(), [](const auto& r) { return r.alpha == q(1, 2); });
  REQUIRE(half != rep.records.end());
  CHECK(half->lhs_inside == 1);
  CHECK(half->rhs_inside == 0);
  CHECK(check_local_to_global(inf, {}, spectrum_angles(inf)).verdict == Verdict::vacuous);
  CHECK(check_local_to_global(inf, {inf, inf}, spectrum_angles(inf)).verdict == Verdict::fails);
}

TEST_CASE("spectrum_angles folds into (0, 1]") {
  auto a = spectrum_angles(Spectrum::from_values({q(1, 2), q(1), q(7, 6), q(2)}));
  REQUIRE(a.size() == 4);
  CHECK(a[0].value() == q(1, 2));
  CHECK(a[1].value() == q(1));
  CHECK(a[2].value() == q(1, 6));
  CHECK(a[3].value() == q(1));
}

TEST_CASE("the local bound implies the interval inequality") {
  // Recompute inside-slack from signatures and compare with the report.
  for (const auto& inst : adjacency_examples()) {
    if (inst.central.n() != 1 || inst.locals.size() != 1) continue;
    auto rep = check_local(inst);
    const long mu0 = static_cast<long>(inst.central.mu());
    for (const auto& r : rep.records) {
      const CirclePoint p(r.alpha);
      auto bound = local_global_bound(inst.central, inst.locals, p, 2 * mu0);
      CHECK(bound.holds);
      const long s0 = lt_signature(inst.central, p);
      const long s1 = lt_signature(inst.locals[0], p);
      const long mu1 = static_cast<long>(inst.locals[0].mu());
      if (lt_nullity_exact(inst.locals[0], p) != 0) continue;
      CHECK(2 * r.slack_inside == (mu0 - s0) - (mu1 - s1));
    }
  }
}

TEST_CASE("reports are independent of enumeration order") {
  const auto a = check_local(deformation("E8", {"E6"}));
  const auto b = check_local(deformation("E8", {"E6"}));
  REQUIRE(a.records.size() == b.records.size());
  CHECK(std::is_sorted(a.records.begin(), a.records.end(),
                       [](const auto& x, const auto& y) { return x.alpha < y.alpha; }));
  for (std::size_t i = 0; i < a.records.size(); ++i) CHECK(a.records[i].slack_inside == b.records[i].slack_inside);
}
