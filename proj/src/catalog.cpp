#include "hypersig/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "hypersig/errors.hpp"

namespace hypersig {

RatMatrix one_var_seifert(int a) {
  if (a < 2) throw InputError("one_var_seifert: exponent must be ≥ 2, got " + std::to_string(a));
  const std::size_t m = static_cast<std::size_t>(a - 1);
  RatMatrix s(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    s(i, i) = -1;
    if (i + 1 < m) s(i, i + 1) = 1;
  }
  return s;
}

TsBlock thom_sebastiani(const TsBlock& a, const TsBlock& b) {
  const int sign = (a.variables * b.variables) % 2 == 0 ? 1 : -1;
  return {Rational(sign) * kronecker(a.matrix, b.matrix), a.variables + b.variables};
}

SeifertMatrix brieskorn(const std::vector<int>& exponents) {
  if (exponents.size() < 2) throw InputError("brieskorn: need at least two exponents");
  TsBlock acc{one_var_seifert(exponents[0]), 1};
  for (std::size_t i = 1; i < exponents.size(); ++i)
    acc = thom_sebastiani(acc, TsBlock{one_var_seifert(exponents[i]), 1});
  std::string name = "brieskorn:";
  for (std::size_t i = 0; i < exponents.size(); ++i)
    name += (i ? "," : "") + std::to_string(exponents[i]);
  return SeifertMatrix(acc.variables - 1, std::move(acc.matrix), name);
}

std::vector<Rational> brieskorn_spectrum_oracle(const std::vector<int>& exponents) {
  for (int a : exponents)
    if (a < 2) throw InputError("brieskorn exponents must be ≥ 2");
  std::vector<Rational> out;
  std::vector<int> k(exponents.size(), 1);
  if (exponents.empty()) return out;
  for (;;) {
    Rational v = 0;
    for (std::size_t i = 0; i < k.size(); ++i) v += make_rational(k[i], exponents[i]);
    out.push_back(v);
    std::size_t i = 0;
    while (i < k.size() && k[i] == exponents[i] - 1) k[i++] = 1;
    if (i == k.size()) break;
    ++k[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> a_k_exponents(int k, int n) {
  if (k < 1 || n < 1) throw InputError("A_k needs k ≥ 1 and n ≥ 1");
  std::vector<int> e(static_cast<std::size_t>(n), 2);
  e.push_back(k + 1);
  return e;
}

namespace {

SeifertMatrix named(const std::vector<int>& e, std::string name) {
  SeifertMatrix s = brieskorn(e);
  return SeifertMatrix(s.n(), s.matrix(), std::move(name));
}

SeifertMatrix a_k(int k, int n) { return named(a_k_exponents(k, n), "A" + std::to_string(k) + "@" + std::to_string(n)); }

DeformationInstance instance(const SeifertMatrix& c, std::vector<SeifertMatrix> locals) {
  std::string name = *c.name() + " -> ";
  for (std::size_t i = 0; i < locals.size(); ++i) name += (i ? " + " : "") + *locals[i].name();
  return DeformationInstance{name, c, std::move(locals), false, true};
}

}  // namespace

std::vector<DeformationInstance> adjacency_examples() {
  std::vector<DeformationInstance> out;
  for (int n = 1; n <= 3; ++n) {
    for (int k = 2; k <= 6; ++k)
      for (int j = 1; j < k; ++j) out.push_back(instance(a_k(k, n), {a_k(j, n)}));
    for (int k = 1; k <= 6; ++k) out.push_back(instance(a_k(k, n), {a_k(k, n)}));
    // Several Morse-type points splitting off one A_k: Σ (j_i + 1) ≤ k + 1.
    for (int k = 2; k <= 6; ++k)
      for (int j1 = 1; j1 < k; ++j1)
        for (int j2 = 1; j2 <= j1; ++j2)
          if ((j1 + 1) + (j2 + 1) <= k + 1) out.push_back(instance(a_k(k, n), {a_k(j1, n), a_k(j2, n)}));
  }
  const auto d4 = named({3, 3}, "D4");
  const auto e6 = named({3, 4}, "E6");
  const auto e8 = named({3, 5}, "E8");
  out.push_back(instance(d4, {a_k(3, 1)}));
  out.push_back(instance(d4, {a_k(2, 1)}));
  out.push_back(instance(d4, {a_k(1, 1)}));
  out.push_back(instance(d4, {a_k(1, 1), a_k(1, 1), a_k(1, 1)}));
  out.push_back(instance(e6, {a_k(5, 1)}));
  out.push_back(instance(e6, {d4}));
  out.push_back(instance(e8, {e6}));
  out.push_back(instance(e8, {a_k(7, 1)}));
  return out;
}

std::vector<DeformationInstance> reversed_examples() {
  std::vector<DeformationInstance> out;
  for (const auto& inst : adjacency_examples()) {
    if (inst.locals.size() != 1 || inst.locals[0].mu() == inst.central.mu()) continue;
    auto rev = instance(inst.locals[0], {inst.central});
    rev.expected_holds = false;
    out.push_back(std::move(rev));
  }
  return out;
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw InputError("unknown catalog name '" + std::string(whole) + "'");
  return v;
}

}  // namespace

std::vector<int> catalog_exponents(std::string_view name) {
  if (name == "unknot") return {};
  if (name == "trefoil") return {2, 3};
  if (name == "D4") return {3, 3};
  if (name == "E6") return {3, 4};
  if (name == "E8") return {3, 5};
  if (name.starts_with("brieskorn:")) {
    std::vector<int> e;
    std::string_view rest = name.substr(10);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      e.push_back(parse_int(rest.substr(0, comma), name));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (e.size() < 2) throw InputError("brieskorn: need at least two exponents in '" + std::string(name) + "'");
    for (int a : e)
      if (a < 2) throw InputError("brieskorn exponents must be ≥ 2 in '" + std::string(name) + "'");
    return e;
  }
  if (name.size() >= 2 && name[0] == 'A') {
    const auto at = name.find('@');
    const int k = parse_int(name.substr(1, at == std::string_view::npos ? name.npos : at - 1), name);
    const int n = at == std::string_view::npos ? 1 : parse_int(name.substr(at + 1), name);
    if (k < 1 || n < 1) throw InputError("unknown catalog name '" + std::string(name) + "'");
    return a_k_exponents(k, n);
  }
  throw InputError("unknown catalog name '" + std::string(name) + "'");
}

SeifertMatrix catalog_entry(std::string_view name) {
  const auto e = catalog_exponents(name);
  if (e.empty()) return SeifertMatrix(1, RatMatrix(0, 0), std::string(name));
  return named(e, std::string(name));
}

}  // namespace hypersig
