#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hypersig/seifert.hpp"
#include "hypersig/semicontinuity.hpp"

namespace hypersig {

/// Seifert block of x^a: (a-1)x(a-1), -1 on the diagonal, +1 above it.
RatMatrix one_var_seifert(int a);

/// A Seifert block together with its number of variables (n + 1).
struct TsBlock {
  RatMatrix matrix;
  int variables = 1;
};

/// (-1)^{v₁·v₂} · S₁ ⊗ S₂ on v₁ + v₂ variables.
TsBlock thom_sebastiani(const TsBlock& a, const TsBlock& b);

/// Seifert matrix of x₀^{a₀} + ... + x_n^{a_n}; needs at least two exponents ≥ 2.
SeifertMatrix brieskorn(const std::vector<int>& exponents);

/// { Σ k_i/a_i : 1 ≤ k_i ≤ a_i - 1 } by direct enumeration.
std::vector<Rational> brieskorn_spectrum_oracle(const std::vector<int>& exponents);

/// A_k in n+1 variables: brieskorn(2, ..., 2, k+1).
std::vector<int> a_k_exponents(int k, int n);

/// Curated deformations whose local semicontinuity is expected to hold.
std::vector<DeformationInstance> adjacency_examples();

/// Single-local curated adjacencies with central and local swapped; each is
/// expected to fail.
std::vector<DeformationInstance> reversed_examples();

/// Catalog lookup: "A<k>", "A<k>@<n>", "D4", "E6", "E8", "trefoil", "unknot",
/// "brieskorn:a,b,...". Throws InputError for unknown names.
SeifertMatrix catalog_entry(std::string_view name);

/// Exponents behind a catalog name, empty for "unknot". Throws InputError.
std::vector<int> catalog_exponents(std::string_view name);

}  // namespace hypersig
