#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypersig/matrix.hpp"
#include "hypersig/polynomial.hpp"

namespace hypersig {

/// Integer Seifert matrix of a (2n-1)-dimensional link in S^{2n+1}.
/// The 0x0 matrix is the unknot.
class SeifertMatrix {
 public:
  /// Throws InputError unless `entries` is square and integral and n ≥ 1.
  SeifertMatrix(int n, RatMatrix entries, std::optional<std::string> name = std::nullopt);
  SeifertMatrix(int n, std::initializer_list<std::initializer_list<long long>> rows,
                std::optional<std::string> name = std::nullopt);

  int n() const { return n_; }
  /// (-1)^n
  int epsilon() const { return n_ % 2 == 0 ? 1 : -1; }
  std::size_t mu() const { return s_.rows(); }
  const RatMatrix& matrix() const { return s_; }
  const std::optional<std::string>& name() const { return name_; }

  /// S ⊕ 0_k
  SeifertMatrix padded(std::size_t k) const;

 private:
  int n_;
  RatMatrix s_;
  std::optional<std::string> name_;
};

struct KeefDecomposition {
  /// Reduced block; nonsingular unless `warning` is set.
  RatMatrix s_ndeg;
  std::size_t n0 = 0;
  /// Integral invertible P with P^T S P = s_ndeg ⊕ 0_{n0}.
  RatMatrix transform;
  /// Set when s_ndeg is still singular: the pencil carries Kronecker blocks
  /// that no genuine link Seifert matrix has.
  bool warning = false;
};

/// dim(ker S ∩ ker S^T) over Q.
std::size_t n0(const SeifertMatrix& s);

KeefDecomposition keef_reduce(const SeifertMatrix& s);

/// Alexander polynomial normalized to integer coefficients with content 1,
/// positive leading coefficient and nonzero constant term.
RatPoly alexander(const SeifertMatrix& s);

/// Product of the nonzero invariant factors of t·S + (-1)^n S^T, normalized as
/// alexander(). Independent of the determinant route used for reduced inputs.
RatPoly alexander_from_invariant_factors(const SeifertMatrix& s);

/// b = -ε S - S^T.
RatMatrix intersection_form(const SeifertMatrix& s);

/// h = -ε (S^T)^{-1} S. Throws SingularMatrixError for singular S.
RatMatrix monodromy(const SeifertMatrix& s);

}  // namespace hypersig
