#pragma once

#include <vector>

#include "hypersig/matrix.hpp"
#include "hypersig/polynomial.hpp"

namespace hypersig {

using PolyMatrix = DenseMatrix<RatPoly>;

/// Invariant factors of a square matrix over Q[t] (Smith normal form
/// diagonal). Nonzero factors are monic and each divides the next; rank
/// deficiency over Q(t) shows up as zero polynomials at the tail.
std::vector<RatPoly> invariant_factors(const PolyMatrix& p);

/// The pencil t·a + c·b as a polynomial matrix.
PolyMatrix linear_pencil(const RatMatrix& a, const Rational& c, const RatMatrix& b);

}  // namespace hypersig
