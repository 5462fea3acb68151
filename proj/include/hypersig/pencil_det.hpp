#pragma once

#include "hypersig/matrix.hpp"
#include "hypersig/polynomial.hpp"

namespace hypersig {

/// det(t·a + c·b) exactly, for integer matrices a (nonsingular), b and c = ±1.
/// Computed modulo word-size primes and recombined by CRT under a Hadamard
/// coefficient bound.
RatPoly pencil_determinant(const RatMatrix& a, int c, const RatMatrix& b);

}  // namespace hypersig
