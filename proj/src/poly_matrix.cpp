#include "hypersig/poly_matrix.hpp"

#include <optional>
#include <utility>

namespace hypersig {

namespace {

void swap_rows(PolyMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(PolyMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// Position of a nonzero entry of least degree in the trailing block.
std::optional<std::pair<std::size_t, std::size_t>> min_degree_entry(const PolyMatrix& m, std::size_t k) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  int best_deg = 0;
  for (std::size_t i = k; i < m.rows(); ++i)
    for (std::size_t j = k; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      int d = m(i, j).degree();
      if (!best || d < best_deg) {
        best = {i, j};
        best_deg = d;
        if (d == 0) return best;
      }
    }
  return best;
}

}  // namespace

PolyMatrix linear_pencil(const RatMatrix& a, const Rational& c, const RatMatrix& b) {
  PolyMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = RatPoly({c * b(i, j), a(i, j)});
  return out;
}

std::vector<RatPoly> invariant_factors(const PolyMatrix& input) {
  if (!input.is_square()) throw InputError("invariant_factors: non-square matrix");
  PolyMatrix m = input;
  const std::size_t n = m.rows();
  std::vector<RatPoly> diag(n);
  for (std::size_t k = 0; k < n; ++k) {
    bool done = false;
    while (!done) {
      auto pos = min_degree_entry(m, k);
      if (!pos) return diag;  // trailing block is zero
      swap_rows(m, k, pos->first);
      swap_cols(m, k, pos->second);
      const RatPoly pivot = m(k, k);
      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m(i, k).is_zero()) continue;
        RatPoly q = m(i, k) / pivot;
        for (std::size_t j = k; j < n; ++j) m(i, j) -= q * m(k, j);
        if (!m(i, k).is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (m(k, j).is_zero()) continue;
        RatPoly q = m(k, j) / pivot;
        for (std::size_t i = k; i < n; ++i) m(i, j) -= q * m(i, k);
        if (!m(k, j).is_zero()) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any row whose entries the pivot fails to divide.
      std::optional<std::size_t> offender;
      for (std::size_t i = k + 1; i < n && !offender; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!(m(i, j) % pivot).is_zero()) {
            offender = i;
            break;
          }
      if (offender) {
        for (std::size_t j = k; j < n; ++j) m(k, j) += m(*offender, j);
        continue;
      }
      done = true;
    }
    diag[k] = m(k, k).monic();
  }
  return diag;
}

}  // namespace hypersig
