#include "hypersig/seifert.hpp"

#include "hypersig/pencil_det.hpp"
#include "hypersig/poly_matrix.hpp"

namespace hypersig {

SeifertMatrix::SeifertMatrix(int n, RatMatrix entries, std::optional<std::string> name)
    : n_(n), s_(std::move(entries)), name_(std::move(name)) {
  if (n_ < 1) throw InputError("Seifert matrix: n must be a positive integer");
  if (!s_.is_square()) throw InputError("Seifert matrix must be square");
  for (std::size_t i = 0; i < s_.rows(); ++i)
    for (std::size_t j = 0; j < s_.cols(); ++j)
      if (!is_integer(s_(i, j))) throw InputError("Seifert matrix entries must be integers");
}

namespace {

RatMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  RatMatrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != m.cols()) throw InputError("Seifert matrix must be square");
    std::size_t j = 0;
    for (long long x : row) m(i, j++) = make_rational(x);
    ++i;
  }
  return m;
}

}  // namespace

SeifertMatrix::SeifertMatrix(int n, std::initializer_list<std::initializer_list<long long>> rows,
                             std::optional<std::string> name)
    : SeifertMatrix(n, from_rows(rows), std::move(name)) {}

SeifertMatrix SeifertMatrix::padded(std::size_t k) const {
  return SeifertMatrix(n_, block_diagonal(s_, RatMatrix(k, k)), name_);
}

std::size_t n0(const SeifertMatrix& s) {
  return common_kernel(s.matrix(), s.matrix().transpose()).size();
}

namespace {

// Scales a rational vector to a primitive integer vector.
RatVector make_integral(RatVector v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  for (auto& x : v) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

}  // namespace

KeefDecomposition keef_reduce(const SeifertMatrix& s) {
  const RatMatrix& m = s.matrix();
  const std::size_t mu = m.rows();
  auto kernel = common_kernel(m, m.transpose());
  KeefDecomposition out;
  out.n0 = kernel.size();

  // Complete the kernel basis with the standard basis vectors e_j for the
  // non-pivot columns of the kernel's echelon form; kernel vectors become
  // the trailing columns of P.
  RatMatrix p(mu, mu);
  if (kernel.empty()) {
    p = RatMatrix::identity(mu);
  } else {
    RatMatrix k(kernel.size(), mu);
    for (std::size_t i = 0; i < kernel.size(); ++i)
      for (std::size_t j = 0; j < mu; ++j) k(i, j) = kernel[i][j];
    auto pivots = pivot_columns(k);
    std::vector<bool> is_pivot(mu, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t col = 0;
    for (std::size_t j = 0; j < mu; ++j)
      if (!is_pivot[j]) p(j, col++) = 1;
    for (auto& v : kernel) {
      RatVector w = make_integral(v);
      for (std::size_t i = 0; i < mu; ++i) p(i, col) = w[i];
      ++col;
    }
  }
  RatMatrix reduced = p.transpose() * m * p;
  const std::size_t nd = mu - out.n0;
  out.s_ndeg = RatMatrix(nd, nd);
  for (std::size_t i = 0; i < nd; ++i)
    for (std::size_t j = 0; j < nd; ++j) out.s_ndeg(i, j) = reduced(i, j);
  out.transform = std::move(p);
  out.warning = determinant(out.s_ndeg) == 0;
  return out;
}

RatPoly alexander_from_invariant_factors(const SeifertMatrix& s) {
  if (s.mu() == 0) return RatPoly(Rational(1));
  const RatMatrix& m = s.matrix();
  auto factors = invariant_factors(linear_pencil(m, Rational(s.epsilon()), m.transpose()));
  RatPoly prod(Rational(1));
  for (const auto& f : factors)
    if (!f.is_zero()) prod = prod * f;
  return normalize_integral(prod);
}

RatPoly alexander(const SeifertMatrix& s) {
  if (s.mu() == 0) return RatPoly(Rational(1));
  auto keef = keef_reduce(s);
  if (keef.warning) return alexander_from_invariant_factors(s);
  if (keef.s_ndeg.rows() == 0) return RatPoly(Rational(1));
  return normalize_integral(pencil_determinant(keef.s_ndeg, s.epsilon(), keef.s_ndeg.transpose()));
}

RatMatrix intersection_form(const SeifertMatrix& s) {
  return s.matrix() * Rational(-s.epsilon()) - s.matrix().transpose();
}

RatMatrix monodromy(const SeifertMatrix& s) {
  RatMatrix st_inv;
  try {
    st_inv = inverse(s.matrix().transpose());
  } catch (const SingularMatrixError&) {
    throw SingularMatrixError("monodromy undefined; reduce first");
  }
  return st_inv * s.matrix() * Rational(-s.epsilon());
}

}  // namespace hypersig
