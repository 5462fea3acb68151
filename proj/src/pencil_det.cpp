#include "hypersig/pencil_det.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace hypersig {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) { return a + b >= p ? a + b - p : a + b; }
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 reduce(const Rational& q, u64 p) {
  Integer r;
  Integer pz(std::to_string(p));
  mpz_fdiv_r(r.get_mpz_t(), q.get_num_mpz_t(), pz.get_mpz_t());
  return std::stoull(r.get_str());
}

class ModMatrix {
 public:
  ModMatrix(std::size_t n) : n_(n), d_(n * n, 0) {}
  u64& operator()(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }
  std::size_t n() const { return n_; }

 private:
  std::size_t n_;
  std::vector<u64> d_;
};

// Solves a x = b column-wise in place (b <- a^{-1} b) and returns det a;
// returns 0 (leaving b unspecified) when a is singular mod p.
u64 solve_in_place(ModMatrix a, ModMatrix& b, u64 p) {
  const std::size_t n = a.n();
  u64 det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(b(piv, j), b(col, j));
      }
      det = p - det;
    }
    det = mulmod(det, a(col, col), p);
    u64 inv = invmod(a(col, col), p);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = mulmod(a(col, j), inv, p);
      b(col, j) = mulmod(b(col, j), inv, p);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      u64 f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = submod(a(i, j), mulmod(f, a(col, j), p), p);
        b(i, j) = submod(b(i, j), mulmod(f, b(col, j), p), p);
      }
    }
  }
  return det;
}

// det(x I - m) mod p, coefficients lowest first.
std::vector<u64> charpoly_mod(ModMatrix h, u64 p) {
  const std::size_t n = h.n();
  for (std::size_t col = 0; col + 2 <= n; ++col) {
    std::size_t piv = col + 1;
    while (piv < n && h(piv, col) == 0) ++piv;
    if (piv == n) continue;
    if (piv != col + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(col + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, col + 1));
    }
    u64 inv = invmod(h(col + 1, col), p);
    for (std::size_t i = col + 2; i < n; ++i) {
      if (h(i, col) == 0) continue;
      u64 f = mulmod(h(i, col), inv, p);
      for (std::size_t j = 0; j < n; ++j) h(i, j) = submod(h(i, j), mulmod(f, h(col + 1, j), p), p);
      for (std::size_t r = 0; r < n; ++r) h(r, col + 1) = addmod(h(r, col + 1), mulmod(f, h(r, i), p), p);
    }
  }
  std::vector<std::vector<u64>> poly(n + 1);
  poly[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t i = k - 1;
    std::vector<u64> next(k + 1, 0);
    for (std::size_t d = 0; d < poly[k - 1].size(); ++d) {
      next[d + 1] = addmod(next[d + 1], poly[k - 1][d], p);
      next[d] = submod(next[d], mulmod(h(i, i), poly[k - 1][d], p), p);
    }
    u64 prod = 1;
    for (std::size_t j = i; j-- > 0;) {
      prod = mulmod(prod, h(j + 1, j), p);
      if (prod == 0) break;
      u64 c = mulmod(prod, h(j, i), p);
      if (c == 0) continue;
      for (std::size_t d = 0; d < poly[j].size(); ++d) next[d] = submod(next[d], mulmod(c, poly[j][d], p), p);
    }
    poly[k] = std::move(next);
  }
  return poly[n];
}

Integer isqrt_ceil(const Integer& x) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  if (r * r < x) r += 1;
  return r;
}

bool is_prime(u64 x) {
  Integer z(std::to_string(x));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

}  // namespace

RatPoly pencil_determinant(const RatMatrix& a, int c, const RatMatrix& b) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("pencil_determinant: shape mismatch");
  if (c != 1 && c != -1) throw InputError("pencil_determinant: c must be ±1");
  const std::size_t n = a.rows();
  if (n == 0) return RatPoly(Rational(1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_integer(a(i, j)) || !is_integer(b(i, j)))
        throw InputError("pencil_determinant: integer matrices required");

  // On |t| = 1, |det(t a + c b)| ≤ Π_i (|a_i| + |b_i|) (Hadamard), and each
  // coefficient is bounded by the maximum modulus on the circle.
  Integer bound = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer ra = 0, rb = 0;
    for (std::size_t j = 0; j < n; ++j) {
      ra += a(i, j).get_num() * a(i, j).get_num();
      rb += b(i, j).get_num() * b(i, j).get_num();
    }
    bound *= isqrt_ceil(ra) + isqrt_ceil(rb);
  }
  const Integer target = 2 * bound + 1;

  // det(t a + c b) = det(a) · det(t I + N) with N = c a^{-1} b, and
  // det(t I + N) = (-1)^n χ_N(-t).
  std::vector<Integer> value(n + 1, Integer(0));
  Integer modulus = 1;
  u64 p = (u64(1) << 62) - 1;
  int rejected = 0;
  while (modulus < target) {
    do p -= 2;
    while (!is_prime(p));
    ModMatrix am(n), bm(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        am(i, j) = reduce(a(i, j), p);
        u64 bij = reduce(b(i, j), p);
        bm(i, j) = c == 1 ? bij : (bij ? p - bij : 0);
      }
    u64 det_a = solve_in_place(am, bm, p);
    if (det_a == 0) {
      if (++rejected > 64) throw SingularMatrixError("pencil_determinant: leading matrix is singular");
      continue;
    }
    std::vector<u64> chi = charpoly_mod(bm, p);
    // coefficient of t^k in (-1)^n χ(-t) is (-1)^(n+k) χ_k.
    std::vector<u64> coeffs(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      u64 v = mulmod(chi[k], det_a, p);
      coeffs[k] = ((n + k) % 2 == 1 && v) ? p - v : v;
    }
    Integer pz(std::to_string(p));
    Integer inv_mod;  // modulus^{-1} mod p
    mpz_invert(inv_mod.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
    for (std::size_t k = 0; k <= n; ++k) {
      // value += modulus · ((r - value) · modulus^{-1} mod p)
      Integer diff = Integer(std::to_string(coeffs[k])) - value[k];
      Integer t;
      mpz_mul(t.get_mpz_t(), diff.get_mpz_t(), inv_mod.get_mpz_t());
      mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
      value[k] += modulus * t;
    }
    modulus *= pz;
  }
  std::vector<Rational> out(n + 1);
  const Integer half = modulus / 2;
  for (std::size_t k = 0; k <= n; ++k) out[k] = Rational(value[k] > half ? Integer(value[k] - modulus) : value[k]);
  return RatPoly(std::move(out));
}

}  // namespace hypersig
