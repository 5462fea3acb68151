#include "hypersig/polynomial.hpp"

#include <sstream>

#include "hypersig/errors.hpp"

namespace hypersig {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) c_.push_back(make_rational(c));
  trim();
}

RatPoly::RatPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

RatPoly RatPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RatPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[k];
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  RatPoly out = *this;
  Rational inv = 1 / leading();
  for (auto& x : out.c_) x *= inv;
  return out;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::reversed() const {
  return RatPoly(std::vector<Rational>(c_.rbegin(), c_.rend()));
}

Rational RatPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> RatPoly::operator()(std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(out));
}

std::string RatPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << (mag != 1 ? "*t" : "t");
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(a.degree() - b.degree() + 1);
  const Rational inv = 1 / b.leading();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k] == 0) continue;
    Rational f = rem[k] * inv;
    quo[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0(Rational(1)), s1;
  RatPoly u0, u1(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1;
    RatPoly u2 = u0 - q * u1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.is_zero()) return {r0, s0, u0};
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, u0 * inv};
}

RatPoly normalize_integral(const RatPoly& p) {
  if (p.is_zero()) return p;
  std::size_t shift = 0;
  while (p.coeffs()[shift] == 0) ++shift;
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer content = 0;
  for (std::size_t k = shift; k < p.coeffs().size(); ++k) {
    Rational scaled = p.coeffs()[k] * den_lcm;
    ints.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (ints.back() < 0) content = -content;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& z : ints) out.emplace_back(Integer(z / content));
  return RatPoly(std::move(out));
}

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p) {
  // Yun's algorithm (characteristic zero).
  std::vector<std::pair<RatPoly, int>> out;
  if (p.degree() <= 0) return out;
  RatPoly f = p.monic();
  RatPoly df = f.derivative();
  RatPoly a = gcd(f, df);
  RatPoly b = f / a;
  RatPoly c = df / a;
  RatPoly d = c - b.derivative();
  int k = 1;
  while (b.degree() > 0) {
    RatPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, k);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    ++k;
  }
  return out;
}

}  // namespace hypersig
