#include "hypersig/rational.hpp"

#include "hypersig/errors.hpp"

namespace hypersig {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational make_rational(long long num, long long den) {
  Rational q(Integer(std::to_string(num)), Integer(std::to_string(den)));
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw InputError("not a rational number: '" + std::string(text) + "'");
    Integer d{std::string(den)};
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    out = Rational(Integer(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
      throw InputError("not a decimal number: '" + std::string(text) + "'");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole));
    out = Rational(w * scale + Integer(std::string(frac)), scale);
  } else {
    if (!all_digits(s)) throw InputError("not a number: '" + std::string(text) + "'");
    out = Rational(Integer(std::string(s)));
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

double to_double(const Rational& q) { return q.get_d(); }

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

namespace {

// Stern-Brocot descent for the simplest rational strictly between lo and hi,
// both assumed non-negative.
Rational simplest_nonneg(Rational lo, Rational hi) {
  Integer fl = floor(lo);
  if (fl + 1 < hi) return Rational(fl + 1);
  // lo and hi share the integer part fl (or hi == fl + 1).
  Rational a = lo - fl;
  Rational b = hi - fl;
  if (a == 0) {
    // Need 0 < x < b: take 1/k with k the smallest integer making 1/k < b.
    Integer k = floor(Rational(1) / b) + 1;
    return Rational(fl) + Rational(1, 1) / Rational(k);
  }
  // Invert: x in (a, b) iff 1/x in (1/b, 1/a).
  Rational inner = simplest_nonneg(Rational(1) / b, Rational(1) / a);
  return Rational(fl) + Rational(1) / inner;
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw InputError("simplest_between: empty interval");
  if (lo < 0 && hi > 0) return Rational(0);
  if (hi <= 0) return -simplest_nonneg(-hi, -lo);
  return simplest_nonneg(lo, hi);
}

}  // namespace hypersig
