#include "hypersig/certified_real.hpp"

#include <cstdio>

namespace hypersig {

CertifiedReal CertifiedReal::exact(Rational q) {
  CertifiedReal r;
  r.lo_ = r.hi_ = q.get_d();
  r.exact_ = std::move(q);
  return r;
}

CertifiedReal CertifiedReal::enclosure(double lo, double hi) {
  CertifiedReal r;
  r.lo_ = lo;
  r.hi_ = hi;
  return r;
}

double CertifiedReal::approx() const { return is_exact() ? exact_->get_d() : 0.5 * (lo_ + hi_); }

CertifiedReal CertifiedReal::shifted(const Rational& q) const {
  if (is_exact()) return exact(*exact_ + q);
  double d = q.get_d();
  return enclosure(lo_ + d, hi_ + d);
}

std::string CertifiedReal::to_string() const {
  if (is_exact()) return hypersig::to_string(*exact_);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", approx());
  return buf;
}

int compare(const CertifiedReal& a, const CertifiedReal& b) {
  if (a.is_exact() && b.is_exact()) {
    int c = cmp(a.value(), b.value());
    return (c > 0) - (c < 0);
  }
  if (a.hi() < b.lo()) return -1;
  if (b.hi() < a.lo()) return 1;
  double x = a.approx(), y = b.approx();
  return x < y ? -1 : (x > y ? 1 : 0);
}

int compare(const CertifiedReal& a, const Rational& b) {
  return compare(a, CertifiedReal::exact(b));
}

bool same_value(const CertifiedReal& a, const CertifiedReal& b) {
  if (a.is_exact() != b.is_exact()) return false;
  if (a.is_exact()) return a.value() == b.value();
  return !(a.hi() < b.lo() || b.hi() < a.lo());
}

}  // namespace hypersig
