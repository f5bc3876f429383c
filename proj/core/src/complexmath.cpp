#include "scurve/complexmath.hpp"

namespace scurve {

Complex sqrt(const Complex& z) {
  if (z.im.is_zero()) {
    if (!z.re.is_negative()) return Complex(sqrt(z.re), Real(0L));
    return Complex(Real(0L), sqrt(-z.re));
  }
  Real r = abs(z);
  Real half("0.5");
  if (!z.re.is_negative()) {
    Real t = sqrt((r + z.re) * half);
    return Complex(t, z.im / (t + t));
  }
  Real u = sqrt((r - z.re) * half);
  if (z.im.is_negative()) u = -u;
  return Complex(z.im / (u + u), u);
}

Complex exp(const Complex& z) {
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex polar(const Real& r, const Real& theta) { return {r * cos(theta), r * sin(theta)}; }

Complex pow(const Complex& z, long n) {
  if (n == 0) return Complex(1L);
  if (n < 0) return Complex(1L) / pow(z, -n);
  Complex base = z, acc(1L);
  long m = n;
  while (m > 0) {
    if (m & 1) acc *= base;
    base *= base;
    m >>= 1;
  }
  return acc;
}

Complex pow_frac(const Complex& z, long p, long q) {
  Real lr = log(abs(z)) * Real(p) / Real(q);
  Real th = arg(z) * Real(p) / Real(q);
  return polar(exp(lr), th);
}

}  // namespace scurve
