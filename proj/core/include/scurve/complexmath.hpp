#ifndef SCURVE_COMPLEXMATH_HPP
#define SCURVE_COMPLEXMATH_HPP

// Complex numbers over scurve::Real. std::complex is specified only for
// builtin floating types, so we carry our own.

#include "scurve/real.hpp"

#include <string>
#include <utility>

namespace scurve {

struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(long r) : re(r), im(0L) {}
  Complex(int r) : re(long(r)), im(0L) {}
  explicit Complex(const Real& r) : re(r), im(0L) {}
  explicit Complex(double r, double i = 0.0) : re(r), im(i) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }
  Complex& operator/=(const Complex& o) { *this = *this / o; return *this; }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }
  friend Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
  friend Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
  friend Complex operator/(const Real& a, const Complex& b) { return Complex(a) / b; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

  std::string str(int digits = 0) const {
    return "(" + re.str(digits) + (im.is_negative() ? "" : "+") + im.str(digits) + "i)";
  }
};

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex sqrt(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);
Complex polar(const Real& r, const Real& theta);
Complex pow(const Complex& z, long n);
// z^(p/q) on the principal branch.
Complex pow_frac(const Complex& z, long p, long q);

inline Complex from_double(double re, double im) { return Complex(re, im); }

}  // namespace scurve

#endif  // SCURVE_COMPLEXMATH_HPP
