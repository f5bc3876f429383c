#include "scurve/polynomial.hpp"

namespace scurve {

void PolynomialC::normalize() {
  if (c_.empty()) c_.push_back(Complex(0L));
  while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
}

PolynomialC PolynomialC::monomial(int degree, Complex lead) {
  std::vector<Complex> c(static_cast<size_t>(degree) + 1, Complex(0L));
  c.back() = std::move(lead);
  return PolynomialC(std::move(c));
}

PolynomialC PolynomialC::from_roots(const std::vector<Complex>& roots, const Complex& lead) {
  std::vector<Complex> c{lead};
  for (const Complex& r : roots) {
    c.push_back(c.back());
    for (size_t k = c.size() - 2; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return PolynomialC(std::move(c));
}

Complex PolynomialC::eval(const Complex& z) const {
  Complex p = c_.back();
  for (size_t k = c_.size() - 1; k-- > 0;) p = p * z + c_[k];
  return p;
}

void PolynomialC::eval2(const Complex& z, Complex& p, Complex& dp) const {
  p = c_.back();
  dp = Complex(0L);
  for (size_t k = c_.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c_[k];
  }
}

PolynomialC PolynomialC::derivative() const {
  if (c_.size() == 1) return PolynomialC();
  std::vector<Complex> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Real(static_cast<long>(k)) * c_[k];
  return PolynomialC(std::move(d));
}

PolynomialC PolynomialC::monic() const {
  std::vector<Complex> m(c_);
  Complex l = c_.back();
  for (Complex& x : m) x = x / l;
  return PolynomialC(std::move(m));
}

PolynomialC operator+(const PolynomialC& a, const PolynomialC& b) {
  std::vector<Complex> c(std::max(a.c_.size(), b.c_.size()), Complex(0L));
  for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return PolynomialC(std::move(c));
}

PolynomialC operator-(const PolynomialC& a, const PolynomialC& b) {
  std::vector<Complex> c(std::max(a.c_.size(), b.c_.size()), Complex(0L));
  for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
  return PolynomialC(std::move(c));
}

PolynomialC operator*(const PolynomialC& a, const PolynomialC& b) {
  if (a.is_zero() || b.is_zero()) return PolynomialC();
  std::vector<Complex> c(a.c_.size() + b.c_.size() - 1, Complex(0L));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return PolynomialC(std::move(c));
}

PolynomialC operator*(const Complex& a, const PolynomialC& b) {
  std::vector<Complex> c(b.c_);
  for (Complex& x : c) x = a * x;
  return PolynomialC(std::move(c));
}

Real PolynomialC::max_coeff_abs() const {
  Real m(0L);
  for (const Complex& x : c_) m = max(m, abs(x));
  return m;
}

}  // namespace scurve
