#ifndef SCURVE_POLYNOMIAL_HPP
#define SCURVE_POLYNOMIAL_HPP

#include "scurve/complexmath.hpp"

#include <vector>

namespace scurve {

// Complex polynomial, coefficients lowest degree first. Trailing exact
// zeros are stripped on construction so degree() == coeffs.size()-1.
class PolynomialC {
 public:
  PolynomialC() : c_{Complex(0L)} {}
  explicit PolynomialC(std::vector<Complex> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static PolynomialC constant(Complex a) { return PolynomialC({std::move(a)}); }
  static PolynomialC monomial(int degree, Complex lead = Complex(1L));
  static PolynomialC from_roots(const std::vector<Complex>& roots, const Complex& lead = Complex(1L));

  bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return c_; }
  const Complex& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
  Complex& at(int k) { return c_[static_cast<size_t>(k)]; }
  const Complex& lead() const { return c_.back(); }

  Complex eval(const Complex& z) const;
  // Evaluates p and p' in one Horner pass.
  void eval2(const Complex& z, Complex& p, Complex& dp) const;
  PolynomialC derivative() const;
  PolynomialC monic() const;

  friend PolynomialC operator+(const PolynomialC& a, const PolynomialC& b);
  friend PolynomialC operator-(const PolynomialC& a, const PolynomialC& b);
  friend PolynomialC operator*(const PolynomialC& a, const PolynomialC& b);
  friend PolynomialC operator*(const Complex& a, const PolynomialC& b);

  Real max_coeff_abs() const;

 private:
  void normalize();
  std::vector<Complex> c_;
};

}  // namespace scurve

#endif  // SCURVE_POLYNOMIAL_HPP
