#include "scurve/jacobi.hpp"

namespace scurve {

namespace {

// Generalized binomial C(a, m) for integer m >= 0.
Complex gen_binomial(const Complex& a, int m) {
  Complex num(1L);
  for (int i = 1; i <= m; ++i) num *= (a - Complex(static_cast<long>(i - 1))) / Real(static_cast<long>(i));
  return num;
}

}  // namespace

PolynomialC jacobi_explicit(int n, const Complex& alpha, const Complex& beta,
                            const PrecisionContext& ctx) {
  ScopedPrecision sp(ctx.decimal_digits);
  PolynomialC zm1({Complex(-1L), Complex(1L)});
  PolynomialC zp1({Complex(1L), Complex(1L)});

  // Powers (z-1)^k ascending and (z+1)^{n-k} via a descending table.
  std::vector<PolynomialC> up(static_cast<size_t>(n) + 1), down(static_cast<size_t>(n) + 1);
  up[0] = PolynomialC::constant(Complex(1L));
  for (int k = 1; k <= n; ++k) up[static_cast<size_t>(k)] = up[static_cast<size_t>(k - 1)] * zm1;
  down[0] = PolynomialC::constant(Complex(1L));
  for (int k = 1; k <= n; ++k) down[static_cast<size_t>(k)] = down[static_cast<size_t>(k - 1)] * zp1;

  PolynomialC sum;
  for (int k = 0; k <= n; ++k) {
    Complex c = gen_binomial(Complex(static_cast<long>(n)) + alpha, n - k) *
                gen_binomial(Complex(static_cast<long>(n)) + beta, k);
    sum = sum + c * (up[static_cast<size_t>(k)] * down[static_cast<size_t>(n - k)]);
  }
  Real scale = pow(Real(2L), static_cast<long>(n));
  return Complex(Real(1L) / scale, Real(0L)) * sum;
}

Real jacobi_ode_residual(const PolynomialC& y, int n, const Complex& alpha, const Complex& beta) {
  PolynomialC a({Complex(1L), Complex(0L), Complex(-1L)});  // 1 - z^2
  PolynomialC b({beta - alpha, -(alpha + beta + Complex(2L))});
  Complex lambda = Complex(static_cast<long>(n)) * (Complex(static_cast<long>(n)) + alpha + beta + Complex(1L));
  PolynomialC t1 = a * y.derivative().derivative();
  PolynomialC t2 = b * y.derivative();
  PolynomialC t3 = lambda * y;
  PolynomialC r = t1 + t2 + t3;
  Real scale = max(max(t1.max_coeff_abs(), t2.max_coeff_abs()), max(t3.max_coeff_abs(), Real(1L)));
  return r.max_coeff_abs() / scale;
}

}  // namespace scurve
