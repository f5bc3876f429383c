#include "scurve/hermite_pade.hpp"

#include "scurve/linalg.hpp"

#include <stdexcept>

namespace scurve {

namespace {

// [f]_{z^{-m}} including the constant at m = 0.
Complex germ_at(const SeriesGerm& f, long m) {
  if (m == 0) return f.constant;
  if (m < 0 || m > static_cast<long>(f.coeffs.size())) return Complex(0L);
  return f.coeffs[static_cast<size_t>(m - 1)];
}

}  // namespace

HermitePadeResult hermite_pade_type1(const SeriesGerm& f1, const SeriesGerm& f2, int n,
                                     const PrecisionContext& ctx) {
  if (f1.tail_length() < 3 * n + 3 || f2.tail_length() < 3 * n + 3)
    throw std::invalid_argument("hermite_pade_type1: need 3n+3 coefficients");
  ScopedPrecision sp(ctx.decimal_digits);

  // Unknowns: q0_0..q0_n, q1_0..q1_n, q2_0..q2_n. Conditions kill the
  // remainder coefficients at z^m for m = n down to -(2n+1).
  const int cols = 3 * (n + 1);
  const int rows = 3 * n + 2;
  CMatrix a(rows, cols);
  for (int row = 0; row < rows; ++row) {
    long m = n - row;  // target power of z
    for (int j = 0; j <= n; ++j) {
      if (j == m && m >= 0) a(row, j) = Complex(1L);  // Q0 contribution
      a(row, n + 1 + j) = germ_at(f1, j - m);
      a(row, 2 * (n + 1) + j) = germ_at(f2, j - m);
    }
  }
  bool deficient = false;
  std::vector<Complex> sol = null_vector(a, &deficient);

  HermitePadeResult res;
  res.non_normal = deficient;

  // Normalization order: leading coefficient of Q2, then Q1, then Q0.
  Real smax(0L);
  for (const auto& c : sol) smax = max(smax, abs(c));
  Real tiny = smax * pow10(-(ctx.decimal_digits / 2));
  Complex lead(0L);
  for (int which : {2, 1, 0}) {
    const Complex& c = sol[static_cast<size_t>(which * (n + 1) + n)];
    if (abs(c) > tiny) { lead = c; break; }
  }
  if (!lead.is_zero())
    for (auto& c : sol) c = c / lead;

  auto slice = [&](int which) {
    std::vector<Complex> v(sol.begin() + which * (n + 1), sol.begin() + (which + 1) * (n + 1));
    return PolynomialC(std::move(v));
  };
  res.q0 = slice(0);
  res.q1 = slice(1);
  res.q2 = slice(2);

  // Order certificate: residuals of the constrained coefficients.
  Real worst(0L);
  for (int row = 0; row < rows; ++row) {
    long m = n - row;
    Complex s(0L);
    for (int j = 0; j <= res.q0.degree(); ++j)
      if (j == m && m >= 0) s += res.q0[j];
    for (int j = 0; j <= res.q1.degree(); ++j) s += res.q1[j] * germ_at(f1, j - m);
    for (int j = 0; j <= res.q2.degree(); ++j) s += res.q2[j] * germ_at(f2, j - m);
    worst = max(worst, abs(s));
  }
  Real scale(0L);
  for (const auto& poly : {res.q0, res.q1, res.q2}) scale = max(scale, poly.max_coeff_abs());
  res.order_residual = worst / max(scale, Real(1L));
  return res;
}

Complex hp_remainder_coeff(const HermitePadeResult& r, const SeriesGerm& f1, const SeriesGerm& f2,
                           long m) {
  Complex s(0L);
  for (int j = 0; j <= r.q1.degree(); ++j) s += r.q1[j] * germ_at(f1, j + m);
  for (int j = 0; j <= r.q2.degree(); ++j) s += r.q2[j] * germ_at(f2, j + m);
  return s;
}

}  // namespace scurve
