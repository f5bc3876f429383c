#include "scurve/series.hpp"

#include <stdexcept>

namespace scurve {

SeriesGerm series_from_semiclassical(const SemiclassicalSpec& s, int M, const PrecisionContext& ctx) {
  if (M < 1) throw std::invalid_argument("series_from_semiclassical: M >= 1");
  if (s.branch_points.size() != s.exponents.size())
    throw std::invalid_argument("spec shape mismatch");
  {
    long num = 0, den = 1;
    for (const Frac& g : s.exponents) {
      num = num * g.den + g.num * den;
      den *= g.den;
    }
    if (num != 0) throw std::invalid_argument("exponents must sum to zero");
  }
  ScopedPrecision sp(ctx.decimal_digits);

  const size_t P = s.branch_points.size();
  // A_b = prod (z - b_i); N_b = sum_i gamma_i prod_{j != i} (z - b_j).
  PolynomialC ab = PolynomialC::constant(Complex(1L));
  for (const Complex& b : s.branch_points)
    ab = ab * PolynomialC({-b, Complex(1L)});
  PolynomialC nb;
  for (size_t i = 0; i < P; ++i) {
    PolynomialC pi = PolynomialC::constant(Complex(Real(s.exponents[i].num) / Real(s.exponents[i].den)));
    for (size_t j = 0; j < P; ++j)
      if (j != i) pi = pi * PolynomialC({-s.branch_points[j], Complex(1L)});
    nb = nb + pi;
  }

  // f = sum_{k >= -1} d_k z^{-k-1}, d_{-1} = 1. Matching coefficients of
  // A_b f' - N_b f = 0 at power z^{P-2-t} solves d_t from earlier d's:
  //   sum_m A_m * (-(k+1)) d_k   with k = m - P + t,
  // - sum_m N_m * d_k            with k = m - P + 1 + t.
  auto an = [&](const PolynomialC& p, size_t m) {
    return (static_cast<int>(m) <= p.degree()) ? p[static_cast<int>(m)] : Complex(0L);
  };
  std::vector<Complex> d(static_cast<size_t>(M) + 1, Complex(0L));  // d[0] = d_{-1}
  d[0] = Complex(1L);
  const long Pl = static_cast<long>(P);
  for (long t = 0; t < M; ++t) {
    Complex rest(0L);
    for (long m = 0; m <= Pl; ++m) {
      long k = m - Pl + t;
      if (k >= -1 && k < t) rest += Real(-(k + 1)) * an(ab, static_cast<size_t>(m)) * d[static_cast<size_t>(k + 1)];
      long k2 = m - Pl + 1 + t;
      if (m < Pl && k2 >= -1 && k2 < t) rest -= an(nb, static_cast<size_t>(m)) * d[static_cast<size_t>(k2 + 1)];
    }
    // Coefficient in front of d_t: -(t+1) A_P - N_{P-1}; A monic, N_{P-1} = 0.
    Complex pivot = Real(-(t + 1)) * an(ab, P) - an(nb, P - 1);
    d[static_cast<size_t>(t + 1)] = -(rest / pivot);
  }

  SeriesGerm g;
  g.constant = Complex(1L);
  g.coeffs.assign(d.begin() + 1, d.end());
  return g;
}

SemiclassicalSpec pade_showcase_f1() {
  // (z^2-1)^{1/3} / (z - 0.4 + 0.8i)^{2/3}
  SemiclassicalSpec s;
  s.branch_points = {Complex(1L), Complex(-1L), Complex(Real("0.4"), Real("-0.8"))};
  s.exponents = {{1, 3}, {1, 3}, {-2, 3}};
  return s;
}

SemiclassicalSpec pade_showcase_f2() {
  // (z^2-1)^{1/5} (z + 0.8 + 0.4i)^{1/5} / (z - 0.4 + 0.8i)^{3/5}
  SemiclassicalSpec s;
  s.branch_points = {Complex(1L), Complex(-1L), Complex(Real("-0.8"), Real("-0.4")),
                     Complex(Real("0.4"), Real("-0.8"))};
  s.exponents = {{1, 5}, {1, 5}, {1, 5}, {-3, 5}};
  return s;
}

SemiclassicalSpec hp_showcase_f1() {
  // z^{2/3} / ((z+1)^{1/3} (z-0.5)^{1/3})
  SemiclassicalSpec s;
  s.branch_points = {Complex(0L), Complex(-1L), Complex(Real("0.5"), Real(0L))};
  s.exponents = {{2, 3}, {-1, 3}, {-1, 3}};
  return s;
}

SemiclassicalSpec hp_showcase_f2() {
  // z^{4/3} / ((z+1)^{2/3} (z^2-0.25)^{1/3})
  SemiclassicalSpec s;
  s.branch_points = {Complex(0L), Complex(-1L), Complex(Real("0.5"), Real(0L)),
                     Complex(Real("-0.5"), Real(0L))};
  s.exponents = {{4, 3}, {-2, 3}, {-1, 3}, {-1, 3}};
  return s;
}

}  // namespace scurve
