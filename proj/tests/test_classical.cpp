#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "scurve/exact.hpp"
#include "scurve/heine_stieltjes.hpp"
#include "scurve/hermite_pade.hpp"
#include "scurve/jacobi.hpp"
#include "scurve/moments.hpp"
#include "scurve/orthopoly.hpp"
#include "scurve/pade.hpp"
#include "scurve/quadrature.hpp"
#include "scurve/roots.hpp"

using namespace scurve;

namespace {

bool close(const Complex& a, const Complex& b, double tol) {
  return abs(a - b).to_double() < tol;
}

SeriesGerm ones_germ(int M) {
  // f = 1/(z-1): c_k = 1 for all k, no constant.
  SeriesGerm g;
  g.coeffs.assign(static_cast<size_t>(M), Complex(1L));
  return g;
}

SeriesGerm lebesgue_germ(int M) {
  // Markov function of the Lebesgue measure on [-1,1]: c_k = mu_k.
  SeriesGerm g;
  for (int k = 0; k < M; ++k) {
                             // int x^k dx over [-1,1]
    Real v = (k % 2 == 0) ? Real(2L) / Real(static_cast<long>(k + 1)) : Real(0L);
    g.coeffs.push_back(Complex(v, Real(0L)));
  }
  return g;
}

}  // namespace

TEST_CASE("series_from_semiclassical: sqrt((z-1)/(z+1)) matches the exact binomial tail") {
  PrecisionContext ctx(60);
  ScopedPrecision sp(ctx.decimal_digits);
  SemiclassicalSpec s;
  s.branch_points = {Complex(1L), Complex(-1L)};
  s.exponents = {{1, 2}, {-1, 2}};
  SeriesGerm g = series_from_semiclassical(s, 12, ctx);
  auto exact = binomial_sqrt_tail(13);
  CHECK(close(g.coeffs[0], Complex(-1L), 1e-50));
  for (int k = 0; k < 12; ++k) {
    Complex e = QComplex(exact[static_cast<size_t>(k)]).to_complex();
    CHECK(close(g.coeffs[static_cast<size_t>(k)], e, 1e-48));
  }
}

TEST_CASE("series_from_semiclassical: all-zero exponents give f = 1") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx.decimal_digits);
  SemiclassicalSpec s;
  s.branch_points = {Complex(2L), Complex(-3L)};
  s.exponents = {{0, 1}, {0, 1}};
  SeriesGerm g = series_from_semiclassical(s, 10, ctx);
  for (const auto& c : g.coeffs) CHECK(abs(c).to_double() < 1e-48);
}

TEST_CASE("series_from_semiclassical: f1 showcase germ vs contour extraction") {
  PrecisionContext ctx(60);
  ScopedPrecision sp(ctx.decimal_digits);
  SemiclassicalSpec s = pade_showcase_f1();
  SeriesGerm g = series_from_semiclassical(s, 31, ctx);

  // Oracle: c_k = (1/2pi i) oint f(z) z^k dz on |z| = 10, f evaluated by
  // principal-branch powers (valid: branch points inside |z| < 2).
  auto f = [&](const Complex& z) {
    Complex val(1L);
    for (size_t i = 0; i < s.branch_points.size(); ++i)
      val *= pow_frac((Complex(1L) - s.branch_points[i] / z), s.exponents[i].num, s.exponents[i].den);
    return val;
  };
  Path circle = Path::circle(Complex(0L), Real(10L));
  for (int k : {0, 5, 17, 30}) {
    ComplexFun integrand = [&](const Complex& z) { return f(z) * pow(z, k); };
    Complex ck = contour_integrate(integrand, circle, ctx) / (Real(2L) * pi());
    ck = Complex(ck.im, -ck.re);  // divide by i
    CHECK(close(g.coeffs[static_cast<size_t>(k)], ck, 1e-20));
  }
}

TEST_CASE("pade_denominator: geometric series gives Q1 = z-1 with zero remainder") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx.decimal_digits);
  PadeResult r = pade_denominator(ones_germ(8), 1, ctx);
  CHECK_FALSE(r.non_normal);
  REQUIRE(r.q.degree() == 1);
  CHECK(close(r.q[0], Complex(-1L), 1e-45));
  CHECK(close(r.q[1], Complex(1L), 1e-45));
  for (const auto& c : pade_remainder_tail(r, ones_germ(8), 6)) CHECK(abs(c).to_double() < 1e-45);
}

TEST_CASE("pade_denominator: Markov function of Lebesgue measure gives monic Legendre") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx.decimal_digits);
  PadeResult r = pade_denominator(lebesgue_germ(8), 2, ctx);
  CHECK(close(r.q[0], Complex(Real(-1L) / Real(3L), Real(0L)), 1e-44));
  CHECK(abs(r.q[1]).to_double() < 1e-44);
  CHECK(close(r.q[2], Complex(1L), 1e-44));

  // Exact-rational oracle: solve the same Hankel system over Q.
  std::vector<std::vector<QComplex>> a(2, std::vector<QComplex>(2));
  std::vector<QComplex> rhs(2);
  auto mu = [](int k) { return (k % 2 == 0) ? Rat(2, k + 1) : Rat(0); };
  for (int l = 1; l <= 2; ++l) {
    for (int m = 0; m < 2; ++m) a[static_cast<size_t>(l - 1)][static_cast<size_t>(m)] = QComplex(mu(m + l - 1));
    rhs[static_cast<size_t>(l - 1)] = QComplex(-mu(2 + l - 1));
  }
  auto sol = exact_solve(a, rhs);
  CHECK(sol[0].re == Rat(-1, 3));
  CHECK(sol[1].re == 0);
}

TEST_CASE("pade order property for the showcase germ (floating, n = 6)") {
  PrecisionContext ctx(60);
  ScopedPrecision sp(ctx.decimal_digits);
  SeriesGerm g = series_from_semiclassical(pade_showcase_f1(), 30, ctx);
  PadeResult r = pade_denominator(g, 6, ctx);
  auto tail = pade_remainder_tail(r, g, 7);
  for (int l = 0; l < 6; ++l) CHECK(abs(tail[static_cast<size_t>(l)]).to_double() < 1e-40);
  CHECK(abs(tail[6]).to_double() > 1e-12);  // order exactly n+1 at a normal index
}

TEST_CASE("pade uniqueness at normal indices: P/Q invariant under basis change") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx.decimal_digits);
  SeriesGerm g = lebesgue_germ(12);
  PadeResult r = pade_denominator(g, 3, ctx);
  // Evaluate P/Q at a few points and compare against the rescaled solution.
  Complex scale(Real("2.7"), Real("-0.4"));
  PolynomialC q2 = scale * r.q, p2 = scale * r.p;
  for (double x : {2.0, -3.1}) {
    Complex z(x, 0.7);
    CHECK(close(r.p.eval(z) / r.q.eval(z), p2.eval(z) / q2.eval(z), 1e-45));
  }
}

TEST_CASE("pade_poles: simple pole with residue, spurious thresholds") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx.decimal_digits);
  PadeResult r = pade_denominator(ones_germ(8), 1, ctx);
  auto poles = pade_poles(r, ctx);
  REQUIRE(poles.size() == 1);
  CHECK(close(poles[0].location, Complex(1L), 1e-45));
  CHECK(close(poles[0].residue, Complex(1L), 1e-44));
  detect_spurious(poles, Real(0L));  // threshold 0: nothing spurious
  CHECK_FALSE(poles[0].spurious);
}

TEST_CASE("jacobi_explicit: n = 1 closed form") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx.decimal_digits);
  Complex a(Real("0.3"), Real("1.1")), b(Real("-0.2"), Real("0.4"));
  PolynomialC p = jacobi_explicit(1, a, b, ctx);
  CHECK(close(p[1], (a + b + Complex(2L)) * Real("0.5"), 1e-45));
  CHECK(close(p[0], (a - b) * Real("0.5"), 1e-45));
}

TEST_CASE("jacobi_explicit: alpha = beta = 0, n = 3 is Legendre P3") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx.decimal_digits);
  PolynomialC p = jacobi_explicit(3, Complex(0L), Complex(0L), ctx);
  auto roots = poly_roots(p, ctx);
  Real expect = sqrt(Real(3L) / Real(5L));
  int hits = 0;
  for (const auto& z : roots) {
    if (abs(z).to_double() < 1e-40) ++hits;
    if (abs(abs(z) - expect).to_double() < 1e-40) ++hits;
  }
  CHECK(hits == 3);
}

TEST_CASE("jacobi_ode_residual: member vs witness vs n = 0") {
  PrecisionContext ctx(60);
  ScopedPrecision sp(ctx.decimal_digits);
  Complex a(Real("-2.5"), Real("0.7")), b(Real("1.2"), Real(0L));
  PolynomialC y = jacobi_explicit(5, a, b, ctx);
  CHECK(jacobi_ode_residual(y, 5, a, b).to_double() < 1e-48);
  CHECK(jacobi_ode_residual(PolynomialC::monomial(5), 5, a, b).to_double() > 1e-3);
  CHECK(jacobi_ode_residual(PolynomialC::constant(Complex(1L)), 0, a, b).to_double() < 1e-48);
}

TEST_CASE("jacobi reality: classical parameters keep zeros in (-1,1)") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx.decimal_digits);
  PolynomialC p = jacobi_explicit(8, Complex(Real("0.5"), Real(0L)), Complex(Real("-0.25"), Real(0L)), ctx);
  for (const auto& z : poly_roots(p, ctx)) {
    CHECK(abs(z.im).to_double() < 1e-40);
    CHECK(abs(z.re).to_double() < 1.0);
  }
}

TEST_CASE("van_vleck_count") {
  CHECK(van_vleck_count(3, 2) == 4);
  CHECK(van_vleck_count(7, 1) == 1);
  CHECK(van_vleck_count(1, 3) == 3);
}

TEST_CASE("heine_stieltjes: p = 1 with Jacobi B reproduces jacobi_explicit") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx.decimal_digits);
  Real alpha("0.5"), beta("1.5");
  HSConfig cfg;
  cfg.points = {Complex(-1L), Complex(1L)};
  // B = (alpha+beta+2) z + (alpha-beta) turns the Lame equation into the
  // hypergeometric one.
  cfg.b = PolynomialC({Complex(alpha - beta, Real(0L)), Complex(alpha + beta + Real(2L), Real(0L))});
  cfg.n = 4;
  auto results = heine_stieltjes_solve(cfg, ctx);
  REQUIRE(results.size() == 1);
  PolynomialC pj = jacobi_explicit(4, Complex(alpha, Real(0L)), Complex(beta, Real(0L)), ctx).monic();
  for (int j = 0; j <= 4; ++j) CHECK(close(results[0].q[j], pj[j], 1e-38));
  CHECK(results[0].residual.to_double() < 1e-40);
}

TEST_CASE("heine_stieltjes: Stieltjes count sigma(2) = 3 with occupancies") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx.decimal_digits);
  HSConfig cfg;
  cfg.points = {Complex(-1L), Complex(0L), Complex(2L)};
  cfg.b = HSConfig::unit_residue_b(cfg.points);
  cfg.n = 2;
  HSSolveLog log;
  auto results = heine_stieltjes_solve(cfg, ctx, {}, &log);
  CHECK(log.seeds_tried == 3);
  REQUIRE(results.size() == 3);
  std::vector<std::vector<int>> expect{{2, 0}, {1, 1}, {0, 2}};
  for (const auto& pat : expect) {
    bool found = false;
    for (const auto& r : results)
      if (r.occupancy == pat) found = true;
    CHECK(found);
  }
  for (const auto& r : results) CHECK(r.residual.to_double() < 1e-40);
}

TEST_CASE("heine_stieltjes: electrostatic stationarity at zeros") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx.decimal_digits);
  HSConfig cfg;
  cfg.points = {Complex(-1L), Complex(Real("0.3"), Real(0L)), Complex(1L)};
  cfg.b = HSConfig::unit_residue_b(cfg.points);
  cfg.n = 3;
  auto results = heine_stieltjes_solve(cfg, ctx);
  PolynomialC a = cfg.a_poly();
  for (const auto& r : results) {
    for (size_t k = 0; k < r.zeros.size(); ++k) {
      Complex s(0L);
      for (size_t j = 0; j < r.zeros.size(); ++j)
        if (j != k) s += Real(2L) / (r.zeros[k] - r.zeros[j]);
      s += cfg.b.eval(r.zeros[k]) / a.eval(r.zeros[k]);
      CHECK(abs(s).to_double() < 1e-38);
    }
  }
}

TEST_CASE("hermite_pade_type1: partial fractions pair at n = 0") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx.decimal_digits);
  // f1 = 1/(z-1), f2 = 1/(z+1): solution (0, 1, -1) up to scale.
  SeriesGerm f1 = ones_germ(6);
  SeriesGerm f2;
  for (int k = 0; k < 6; ++k) f2.coeffs.push_back(Complex((k % 2 == 0) ? 1L : -1L));
  HermitePadeResult r = hermite_pade_type1(f1, f2, 0, ctx);
  CHECK_FALSE(r.non_normal);
  // Normalized by Q2 lead: Q2 = 1... normalization tries Q2 monic: (0,1,-1)/(-1) = (0,-1,1).
  Complex ratio = r.q1[0] / r.q2[0];
  CHECK(close(ratio, Complex(-1L), 1e-44));
  CHECK(abs(r.q0[0]).to_double() < 1e-44);
  CHECK(r.order_residual.to_double() < 1e-44);
}

TEST_CASE("hermite_pade_type1: identical germs flag degeneracy") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx.decimal_digits);
  SeriesGerm f = ones_germ(10);
  HermitePadeResult r = hermite_pade_type1(f, f, 1, ctx);
  CHECK(r.non_normal);
  // Dependent germs force an identically vanishing remainder.
  CHECK(r.order_residual.to_double() < 1e-40);
  for (long m : {4L, 5L, 6L})
    CHECK(abs(hp_remainder_coeff(r, f, f, m)).to_double() < 1e-40);
}

TEST_CASE("hermite_pade remainder order 2(n+1) on showcase germs") {
  PrecisionContext ctx(80);
  ScopedPrecision sp(ctx.decimal_digits);
  int n = 4;
  SeriesGerm f1 = series_from_semiclassical(hp_showcase_f1(), 3 * n + 6, ctx);
  SeriesGerm f2 = series_from_semiclassical(hp_showcase_f2(), 3 * n + 6, ctx);
  HermitePadeResult r = hermite_pade_type1(f1, f2, n, ctx);
  CHECK(r.order_residual.to_double() < 1e-60);
  // First unconstrained coefficient is z^{-(2n+2)}; generically nonzero.
  CHECK(abs(hp_remainder_coeff(r, f1, f2, 2 * n + 2)).to_double() > 1e-30);
}

TEST_CASE("determinant oracle agrees with the recurrence route (N <= 6)") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx.decimal_digits);
  ExpSumWeight w = ExpSumWeight::cosh_weight(Real("0.6"), Complex(-1L), Complex(1L), 5);
  MomentTable m = moments_expsum(w, 12, ctx);
  RecurrenceCoeffs rc = recurrence_coeffs(m, 6, ctx);
  PolynomialC via_rec = monic_from_recurrence(rc, 6);
  PolynomialC via_det = op_from_moment_determinants(m, 6, ctx);
  for (int j = 0; j <= 6; ++j) CHECK(close(via_rec[j], via_det[j], 1e-40));
}
