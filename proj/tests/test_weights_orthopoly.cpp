#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "scurve/orthopoly.hpp"
#include "scurve/quadrature.hpp"

#include <cmath>

using namespace scurve;

namespace {

bool close(const Complex& a, const Complex& b, double tol) {
  return abs(a - b).to_double() < tol;
}

ExpSumWeight lebesgue_weight(int n = 1) {
  return ExpSumWeight::single(Complex(0L), Complex(-1L), Complex(1L), n);
}

}  // namespace

TEST_CASE("weight_eval examples") {
  ScopedPrecision sp(50);
  // Two flat terms at z=0.
  ExpSumWeight w({WeightTerm{Complex(0L)}, WeightTerm{Complex(Real("0.6"), Real(0L))}},
                 Complex(-1L), Complex(1L), 1);
  CHECK(close(weight_eval(w, Complex(0L)), Complex(2L), 1e-45));

  // cosh weight at z=1, n=1: 2 cosh(0.7).
  ExpSumWeight wc = ExpSumWeight::cosh_weight(Real("0.7"), Complex(-1L), Complex(1L), 1);
  Real expect = exp(Real("0.7")) + exp(Real("-0.7"));
  CHECK(abs(weight_eval(wc, Complex(1L)) - Complex(expect, Real(0L))).to_double() < 1e-45);
  CHECK(expect.to_double() == doctest::Approx(2.5103404).epsilon(1e-6));

  // Single term k=0.4, n=150, z=-1-2i: modulus e^60.
  ExpSumWeight ws = ExpSumWeight::single(Complex(Real("0.4"), Real(0L)), Complex(-1L), Complex(1L), 150);
  Complex v = weight_eval(ws, Complex(Real(-1L), Real(-2L)));
  CHECK((log(abs(v)) - Real(60L)).to_double() == doctest::Approx(0.0).epsilon(1e-30));
}

TEST_CASE("weight construction rejects bad input") {
  CHECK_THROWS(ExpSumWeight({WeightTerm{Complex(1L)}, WeightTerm{Complex(1L)}},
                            Complex(-1L), Complex(1L), 1));
  CHECK_THROWS(ExpSumWeight({WeightTerm{Complex(1L)}}, Complex(1L), Complex(1L), 1));
}

TEST_CASE("external_field: two symmetric slopes give -|Re z|") {
  ScopedPrecision sp(50);
  ExpSumWeight w({WeightTerm{Complex(1L)}, WeightTerm{Complex(-1L)}}, Complex(-1L), Complex(1L), 1);
  ExternalField f = external_field(w);
  CHECK(f.eval(Complex(2L)).to_double() == doctest::Approx(-2.0));
  CHECK(f.eval(Complex(Real(-3L), Real("0.5"))).to_double() == doctest::Approx(-3.0));
  CHECK(harmonic_regions(f).size() == 2);  // two half-planes split by iR
}

TEST_CASE("external_field: single term is one region") {
  ScopedPrecision sp(50);
  ExpSumWeight w = ExpSumWeight::single(Complex(Real("0.4"), Real(0L)), Complex(-1L), Complex(1L), 1);
  ExternalField f = external_field(w);
  CHECK(harmonic_regions(f).size() == 1);
  CHECK(f.eval(Complex(Real(3L), Real(7L))).to_double() == doctest::Approx(1.2));
}

TEST_CASE("external_field: terms {0, k>0} reproduce the one-sided field") {
  ScopedPrecision sp(50);
  ExpSumWeight w = ExpSumWeight::one_plus_exp(Real("0.5"), Complex(-1L), Complex(1L), 1);
  ExternalField f = external_field(w);
  CHECK(f.eval(Complex(2L)).to_double() == doctest::Approx(0.0));
  CHECK(f.eval(Complex(-2L)).to_double() == doctest::Approx(-1.0));
  CHECK(harmonic_regions(f).size() == 2);
}

TEST_CASE("external_field: three real slopes collapse to two boundary lines") {
  ScopedPrecision sp(50);
  // Lower envelope of three homogeneous forms in Re z: middle slope never
  // wins on an open set.
  ExpSumWeight w({WeightTerm{Complex(2L)}, WeightTerm{Complex(1L)}, WeightTerm{Complex(-1L)}},
                 Complex(-1L), Complex(1L), 1);
  ExternalField f = external_field(w);
  auto regions = harmonic_regions(f);
  CHECK(regions.size() == 2);
  for (const auto& r : regions) CHECK(abs(r.slope_k - Complex(1L)).to_double() > 0.5);
}

TEST_CASE("external_field invariants: reorder, superharmonicity, weight limit") {
  ScopedPrecision sp(60);
  std::vector<WeightTerm> ts{WeightTerm{Complex(Real("0.7"), Real(0L))},
                             WeightTerm{Complex(Real("-0.7"), Real(0L))}};
  ExpSumWeight w(ts, Complex(-1L), Complex(1L), 1);
  std::vector<WeightTerm> rev{ts[1], ts[0]};
  ExpSumWeight w2(rev, Complex(-1L), Complex(1L), 1);
  ExternalField f1 = external_field(w), f2 = external_field(w2);
  for (double x : {-1.3, 0.4, 2.0})
    for (double y : {-0.8, 0.3})
      CHECK(abs(f1.eval(Complex(x, y)) - f2.eval(Complex(x, y))).to_double() < 1e-40);

  // Mean value inequality on small circles (superharmonic min of harmonics).
  for (double x : {-0.5, 0.001, 0.7}) {
    Complex z0(x, 0.2);
    Real mean(0L);
    const int M = 64;
    for (int j = 0; j < M; ++j) {
      Real th = Real(2L) * pi() * Real(j) / Real(M);
      mean += f1.eval(z0 + polar(Real("0.05"), th));
    }
    mean = mean / Real(M);
    CHECK(f1.eval(z0).to_double() >= mean.to_double() - 1e-12);
  }

  // |(-1/n) log|w_n(z)| - phi(z)| <= (log m + 1)/n off the boundary.
  for (int n : {50, 100, 200}) {
    ExpSumWeight wn(ts, Complex(-1L), Complex(1L), n);
    double bound = (std::log(2.0) + 1.0) / n;
    for (double x : {-1.6, -0.42, 0.39, 1.7}) {
      for (double y : {-1.0, 0.0, 0.8}) {
        Complex z(x, y);
        if (std::fabs(x) < 1e-3) continue;  // boundary neighborhood excluded
        Real lhs = -log(abs(weight_eval(wn, z))) / Real(static_cast<long>(n));
        CHECK(abs(lhs - f1.eval(z)).to_double() <= bound);
      }
    }
  }
}

TEST_CASE("moments_expsum examples") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx.decimal_digits);

  // Single term, j=0: (1 - e^-1) for a1=0, a2=1, s=1.
  ExpSumWeight w1 = ExpSumWeight::single(Complex(1L), Complex(0L), Complex(1L), 1);
  MomentTable t1 = moments_expsum(w1, 1, ctx);
  Real expect = Real(1L) - exp(Real(-1L));
  CHECK(abs(t1.values[0] - Complex(expect, Real(0L))).to_double() < 1e-45);
  CHECK(t1.values[0].re.to_double() == doctest::Approx(0.632121).epsilon(1e-6));

  // s=0 gives the Lebesgue moments of [-1,1].
  MomentTable t0 = moments_expsum(lebesgue_weight(), 3, ctx);
  CHECK(close(t0.values[0], Complex(2L), 1e-45));
  CHECK(close(t0.values[1], Complex(0L), 1e-45));
  CHECK(abs(t0.values[2] - Complex(Real(2L) / Real(3L), Real(0L))).to_double() < 1e-45);
}

TEST_CASE("moments_expsum vs adaptive quadrature, j <= 20, s = 150*0.4") {
  PrecisionContext ctx(80);
  ScopedPrecision sp(ctx.decimal_digits);
  ExpSumWeight w = ExpSumWeight::single(Complex(Real("0.4"), Real(0L)),
                                        Complex(Real(-1L), Real(-2L)), Complex(Real(-1L), Real(2L)),
                                        150);
  MomentTable rec = moments_expsum(w, 21, ctx);
  MomentTable quad = moments_quadrature(w, 21, Path::line(w.a1, w.a2), ctx);
  for (int j = 0; j <= 20; ++j) {
    Real denom = max(abs(quad.values[static_cast<size_t>(j)]), Real(1L));
    CHECK((abs(rec.values[static_cast<size_t>(j)] - quad.values[static_cast<size_t>(j)]) / denom)
              .to_double() < 1e-60);
  }
}

TEST_CASE("recurrence_coeffs: Legendre and trivial cases") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx.decimal_digits);
  MomentTable t = moments_expsum(lebesgue_weight(), 12, ctx);
  RecurrenceCoeffs rc = recurrence_coeffs(t, 6, ctx);
  for (const auto& a : rc.alpha) CHECK(abs(a).to_double() < 1e-40);
  CHECK(abs(rc.beta[1] - Complex(Real(1L) / Real(3L), Real(0L))).to_double() < 1e-40);
  CHECK(abs(rc.beta[2] - Complex(Real(4L) / Real(15L), Real(0L))).to_double() < 1e-40);
  // Classical monic Legendre: beta_k = k^2/(4k^2-1).
  for (int k = 1; k < 6; ++k) {
    Real expect = Real(static_cast<long>(k * k)) / Real(static_cast<long>(4 * k * k - 1));
    CHECK(abs(rc.beta[static_cast<size_t>(k)] - Complex(expect, Real(0L))).to_double() < 1e-38);
  }

  // N=1 generic: alpha_0 = mu_1/mu_0.
  ExpSumWeight wg = ExpSumWeight::single(Complex(Real("0.3"), Real("0.1")), Complex(0L),
                                         Complex(Real(1L), Real(1L)), 3);
  MomentTable tg = moments_expsum(wg, 2, ctx);
  RecurrenceCoeffs rg = recurrence_coeffs(tg, 1, ctx);
  CHECK(close(rg.alpha[0], tg.values[1] / tg.values[0], 1e-45));
  CHECK(close(rg.beta[0], tg.values[0], 1e-45));
}

TEST_CASE("recurrence_coeffs: truncated Laguerre beta_1 ~ 1") {
  PrecisionContext ctx(60);
  ScopedPrecision sp(ctx.decimal_digits);
  // e^{-z} on [0, 50]: Laguerre beta_k = k^2 up to negligible truncation.
  ExpSumWeight w = ExpSumWeight::single(Complex(1L), Complex(0L), Complex(50L), 1);
  MomentTable t = moments_expsum(w, 6, ctx);
  RecurrenceCoeffs rc = recurrence_coeffs(t, 3, ctx);
  CHECK(abs(rc.beta[1] - Complex(1L)).to_double() < 1e-15);
  CHECK(abs(rc.alpha[0] - Complex(1L)).to_double() < 1e-15);  // Laguerre alpha_k = 2k+1
}

TEST_CASE("op_zeros: Lebesgue N=2 gives +-1/sqrt(3)") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx.decimal_digits);
  OpZerosResult r = op_zeros(lebesgue_weight(), 2, ctx);
  REQUIRE(r.zeros.size() == 2);
  Real root = Real(1L) / sqrt(Real(3L));
  Real worst(1L);
  for (const auto& z : r.zeros) worst = min(worst, abs(abs(z) - root));
  CHECK(worst.to_double() < 1e-40);
  CHECK_FALSE(r.route_warning);
}

TEST_CASE("op_zeros: symmetry of cosh zero set under z -> -z") {
  PrecisionContext ctx(80);
  ScopedPrecision sp(ctx.decimal_digits);
  ExpSumWeight w = ExpSumWeight::cosh_weight(Real("0.7"), Complex(-1L), Complex(1L), 12);
  OpZerosResult r = op_zeros(w, 12, ctx);
  for (const auto& z : r.zeros) {
    Real best(1L);
    for (const auto& y : r.zeros) best = min(best, abs(y + z));
    CHECK(best.to_double() < 1e-40);
  }
}

TEST_CASE("moments: path invariance and split-path convention") {
  PrecisionContext ctx(60);
  ScopedPrecision sp(ctx.decimal_digits);
  ExpSumWeight w = ExpSumWeight::cosh_weight(Real("0.5"), Complex(-1L), Complex(1L), 6);

  // Homotopic detour polyline gives the same moments (weights are entire).
  Path direct = Path::line(w.a1, w.a2);
  Path detour = Path::polyline({w.a1, Complex(Real(0L), Real("0.7")), w.a2});
  MomentTable m1 = moments_quadrature(w, 8, direct, ctx);
  MomentTable m2 = moments_quadrature(w, 8, detour, ctx);
  MomentTable mrec = moments_expsum(w, 8, ctx);
  for (int j = 0; j < 8; ++j) {
    CHECK(abs(m1.values[static_cast<size_t>(j)] - m2.values[static_cast<size_t>(j)]).to_double() < 1e-45);
    CHECK(abs(m1.values[static_cast<size_t>(j)] - mrec.values[static_cast<size_t>(j)]).to_double() < 1e-45);
  }

  // Sum over two independent paths, one per term.
  ExpSumWeight e_plus = ExpSumWeight::single(Complex(Real("0.5"), Real(0L)), w.a1, w.a2, 6);
  ExpSumWeight e_minus = ExpSumWeight::single(Complex(Real("-0.5"), Real(0L)), w.a1, w.a2, 6);
  Path f1 = Path::polyline({w.a1, Complex(Real("-0.4"), Real("-0.9")), w.a2});
  Path f2 = Path::polyline({w.a1, Complex(Real("0.3"), Real("1.1")), w.a2});
  MomentTable s1 = moments_quadrature(e_plus, 8, f1, ctx);
  MomentTable s2 = moments_quadrature(e_minus, 8, f2, ctx);
  for (int j = 0; j < 8; ++j)
    CHECK(abs(s1.values[static_cast<size_t>(j)] + s2.values[static_cast<size_t>(j)] -
              mrec.values[static_cast<size_t>(j)])
              .to_double() < 1e-45);
}

TEST_CASE("orthogonality_residual: certificate and witness") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx.decimal_digits);
  ExpSumWeight w = lebesgue_weight();
  Path path = Path::line(w.a1, w.a2);

  OpZerosResult r = op_zeros(w, 2, ctx);
  CHECK(orthogonality_residual(r.q, w, path, ctx).to_double() < 1e-30);

  // Wrong polynomial z^2: k=0 gives |mu_2| / int|w||dz| = (2/3)/2, an O(1) witness.
  PolynomialC wrong = PolynomialC::monomial(2);
  Real res = orthogonality_residual(wrong, w, path, ctx);
  CHECK(res.to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-8));

  // N=0 vacuous.
  CHECK(orthogonality_residual(PolynomialC::constant(Complex(1L)), w, path, ctx).is_zero());
}

TEST_CASE("degenerate moment sequence is reported, not perturbed") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx.decimal_digits);
  // Moments of the signed measure z on [-1,1]: mu_j = ((1)^{j+2}-(-1)^{j+2})/(j+2);
  // mu_0 = 0 makes the very first pivot collapse.
  MomentTable t;
  t.n = 1;
  for (int j = 0; j < 4; ++j) {
    long p = j + 2;
    Real v = (Real(1L) - Real((p % 2 == 0) ? 1L : -1L)) / Real(p);
    t.values.push_back(Complex(v, Real(0L)));
  }
  CHECK_THROWS_WITH_AS(recurrence_coeffs(t, 2, ctx), "degenerate moment sequence at 0",
                       std::runtime_error);
}
