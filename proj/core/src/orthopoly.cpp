#include "scurve/orthopoly.hpp"

#include "scurve/linalg.hpp"
#include "scurve/quadrature.hpp"
#include "scurve/roots.hpp"

#include <stdexcept>

namespace scurve {

PolynomialC monic_from_recurrence(const RecurrenceCoeffs& rc, int N) {
  PolynomialC qm1;                                // Q_{-1} = 0
  PolynomialC q0 = PolynomialC::constant(Complex(1L));  // Q_0 = 1
  if (N == 0) return q0;
  PolynomialC x = PolynomialC::monomial(1);
  for (int k = 0; k < N; ++k) {
    PolynomialC q1 = (x - PolynomialC::constant(rc.alpha[static_cast<size_t>(k)])) * q0;
    if (k > 0) q1 = q1 - rc.beta[static_cast<size_t>(k)] * qm1;
    qm1 = std::move(q0);
    q0 = std::move(q1);
  }
  return q0;
}

namespace {

// Max over one set of the distance to the nearest point of the other.
Real cloud_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Real worst(0L);
  for (const Complex& x : a) {
    Real best = abs(x - b[0]);
    for (const Complex& y : b) best = min(best, abs(x - y));
    worst = max(worst, best);
  }
  return worst;
}

OpZerosResult zeros_once(const MomentTable& m, int N, const PrecisionContext& ctx) {
  ScopedPrecision sp(ctx.decimal_digits);
  RecurrenceCoeffs rc = recurrence_coeffs(m, N, ctx);

  OpZerosResult res;
  res.digits_used = ctx.decimal_digits;
  res.q = monic_from_recurrence(rc, N);
  res.zeros = poly_roots(res.q, ctx);

  // Cross-check: eigenvalues of the complex Jacobi matrix.
  CMatrix jac(N, N);
  for (int i = 0; i < N; ++i) {
    jac(i, i) = rc.alpha[static_cast<size_t>(i)];
    if (i + 1 < N) {
      Complex sb = sqrt(rc.beta[static_cast<size_t>(i + 1)]);
      jac(i, i + 1) = sb;
      jac(i + 1, i) = sb;
    }
  }
  std::vector<Complex> eig = eigenvalues(jac);
  Real d = max(cloud_distance(res.zeros, eig), cloud_distance(eig, res.zeros));
  res.route_disagreement = d;
  res.route_warning = d > pow10(3) * ctx.root_tolerance();
  return res;
}

}  // namespace

OpZerosResult op_zeros_from_moments(const MomentTable& m, int N, const PrecisionContext& ctx) {
  OpZerosResult res = zeros_once(m, N, ctx);
  if (res.route_disagreement > Real("1e-3")) {
    throw std::runtime_error("unstable zero computation; raise precision");
  }
  return res;
}

OpZerosResult op_zeros(const ExpSumWeight& w, int N, const PrecisionContext& ctx) {
  MomentTable m = moments_expsum(w, 2 * N, ctx);
  OpZerosResult res = zeros_once(m, N, ctx);
  if (res.route_disagreement > Real("1e-3")) {
    // One escalation retry at doubled digits before giving up.
    PrecisionContext ctx2 = ctx.escalated();
    MomentTable m2 = moments_expsum(w, 2 * N, ctx2);
    res = zeros_once(m2, N, ctx2);
    if (res.route_disagreement > Real("1e-3"))
      throw std::runtime_error("unstable zero computation; raise precision");
  }
  return res;
}

namespace {

Complex determinant(CMatrix a) {
  const int n = a.rows();
  Complex det(1L);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    Real best = abs(a(k, k));
    for (int i = k + 1; i < n; ++i)
      if (abs(a(i, k)) > best) { best = abs(a(i, k)); piv = i; }
    if (best.is_zero()) return Complex(0L);
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    det *= a(k, k);
    for (int i = k + 1; i < n; ++i) {
      Complex m = a(i, k) / a(k, k);
      for (int j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
    }
  }
  return det;
}

}  // namespace

PolynomialC op_from_moment_determinants(const MomentTable& m, int N, const PrecisionContext& ctx) {
  if (N > 12) throw std::invalid_argument("determinant oracle limited to N <= 12");
  if (static_cast<int>(m.values.size()) < 2 * N) throw std::invalid_argument("need 2N moments");
  ScopedPrecision sp(ctx.decimal_digits);
  if (N == 0) return PolynomialC::constant(Complex(1L));

  // Q_N(z) = det [ mu_{i+j} (rows i=0..N-1, cols j=0..N) with last row (1, z, .., z^N) ] / Delta_N.
  CMatrix hank(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) hank(i, j) = m.values[static_cast<size_t>(i + j)];
  Complex delta = determinant(hank);
  if (delta.is_zero()) throw std::runtime_error("degenerate moment sequence (Hankel determinant 0)");

  std::vector<Complex> coeffs(static_cast<size_t>(N) + 1, Complex(0L));
  for (int col = 0; col <= N; ++col) {
    // Minor: drop column `col` from the N x (N+1) moment block.
    CMatrix minor(N, N);
    for (int i = 0; i < N; ++i) {
      int jj = 0;
      for (int j = 0; j <= N; ++j) {
        if (j == col) continue;
        minor(i, jj++) = m.values[static_cast<size_t>(i + j)];
      }
    }
    Complex sign = ((N + col) % 2 == 0) ? Complex(1L) : Complex(-1L);
    coeffs[static_cast<size_t>(col)] = sign * determinant(minor) / delta;
  }
  return PolynomialC(std::move(coeffs));
}

Real orthogonality_residual(const PolynomialC& q, const ExpSumWeight& w, const Path& path,
                            const PrecisionContext& ctx) {
  ScopedPrecision sp(ctx.decimal_digits);
  const int N = q.degree();
  if (N == 0) return Real(0L);
  Real worst(0L);
  for (int k = 0; k < N; ++k) {
    ComplexFun num = [&](const Complex& z) { return q.eval(z) * pow(z, k) * weight_eval(w, z); };
    Complex val = contour_integrate(num, path, ctx);
    // Normalizer: arclength integral of |z^k w|.
    Real den(0L);
    for (const auto& seg : path.segments) {
      auto integrand = [&](const Real& t) {
        Complex z = seg.point(t);
        return Complex(abs(pow(z, k) * weight_eval(w, z)) * abs(seg.tangent(t)), Real(0L));
      };
      den += tanhsinh_01(integrand, ctx).re;
    }
    worst = max(worst, abs(val) / den);
  }
  return worst;
}

}  // namespace scurve
