#include "scurve/newton.hpp"

#include "scurve/linalg.hpp"

#include <stdexcept>

namespace scurve {

namespace {

Real max_norm(const std::vector<Real>& v) {
  Real m(0L);
  for (const Real& x : v) m = max(m, abs(x));
  return m;
}

}  // namespace

std::vector<Real> newton_solve(const RealSystem& f, std::vector<Real> x, const Real& tol,
                               int max_iters, NewtonReport* report) {
  const size_t n = x.size();
  std::vector<Real> fx = f(x);
  if (fx.size() != n) throw std::invalid_argument("newton_solve: non-square system");
  Real rn = max_norm(fx);

  // Differencing step: half the significant digits of the working precision.
  long prec_digits = static_cast<long>(detail::working_prec() / 3.33);
  Real hbase = pow10(-(prec_digits / 2));

  int it = 0;
  for (; it < max_iters && rn > tol; ++it) {
    std::vector<std::vector<Real>> jac(n, std::vector<Real>(n, Real(0L)));
    for (size_t j = 0; j < n; ++j) {
      Real h = hbase * max(Real(1L), abs(x[j]));
      std::vector<Real> xp = x;
      xp[j] += h;
      std::vector<Real> fp = f(xp);
      for (size_t i = 0; i < n; ++i) jac[i][j] = (fp[i] - fx[i]) / h;
    }
    std::vector<Real> rhs(n);
    for (size_t i = 0; i < n; ++i) rhs[i] = -fx[i];
    std::vector<Real> dx = real_solve(std::move(jac), std::move(rhs));

    // Backtracking line search on the residual norm.
    Real lambda(1L);
    bool accepted = false;
    for (int half = 0; half < 12; ++half) {
      std::vector<Real> xt = x;
      for (size_t j = 0; j < n; ++j) xt[j] += lambda * dx[j];
      std::vector<Real> ft = f(xt);
      Real rt = max_norm(ft);
      if (rt < rn || (half == 0 && rt <= tol)) {
        x = std::move(xt);
        fx = std::move(ft);
        rn = rt;
        accepted = true;
        break;
      }
      lambda = lambda * Real("0.5");
    }
    if (!accepted) break;
  }
  if (report) {
    report->converged = (rn <= tol);
    report->iterations = it;
    report->residual_norm = rn;
  }
  return x;
}

}  // namespace scurve
