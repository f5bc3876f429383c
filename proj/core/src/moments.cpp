#include "scurve/moments.hpp"

#include "scurve/quadrature.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace scurve {

namespace {

// mu_hat_j(s), j = 0..count-1, for one exponential slope s between a1, a2.
std::vector<Complex> exp_moment_chain(const Complex& s, const Complex& a1, const Complex& a2,
                                      int count) {
  std::vector<Complex> mu(static_cast<size_t>(count));
  if (s.is_zero()) {
    for (int j = 0; j < count; ++j)
      mu[static_cast<size_t>(j)] =
          (pow(a2, j + 1) - pow(a1, j + 1)) / Real(static_cast<long>(j + 1));
    return mu;
  }
  // Series fallback when s is tiny: int z^j e^{-sz} = sum_m (-s)^m/m! * (a2^{j+m+1}-a1^{j+m+1})/(j+m+1).
  Real smag = abs(s);
  Real amax = max(abs(a1), abs(a2));
  if (smag * max(amax, Real(1L)) < pow10(-8)) {
    for (int j = 0; j < count; ++j) {
      Complex acc(0L);
      Complex term(1L);  // (-s)^m / m!
      Complex p1 = pow(a1, j + 1), p2 = pow(a2, j + 1);
      for (int m = 0;; ++m) {
        Complex add = term * (p2 - p1) / Real(static_cast<long>(j + m + 1));
        acc += add;
        if (abs(add) < abs(acc) * pow10(-(static_cast<long>(detail::working_prec() / 3.2) + 5)) &&
            m > 2)
          break;
        term = term * (-s) / Real(static_cast<long>(m + 1));
        p1 = p1 * a1;
        p2 = p2 * a2;
        if (m > 300) break;
      }
      mu[static_cast<size_t>(j)] = acc;
    }
    return mu;
  }
  Complex e1 = exp(-(s * a1)), e2 = exp(-(s * a2));
  Complex p1(1L), p2(1L);  // a1^j, a2^j
  Complex prev(0L);
  for (int j = 0; j < count; ++j) {
    Complex cur = (p1 * e1 - p2 * e2 + Real(static_cast<long>(j)) * prev) / s;
    mu[static_cast<size_t>(j)] = cur;
    prev = cur;
    p1 *= a1;
    p2 *= a2;
  }
  return mu;
}

}  // namespace

MomentTable moments_expsum(const ExpSumWeight& w, int count, const PrecisionContext& ctx) {
  if (count < 1) throw std::invalid_argument("moments_expsum: count must be >= 1");
  ScopedPrecision sp(ctx.decimal_digits);
  int max_shift = 0;
  for (const auto& t : w.terms) max_shift = std::max(max_shift, t.prefactor.degree());

  // Per-term chains advanced jointly so the sum accumulates in one pass.
  struct Chain {
    std::vector<Complex> mu;
    const PolynomialC* g;
  };
  std::vector<Chain> chains;
  Real nn(static_cast<long>(w.n));
  for (const auto& t : w.terms)
    chains.push_back({exp_moment_chain(nn * t.slope_k, w.a1, w.a2, count + max_shift), &t.prefactor});

  MomentTable table;
  table.n = w.n;
  table.values.assign(static_cast<size_t>(count), Complex(0L));
  for (int j = 0; j < count; ++j) {
    Complex sum(0L);
    for (const auto& ch : chains) {
      const auto& gc = ch.g->coeffs();
      for (size_t m = 0; m < gc.size(); ++m)
        if (!gc[m].is_zero()) sum += gc[m] * ch.mu[static_cast<size_t>(j) + m];
    }
    table.values[static_cast<size_t>(j)] = sum;
  }
  return table;
}

MomentTable moments_quadrature(const ExpSumWeight& w, int count, const Path& path,
                               const PrecisionContext& ctx) {
  ScopedPrecision sp(ctx.decimal_digits);
  MomentTable table;
  table.n = w.n;
  for (int j = 0; j < count; ++j) {
    ComplexFun f = [&](const Complex& z) { return pow(z, j) * weight_eval(w, z); };
    table.values.push_back(contour_integrate(f, path, ctx));
  }
  return table;
}

RecurrenceCoeffs recurrence_coeffs(const MomentTable& m, int N, const PrecisionContext& ctx) {
  if (static_cast<int>(m.values.size()) < 2 * N)
    throw std::invalid_argument("recurrence_coeffs: need 2N moments");
  ScopedPrecision sp(ctx.decimal_digits);
  const auto& mu = m.values;

  RecurrenceCoeffs rc;
  if (N == 0) return rc;
  if (abs(mu[0]).is_zero()) throw std::runtime_error("degenerate moment sequence at 0");
  rc.alpha.push_back(mu[1] / mu[0]);
  rc.beta.push_back(mu[0]);

  // sigma rows of the Chebyshev algorithm.
  std::vector<Complex> prev2(mu.size(), Complex(0L));            // sigma_{k-2}
  std::vector<Complex> prev(mu.begin(), mu.end());               // sigma_{k-1}, starts as sigma_0 = mu
  Real tolerance = pow10(-(ctx.decimal_digits - 6));
  for (int k = 1; k < N; ++k) {
    std::vector<Complex> cur(mu.size(), Complex(0L));
    Real rowmax(0L);
    for (int l = k; l <= 2 * N - k - 1; ++l) {
      auto ul = static_cast<size_t>(l);
      cur[ul] = prev[ul + 1] - rc.alpha[static_cast<size_t>(k - 1)] * prev[ul] -
                rc.beta[static_cast<size_t>(k - 1)] * prev2[ul];
      rowmax = max(rowmax, abs(cur[ul]));
    }
    auto uk = static_cast<size_t>(k);
    Complex skk = cur[uk];
    Complex skk1 = cur[uk + 1];
    Complex pkk = prev[uk - 1];  // sigma_{k-1,k-1}
    if (abs(skk) <= tolerance * max(rowmax, abs(pkk)))
      throw std::runtime_error("degenerate moment sequence at " + std::to_string(k));
    rc.alpha.push_back(skk1 / skk - prev[uk] / pkk);
    rc.beta.push_back(skk / pkk);
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return rc;
}

}  // namespace scurve
