#include "scurve/pade.hpp"

#include "scurve/linalg.hpp"
#include "scurve/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace scurve {

namespace {

// c_k with out-of-range guard (k < 0 -> 0).
Complex tail_at(const SeriesGerm& f, long k) {
  if (k < 0 || k >= static_cast<long>(f.coeffs.size())) return Complex(0L);
  return f.coeffs[static_cast<size_t>(k)];
}

}  // namespace

PadeResult pade_denominator(const SeriesGerm& f, int n, const PrecisionContext& ctx) {
  if (f.tail_length() < 2 * n) throw std::invalid_argument("pade_denominator: need 2n coefficients");
  ScopedPrecision sp(ctx.decimal_digits);

  PadeResult res;
  if (n == 0) {
    res.q = PolynomialC::constant(Complex(1L));
  } else {
    // Conditions sum_{m=0}^{n} q_m c_{m+l-1} = 0 for l = 1..n. Try the monic
    // solve first; fall back to a nullspace vector at non-normal indices.
    bool monic_ok = true;
    std::vector<Complex> q;
    try {
      CMatrix a(n, n);
      std::vector<Complex> rhs(static_cast<size_t>(n));
      for (int l = 1; l <= n; ++l)
        for (int m = 0; m < n; ++m) a(l - 1, m) = tail_at(f, m + l - 1);
      for (int l = 1; l <= n; ++l) rhs[static_cast<size_t>(l - 1)] = -tail_at(f, n + l - 1);
      q = lu_solve(a, rhs);
      q.push_back(Complex(1L));
      // Guard against a nearly singular solve: residual check.
      Real scale(0L), resid(0L);
      for (int l = 1; l <= n; ++l) {
        Complex s(0L);
        Real rs(0L);
        for (int m = 0; m <= n; ++m) {
          Complex t = q[static_cast<size_t>(m)] * tail_at(f, m + l - 1);
          s += t;
          rs += abs(t);
        }
        resid = max(resid, abs(s));
        scale = max(scale, rs);
      }
      if (scale.is_zero()) scale = Real(1L);
      if (resid > pow10(-(ctx.decimal_digits / 2)) * scale) monic_ok = false;
    } catch (const std::runtime_error&) {
      monic_ok = false;
    }
    if (!monic_ok) {
      CMatrix a(n, n + 1);
      for (int l = 1; l <= n; ++l)
        for (int m = 0; m <= n; ++m) a(l - 1, m) = tail_at(f, m + l - 1);
      bool deficient = false;
      q = null_vector(a, &deficient);
      res.non_normal = true;
      // Unit leading coefficient of the nonzero part.
      int lead = n;
      Real qmax(0L);
      for (const auto& c : q) qmax = max(qmax, abs(c));
      while (lead > 0 && abs(q[static_cast<size_t>(lead)]) < qmax * pow10(-(ctx.decimal_digits / 2)))
        --lead;
      Complex l = q[static_cast<size_t>(lead)];
      for (auto& c : q) c = c / l;
    }
    res.q = PolynomialC(std::move(q));
  }

  // P = truncation of Q f at nonnegative powers: [Qf]_{z^j} = sum_m q_m c_{m-j-1}.
  std::vector<Complex> p(static_cast<size_t>(std::max(res.q.degree(), 1)), Complex(0L));
  for (int j = 0; j < res.q.degree(); ++j) {
    Complex s(0L);
    for (int m = 0; m <= res.q.degree(); ++m) s += res.q[m] * tail_at(f, m - j - 1);
    p[static_cast<size_t>(j)] = s;
  }
  res.p = PolynomialC(std::move(p));
  return res;
}

std::vector<Complex> pade_remainder_tail(const PadeResult& r, const SeriesGerm& f, int count) {
  std::vector<Complex> out;
  for (int l = 1; l <= count; ++l) {
    Complex s(0L);
    for (int m = 0; m <= r.q.degree(); ++m) s += r.q[m] * tail_at(f, m + l - 1);
    out.push_back(s);
  }
  return out;
}

std::vector<PadePole> pade_poles(const PadeResult& r, const PrecisionContext& ctx) {
  ScopedPrecision sp(ctx.decimal_digits);
  std::vector<Complex> roots = poly_roots(r.q, ctx);
  PolynomialC dq = r.q.derivative();
  std::vector<PadePole> poles;
  for (size_t i = 0; i < roots.size(); ++i) {
    PadePole pole;
    pole.location = roots[i];
    // Pole clusters: nearest sibling closer than the multiple-root resolution.
    Real sep(1L);
    for (size_t j = 0; j < roots.size(); ++j)
      if (j != i) sep = min(sep, abs(roots[i] - roots[j]));
    pole.multiple = sep < pow10(-(ctx.decimal_digits / 3));
    if (!pole.multiple) pole.residue = r.p.eval(roots[i]) / dq.eval(roots[i]);
    poles.push_back(std::move(pole));
  }
  return poles;
}

void detect_spurious(std::vector<PadePole>& poles, const Real& threshold) {
  std::vector<Real> mags;
  for (const auto& p : poles)
    if (!p.multiple) mags.push_back(abs(p.residue));
  if (mags.empty()) return;
  std::sort(mags.begin(), mags.end());
  Real median = mags[mags.size() / 2];
  for (auto& p : poles)
    if (!p.multiple) p.spurious = abs(p.residue) < threshold * median;
}

}  // namespace scurve
