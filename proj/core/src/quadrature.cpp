#include "scurve/quadrature.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace scurve {

namespace {

// tanh-sinh nodes for t in (0,1): x = (1 + tanh((pi/2) sinh u)) / 2.
// Stored as (distance to nearer endpoint, weight); symmetric about 1/2.
struct TsLevel {
  std::vector<Real> dist;  // node offset from endpoint, ascending u
  std::vector<Real> wt;    // weight including the (1/2) interval scaling
};

struct TsTable {
  std::vector<TsLevel> levels;  // levels[L] holds the odd nodes of step 2^-L (level 0: u = step grid)
  Real center_weight{0L};
};

// Nodes depend only on working precision; cache per (precision, level).
thread_local std::map<mpfr_prec_t, TsTable> g_ts_cache;

constexpr int kMaxLevel = 13;

const TsTable& ts_table(int upto_level) {
  mpfr_prec_t prec = detail::working_prec();
  TsTable& tab = g_ts_cache[prec];
  if (tab.levels.empty()) {
    tab.center_weight = pi() * Real("0.25");  // weight at u=0 (x=1/2)
    // Nested integrals extend this vector while outer calls hold level
    // references; full reservation keeps those references stable.
    tab.levels.reserve(kMaxLevel + 1);
  }
  Real half_pi = pi() * Real("0.5");
  // Nodes whose weight underflows the working precision are useless.
  long digits10 = static_cast<long>(prec / 3.321928) + 8;
  Real cutoff = pow10(-(digits10 + 10));
  for (int L = static_cast<int>(tab.levels.size()); L <= upto_level; ++L) {
    tab.levels.resize(static_cast<size_t>(L) + 1);
    TsLevel& lev = tab.levels[static_cast<size_t>(L)];
    Real h = pow(Real("0.5"), L);
    // Level 0 uses u = h, 2h, 3h...; higher levels only the odd multiples.
    const long stride = (L == 0) ? 1 : 2;
    for (long k = 1;; k += stride) {
      Real u = Real(k) * h;
      Real sh = half_pi * Real("0.5") * (exp(u) - exp(-u));          // (pi/2) sinh u
      Real ch = half_pi * Real("0.5") * (exp(u) + exp(-u));          // (pi/2) cosh u
      Real e2 = exp(Real(-2L) * sh);
      Real dist = e2 / (Real(1L) + e2);                              // (1 - tanh(sh)) / 2
      Real sech2 = Real(4L) * e2 / ((Real(1L) + e2) * (Real(1L) + e2));
      Real w = ch * sech2 * Real("0.5");
      lev.dist.push_back(dist);
      lev.wt.push_back(w);
      if (w < cutoff) break;
    }
  }
  return tab;
}

}  // namespace

Complex tanhsinh_01(const std::function<Complex(const Real&)>& u, const PrecisionContext& ctx,
                    Real* err) {
  const Real tol = ctx.quad_tolerance();
  Real h(1L);
  Complex sum(0L);
  Real absum(0L);  // L1 mass of the rule; the error scale for cancelling integrands
  {
    Complex uc = u(Real("0.5"));
    sum = ts_table(0).center_weight * uc;
    absum = ts_table(0).center_weight * abs(uc);
    const TsLevel& lev = ts_table(0).levels[0];
    for (size_t i = 0; i < lev.dist.size(); ++i) {
      Complex a = u(lev.dist[i]), b = u(Real(1L) - lev.dist[i]);
      sum += lev.wt[i] * (a + b);
      absum += lev.wt[i] * (abs(a) + abs(b));
    }
  }
  Complex prev = sum;  // running weighted sum; multiply by h for the value
  Real est(1L), est_prev(1L);
  int stalled = 0;
  for (int L = 1; L <= kMaxLevel; ++L) {
    const TsLevel& lev = ts_table(L).levels[static_cast<size_t>(L)];
    Complex add(0L);
    for (size_t i = 0; i < lev.dist.size(); ++i) {
      Complex a = u(lev.dist[i]), b = u(Real(1L) - lev.dist[i]);
      add += lev.wt[i] * (a + b);
      absum += lev.wt[i] * (abs(a) + abs(b));
    }
    h = h * Real("0.5");
    Complex cur = prev + add;
    Complex val_prev = (h + h) * prev;
    Complex val_cur = h * cur;
    est_prev = est;
    est = abs(val_cur - val_prev);
    Real scale = max(max(abs(val_cur), h * absum), pow10(-2 * ctx.decimal_digits));
    prev = cur;
    if (L >= 3 && est <= tol * scale) {
      if (err) *err = est / scale;
      return val_cur;
    }
    // Merely algebraic decay means a kink in the integrand; refining past it
    // buys nothing once the estimate sits deep below the integrand scale.
    if (L >= 5 && est > Real("0.1") * est_prev && est <= pow10(-8) * scale) {
      if (++stalled >= 2) {
        if (err) *err = est / scale;
        return val_cur;
      }
    } else {
      stalled = 0;
    }
  }
  if (err) *err = est / max(abs(h * prev), max(h * absum, pow10(-2 * ctx.decimal_digits)));
  return h * prev;
}

namespace {

Complex integrate_segment(const ComplexFun& f, const PathSegment& seg, const PrecisionContext& ctx,
                          bool sing_start, bool sing_end, int depth);

Complex integrate_piece(const ComplexFun& f, const PathSegment& seg, const PrecisionContext& ctx,
                        bool sing_start, bool sing_end, int depth) {
  // Map the declared singular endpoints away with t = s^2 substitutions.
  std::function<Complex(const Real&)> integrand;
  if (sing_start && sing_end) {
    // Split in the middle and recurse; each half has one singular end.
    Complex mid_first, mid_second;
    if (seg.kind == PathSegment::Kind::Line) {
      Complex m = seg.point(Real("0.5"));
      mid_first = integrate_segment(f, PathSegment::line(seg.a, m), ctx, true, false, depth);
      mid_second = integrate_segment(f, PathSegment::line(m, seg.b), ctx, false, true, depth);
    } else {
      Real tm = (seg.theta0 + seg.theta1) * Real("0.5");
      mid_first = integrate_segment(f, PathSegment::arc(seg.center, seg.radius, seg.theta0, tm), ctx,
                                    true, false, depth);
      mid_second = integrate_segment(f, PathSegment::arc(seg.center, seg.radius, tm, seg.theta1), ctx,
                                     false, true, depth);
    }
    return mid_first + mid_second;
  }
  if (sing_start) {
    integrand = [&](const Real& s) {
      Real t = s * s;
      return f(seg.point(t)) * seg.tangent(t) * (Real(2L) * s);
    };
  } else if (sing_end) {
    // t = 1 - s^2 flips the direction twice over; no sign adjustment needed.
    integrand = [&](const Real& s) {
      Real t = Real(1L) - s * s;
      return f(seg.point(t)) * seg.tangent(t) * (Real(2L) * s);
    };
  } else {
    integrand = [&](const Real& t) { return f(seg.point(t)) * seg.tangent(t); };
  }
  Real err(0L);
  Complex val = tanhsinh_01(integrand, ctx, &err);
  if (err <= Real(10L) * ctx.quad_tolerance()) return val;
  if (depth <= 0)
    throw std::runtime_error("quadrature failure near segment starting at " + seg.start().str(8));
  // Bisect and keep the singular flags on the outer halves.
  PathSegment first = seg, second = seg;
  if (seg.kind == PathSegment::Kind::Line) {
    Complex m = seg.point(Real("0.5"));
    first = PathSegment::line(seg.a, m);
    second = PathSegment::line(m, seg.b);
  } else {
    Real tm = (seg.theta0 + seg.theta1) * Real("0.5");
    first = PathSegment::arc(seg.center, seg.radius, seg.theta0, tm);
    second = PathSegment::arc(seg.center, seg.radius, tm, seg.theta1);
  }
  return integrate_segment(f, first, ctx, sing_start, false, depth - 1) +
         integrate_segment(f, second, ctx, false, sing_end, depth - 1);
}

Complex integrate_segment(const ComplexFun& f, const PathSegment& seg, const PrecisionContext& ctx,
                          bool sing_start, bool sing_end, int depth) {
  return integrate_piece(f, seg, ctx, sing_start, sing_end, depth);
}

}  // namespace

Complex contour_integrate(const ComplexFun& f, const Path& path, const PrecisionContext& ctx,
                          EndpointSingularity sing) {
  ScopedPrecision sp(ctx.decimal_digits);
  Complex total(0L);
  const size_t nseg = path.segments.size();
  for (size_t k = 0; k < nseg; ++k) {
    bool s0 = (k == 0) && (sing == EndpointSingularity::InvSqrtStart || sing == EndpointSingularity::InvSqrtBoth);
    bool s1 = (k == nseg - 1) &&
              (sing == EndpointSingularity::InvSqrtEnd || sing == EndpointSingularity::InvSqrtBoth);
    total += integrate_segment(f, path.segments[k], ctx, s0, s1, 24);
  }
  return total;
}

Real real_integrate(const std::function<Real(const Real&)>& f, const Real& x0, const Real& x1,
                    const PrecisionContext& ctx, EndpointSingularity sing) {
  ComplexFun cf = [&](const Complex& z) { return Complex(f(z.re), Real(0L)); };
  Complex v = contour_integrate(cf, Path::line(Complex(x0, Real(0L)), Complex(x1, Real(0L))), ctx, sing);
  return v.re;
}

}  // namespace scurve
