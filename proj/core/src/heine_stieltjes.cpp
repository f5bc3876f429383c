#include "scurve/heine_stieltjes.hpp"

#include "scurve/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace scurve {

PolynomialC HSConfig::a_poly() const {
  PolynomialC a = PolynomialC::constant(Complex(1L));
  for (const Complex& pt : points) a = a * PolynomialC({-pt, Complex(1L)});
  return a;
}

Complex HSConfig::alpha() const {
  int p = static_cast<int>(points.size()) - 1;
  if (b.degree() < p) return Complex(0L);
  return b[p];
}

PolynomialC HSConfig::unit_residue_b(const std::vector<Complex>& points) {
  PolynomialC sum;
  for (size_t k = 0; k < points.size(); ++k) {
    PolynomialC prod = PolynomialC::constant(Complex(1L));
    for (size_t j = 0; j < points.size(); ++j)
      if (j != k) prod = prod * PolynomialC({-points[j], Complex(1L)});
    sum = sum + prod;
  }
  return sum;  // equals A'
}

long van_vleck_count(int n, int p) {
  if (n < 1 || p < 1) throw std::invalid_argument("van_vleck_count: n, p >= 1");
  // C(n+p-1, n) = C(n+p-1, p-1)
  long r = 1;
  for (int i = 1; i <= p - 1; ++i) r = r * (n + i) / i;
  return r;
}

namespace {

// One Newton run on the zero vector; returns true on convergence.
bool newton_on_zeros(std::vector<Complex>& x, const PolynomialC& a, const PolynomialC& b,
                     const PrecisionContext& ctx) {
  const int n = static_cast<int>(x.size());
  PolynomialC da = a.derivative(), db = b.derivative();
  Real tol = pow10(-(ctx.decimal_digits - 8));
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<Complex> f(static_cast<size_t>(n), Complex(0L));
    Real fn(0L);
    CMatrix jac(n, n);
    for (int k = 0; k < n; ++k) {
      auto uk = static_cast<size_t>(k);
      Complex av = a.eval(x[uk]);
      if (abs(av) < pow10(-(2 * ctx.decimal_digits))) return false;  // collided with a marked point
      Complex bv = b.eval(x[uk]);
      Complex ba = bv / av;
      Complex s(0L), s2(0L);
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        Complex d = x[uk] - x[static_cast<size_t>(j)];
        if (abs(d) < pow10(-(2 * ctx.decimal_digits))) return false;  // coalesced zeros
        Complex inv = Complex(1L) / d;
        s += inv;
        Complex inv2 = inv * inv;
        s2 += inv2;
        jac(k, j) = Real(2L) * inv2;
      }
      f[uk] = Real(2L) * s + ba;
      fn = max(fn, abs(f[uk]));
      // d/dx_k of B/A = (B' A - B A')/A^2.
      Complex dba = (db.eval(x[uk]) * av - bv * da.eval(x[uk])) / (av * av);
      jac(k, k) = Real(-2L) * s2 + dba;
    }
    if (fn <= tol) return true;
    std::vector<Complex> rhs(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) rhs[static_cast<size_t>(k)] = -f[static_cast<size_t>(k)];
    std::vector<Complex> dx;
    try {
      dx = lu_solve(jac, rhs);
    } catch (const std::runtime_error&) {
      return false;
    }
    // Step limiting keeps zeros from jumping across marked points early on.
    Real cap("0.5");
    Real biggest(0L);
    for (const auto& d : dx) biggest = max(biggest, abs(d));
    Real scale_step = biggest > cap ? cap / biggest : Real(1L);
    for (int k = 0; k < n; ++k) x[static_cast<size_t>(k)] += scale_step * dx[static_cast<size_t>(k)];
  }
  return false;
}

// Occupancy pattern enumeration: all ways to put n zeros into p intervals.
void enumerate_patterns(int n, int p, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (p == 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = 0; k <= n; ++k) {
    cur.push_back(k);
    enumerate_patterns(n - k, p - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<HSResult> heine_stieltjes_solve(const HSConfig& cfg, const PrecisionContext& ctx,
                                            const std::vector<std::vector<Complex>>& seeds,
                                            HSSolveLog* log) {
  if (cfg.n < 1 || cfg.points.size() < 2) throw std::invalid_argument("heine_stieltjes_solve: need n>=1, p>=1");
  ScopedPrecision sp(ctx.decimal_digits);
  const int p = static_cast<int>(cfg.points.size()) - 1;
  PolynomialC a = cfg.a_poly();
  PolynomialC da = a.derivative();

  // Stieltjes regime: all points real with strictly positive residues of B/A.
  std::vector<Complex> pts = cfg.points;
  bool stieltjes = true;
  for (const Complex& q : pts)
    if (!(abs(q.im) < pow10(-30))) stieltjes = false;
  if (stieltjes) {
    std::sort(pts.begin(), pts.end(), [](const Complex& u, const Complex& v) { return u.re < v.re; });
    for (const Complex& q : pts) {
      Complex rho = cfg.b.eval(q) / da.eval(q);
      if (!(rho.re > Real(0L)) || !(abs(rho.im) < pow10(-30))) stieltjes = false;
    }
  }

  std::vector<std::vector<Complex>> start = seeds;
  std::vector<std::vector<int>> patterns;
  if (start.empty() && stieltjes) {
    std::vector<int> cur;
    enumerate_patterns(cfg.n, p, cur, patterns);
    for (const auto& pat : patterns) {
      std::vector<Complex> x;
      for (int i = 0; i < p; ++i) {
        const Real& lo = pts[static_cast<size_t>(i)].re;
        const Real& hi = pts[static_cast<size_t>(i) + 1].re;
        int m = pat[static_cast<size_t>(i)];
        for (int j = 0; j < m; ++j) {
          // Chebyshev points of the occupied interval.
          Real th = pi() * Real(2L * j + 1) / Real(2L * m);
          Real mid = (lo + hi) * Real("0.5"), half = (hi - lo) * Real("0.5");
          x.push_back(Complex(mid - half * cos(th), Real(0L)));
        }
      }
      start.push_back(std::move(x));
    }
  }
  if (start.empty()) throw std::invalid_argument("heine_stieltjes_solve: seeds required outside the Stieltjes regime");

  Complex lambda = Complex(static_cast<long>(cfg.n)) *
                   (Complex(static_cast<long>(cfg.n)) + cfg.alpha() - Complex(1L));
  std::vector<HSResult> results;
  Real dedup_tol = pow10(-(ctx.decimal_digits / 2));
  for (auto& x : start) {
    if (log) ++log->seeds_tried;
    if (static_cast<int>(x.size()) != cfg.n) throw std::invalid_argument("seed size != n");
    if (!newton_on_zeros(x, a, cfg.b, ctx)) {
      if (log) {
        ++log->dropped;
        log->notes.push_back("seed dropped: no convergence");
      }
      continue;
    }
    HSResult r;
    r.zeros = x;
    r.q = PolynomialC::from_roots(x);
    // V from the exact polynomial division (A Q'' + B Q')/(lambda Q).
    PolynomialC num = a * r.q.derivative().derivative() + cfg.b * r.q.derivative();
    // Monic long division by Q.
    std::vector<Complex> rem(num.coeffs());
    std::vector<Complex> quot(static_cast<size_t>(std::max(num.degree() - cfg.n + 1, 1)), Complex(0L));
    for (int d = num.degree(); d >= cfg.n; --d) {
      Complex c = rem[static_cast<size_t>(d)];
      quot[static_cast<size_t>(d - cfg.n)] = c;
      for (int j = 0; j <= cfg.n; ++j) rem[static_cast<size_t>(d - cfg.n + j)] -= c * r.q[j];
    }
    PolynomialC vq(std::move(quot));
    r.v = Complex(Real(1L), Real(0L)) / lambda * vq;
    Real remmax(0L);
    for (const auto& c : rem) remmax = max(remmax, abs(c));
    r.residual = remmax / max(Real(1L), num.max_coeff_abs());

    if (stieltjes) {
      r.occupancy.assign(static_cast<size_t>(p), 0);
      for (const auto& z : x)
        for (int i = 0; i < p; ++i)
          if (z.re > pts[static_cast<size_t>(i)].re && z.re < pts[static_cast<size_t>(i) + 1].re)
            ++r.occupancy[static_cast<size_t>(i)];
    }

    bool dup = false;
    for (const auto& prev : results) {
      Real d(0L);
      for (int j = 0; j <= cfg.n; ++j) d = max(d, abs(prev.q[j] - r.q[j]));
      if (d < dedup_tol) { dup = true; break; }
    }
    if (!dup) results.push_back(std::move(r));
  }
  return results;
}

}  // namespace scurve
