#include "scurve/roots.hpp"

#include <cstdint>
#include <stdexcept>

namespace scurve {

namespace {

// splitmix64, used only for reproducible initial placement.
std::uint64_t next_u64(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform01(std::uint64_t& s) {
  return static_cast<double>(next_u64(s) >> 11) * (1.0 / 9007199254740992.0);
}

}  // namespace

std::vector<Complex> poly_roots(const PolynomialC& p, const PrecisionContext& ctx) {
  if (p.is_zero()) throw std::runtime_error("zero polynomial");
  if (p.degree() == 0) return {};

  ScopedPrecision sp(ctx.decimal_digits);

  // Deflate exact zero roots.
  std::vector<Complex> roots;
  size_t shift = 0;
  const auto& pc = p.coeffs();
  while (shift < pc.size() - 1 && pc[shift].is_zero()) ++shift;
  for (size_t k = 0; k < shift; ++k) roots.push_back(Complex(0L));
  std::vector<Complex> work(pc.begin() + static_cast<long>(shift), pc.end());
  PolynomialC q = PolynomialC(std::move(work)).monic();
  const int n = q.degree();
  if (n == 0) return roots;

  // Initial placement: annulus around |a0|^(1/n) with seeded jitter.
  Real r0 = abs(q[0]);
  if (r0.is_zero()) r0 = Real(1L);
  Real rad = exp(log(r0) / Real(static_cast<long>(n)));
  rad = max(min(rad, Real(8L)), Real(0.125));
  std::uint64_t state = ctx.seed * 0x9e3779b97f4a7c15ULL + 0x1234567887654321ULL;
  double theta0 = uniform01(state);
  std::vector<Complex> z(static_cast<size_t>(n));
  Real two_pi = Real(2L) * pi();
  for (int i = 0; i < n; ++i) {
    double frac_angle = theta0 + (i + 0.26) / n + 0.00257 * i;
    frac_angle -= static_cast<long>(frac_angle);
    Real r = rad * Real(0.7 + 0.6 * ((i * 7) % 11) / 11.0);
    z[static_cast<size_t>(i)] = polar(r, two_pi * Real(frac_angle));
  }

  const Real tol = ctx.root_tolerance();
  const Real coeff_scale = p.max_coeff_abs();
  const Real q_scale = q.max_coeff_abs();
  const Real lock_tol = Real("0.1") * tol;
  Real step_floor = pow10(-(ctx.decimal_digits + 5));
  std::vector<bool> locked(static_cast<size_t>(n), false);

  const int max_iters = 120 + 6 * ctx.decimal_digits;
  for (int iter = 0; iter < max_iters; ++iter) {
    bool all_locked = true;
    for (int i = 0; i < n; ++i) {
      auto ui = static_cast<size_t>(i);
      if (locked[ui]) continue;
      Complex pv, dv;
      q.eval2(z[ui], pv, dv);

      if (abs(pv) <= lock_tol * q_scale * pow(max(Real(1L), abs(z[ui])), n)) {
        locked[ui] = true;
        continue;
      }
      all_locked = false;

      Complex newton = dv.is_zero() ? Complex(Real("1e-3"), Real("1e-3")) : pv / dv;
      Complex repulse(0L);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        Complex d = z[ui] - z[static_cast<size_t>(j)];
        if (d.is_zero()) d = Complex(step_floor, step_floor);
        repulse += Complex(1L) / d;
      }
      Complex denom = Complex(1L) - newton * repulse;
      Complex delta = (abs(denom) < Real("1e-30")) ? newton : newton / denom;
      z[ui] -= delta;
      if (abs(delta) <= step_floor * max(Real(1L), abs(z[ui]))) locked[ui] = true;
    }
    if (all_locked) break;
  }

  // Final residual certification against the original polynomial.
  for (int i = 0; i < n; ++i) {
    auto ui = static_cast<size_t>(i);
    Real scale = coeff_scale * pow(max(Real(1L), abs(z[ui])), p.degree());
    if (!(abs(p.eval(z[ui])) <= tol * scale))
      throw std::runtime_error("poly_roots: residual above tolerance at root " + z[ui].str(20));
    roots.push_back(z[ui]);
  }
  return roots;
}

}  // namespace scurve
