#include "scurve/measures.hpp"

#include "scurve/quadrature.hpp"
#include "scurve/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace scurve {

Real DiscreteMeasure::mass() const {
  Real m(0L);
  for (const Real& w : weights) m += w;
  return m;
}

Real DensityArc::arclength() const {
  Real len(0L);
  for (size_t k = 1; k < points.size(); ++k) len += abs(points[k] - points[k - 1]);
  return len + head_start_len + head_end_len;
}

Real DensityArc::mass(const PrecisionContext* ctx) const {
  if (rho_exact && ctx) {
    // Adaptive quadrature on the exact density along the polyline, one
    // interval chain; endpoint blowups are integrable.
    ScopedPrecision sp(ctx->decimal_digits);
    Real m(0L);
    Complex lo_end = points.front(), hi_end = points.back();
    Complex u0 = points[1] - points[0];
    u0 = u0 / abs(u0);
    Complex u1 = points[points.size() - 1] - points[points.size() - 2];
    u1 = u1 / abs(u1);
    Complex start = lo_end - u0 * head_start_len;
    Complex finish = hi_end + u1 * head_end_len;
    // Integrate per straight piece (true ends included).
    std::vector<Complex> chain;
    chain.push_back(start);
    for (const auto& p : points) chain.push_back(p);
    chain.push_back(finish);
    for (size_t k = 1; k < chain.size(); ++k) {
      Complex d = chain[k] - chain[k - 1];
      Real len = abs(d);
      if (len.is_zero()) continue;
      Complex a = chain[k - 1];
      bool sing_lo = (k == 1) && !head_start_len.is_zero();
      bool sing_hi = (k + 1 == chain.size()) && !head_end_len.is_zero();
      auto guard = [](Real v) { return v.is_finite() ? v : Real(0L); };
      auto integrand = [&](const Real& t) {
        return Complex(guard(rho_exact(a + d * t)) * len, Real(0L));
      };
      if (sing_lo || sing_hi) {
        auto sub = [&](const Real& s) {
          Real t = sing_lo ? s * s : Real(1L) - s * s;
          return Complex(guard(rho_exact(a + d * t)) * len * Real(2L) * s, Real(0L));
        };
        m += tanhsinh_01(sub, *ctx).re;
      } else {
        m += tanhsinh_01(integrand, *ctx).re;
      }
    }
    return m;
  }
  // Trapezoid is exact for the piecewise-linear density.
  Real m(0L);
  for (size_t k = 1; k < points.size(); ++k)
    m += abs(points[k] - points[k - 1]) * (density[k] + density[k - 1]) * Real("0.5");
  // Head terms: int_0^eps c/sqrt(s) ds = 2 c sqrt(eps).
  if (!head_start.is_zero()) m += Real(2L) * head_start * sqrt(head_start_len);
  if (!head_end.is_zero()) m += Real(2L) * head_end * sqrt(head_end_len);
  return m;
}

Real DensityMeasure::mass(const PrecisionContext* ctx) const {
  Real m(0L);
  for (const auto& a : arcs) m += a.mass(ctx);
  return m;
}

DensityMeasure DensityMeasure::sampled_only() const {
  DensityMeasure out = *this;
  for (auto& a : out.arcs) a.rho_exact = nullptr;
  return out;
}

Real MeasureRef::mass() const { return discrete ? discrete->mass() : density->mass(); }

DiscreteMeasure zero_counting(const std::vector<Complex>& zeros) {
  if (zeros.empty()) throw std::runtime_error("no zeros");
  DiscreteMeasure m;
  Real w = Real(1L) / Real(static_cast<long>(zeros.size()));
  for (const auto& z : zeros) {
    m.atoms.push_back(z);
    m.weights.push_back(w);
  }
  return m;
}

DiscreteMeasure zero_counting(const PolynomialC& p, const PrecisionContext& ctx) {
  if (p.is_zero() || p.degree() == 0) throw std::runtime_error("no zeros");
  std::vector<Complex> roots = poly_roots(p, ctx);
  // Merge root clusters so a multiple zero shows up as one atom; an m-fold
  // zero is resolved by the root finder only to the m-th root of the
  // residual tolerance.
  Real tol = Real(100L) * pow10(-(ctx.root_tol_digits / 3));
  DiscreteMeasure m;
  std::vector<bool> used(roots.size(), false);
  Real w = Real(1L) / Real(static_cast<long>(roots.size()));
  for (size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    Complex center = roots[i];
    Real weight = w;
    int count = 1;
    for (size_t j = i + 1; j < roots.size(); ++j) {
      if (used[j]) continue;
      if (abs(roots[j] - center) < tol * max(Real(1L), abs(center))) {
        used[j] = true;
        center = (center * Real(static_cast<long>(count)) + roots[j]) / Real(static_cast<long>(count + 1));
        weight += w;
        ++count;
      }
    }
    m.atoms.push_back(center);
    m.weights.push_back(weight);
  }
  return m;
}

namespace {

// The leading samples of a blow-up edge are absorbed into the head term:
// the linear interpolant is hopeless on the steep part, c/sqrt(s) is exact
// to first order.
constexpr int kHeadSamples = 6;

DensityArc finish_arc(DensityArc arc, const Complex& true_start, const Complex& true_end,
                      bool blowup_start, bool blowup_end) {
  if (blowup_start && arc.points.size() > 2 * kHeadSamples + 4) {
    arc.points.erase(arc.points.begin(), arc.points.begin() + kHeadSamples);
    arc.density.erase(arc.density.begin(), arc.density.begin() + kHeadSamples);
    Real eps = abs(arc.points.front() - true_start);
    arc.head_start_len = eps;
    arc.head_start = arc.density.front() * sqrt(eps);
  }
  if (blowup_end && arc.points.size() > kHeadSamples + 4) {
    arc.points.erase(arc.points.end() - kHeadSamples, arc.points.end());
    arc.density.erase(arc.density.end() - kHeadSamples, arc.density.end());
    Real eps = abs(true_end - arc.points.back());
    arc.head_end_len = eps;
    arc.head_end = arc.density.back() * sqrt(eps);
  }
  return arc;
}

}  // namespace

DensityArc sample_density_arc(const std::function<Complex(const Real&)>& point,
                              const std::function<Real(const Complex&)>& rho, int samples,
                              bool blowup_start, bool blowup_end) {
  DensityArc arc;
  arc.rho_exact = rho;
  Real half_pi = pi() * Real("0.5");
  // t = sin^2(pi u / 2) clusters the parameter near both endpoints.
  Real inset = Real(1L) / Real(static_cast<long>(8 * samples));
  for (int j = 0; j <= samples; ++j) {
    Real u = inset + (Real(1L) - Real(2L) * inset) * Real(j) / Real(samples);
    Real snu = sin(half_pi * u);
    Real t = snu * snu;
    Complex z = point(t);
    arc.points.push_back(z);
    arc.density.push_back(rho(z));
  }
  return finish_arc(std::move(arc), point(Real(0L)), point(Real(1L)), blowup_start, blowup_end);
}

DensityArc arc_from_polyline(const std::vector<Complex>& pts,
                             const std::function<Real(const Complex&)>& rho, int samples,
                             bool blowup_start, bool blowup_end) {
  if (pts.size() < 2) throw std::invalid_argument("arc_from_polyline: need 2 points");
  // Arclength table.
  std::vector<Real> s(pts.size(), Real(0L));
  for (size_t k = 1; k < pts.size(); ++k) s[k] = s[k - 1] + abs(pts[k] - pts[k - 1]);
  Real total = s.back();
  auto at = [&](const Real& target) {
    size_t lo = 0, hi = pts.size() - 1;
    while (hi - lo > 1) {
      size_t mid = (lo + hi) / 2;
      if (s[mid] <= target)
        lo = mid;
      else
        hi = mid;
    }
    Real seg = s[hi] - s[lo];
    if (seg.is_zero()) return pts[lo];
    Real t = (target - s[lo]) / seg;
    return pts[lo] + t * (pts[hi] - pts[lo]);
  };
  auto point = [&](const Real& t) { return at(t * total); };
  return sample_density_arc(point, rho, samples, blowup_start, blowup_end);
}

}  // namespace scurve
