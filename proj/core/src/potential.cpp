#include "scurve/potential.hpp"

#include "scurve/quadrature.hpp"

#include <algorithm>
#include <stdexcept>

namespace scurve {

namespace {

// Gauss-Legendre 4 on [0,1]; nodes in closed form, cached per precision.
struct GL4 {
  Real x[4], w[4];
};

const GL4& gl4() {
  thread_local GL4 g;
  thread_local mpfr_prec_t prec = 0;
  if (prec != detail::working_prec()) {
    prec = detail::working_prec();
    Real r30 = sqrt(Real(30L));
    Real a = sqrt((Real(15L) - Real(2L) * r30) / Real(35L));  // inner pair
    Real b = sqrt((Real(15L) + Real(2L) * r30) / Real(35L));  // outer pair
    Real wa = (Real(18L) + r30) / Real(36L);
    Real wb = (Real(18L) - r30) / Real(36L);
    Real half("0.5");
    g.x[0] = (Real(1L) - b) * half; g.w[0] = wb * half;
    g.x[1] = (Real(1L) - a) * half; g.w[1] = wa * half;
    g.x[2] = (Real(1L) + a) * half; g.w[2] = wa * half;
    g.x[3] = (Real(1L) + b) * half; g.w[3] = wb * half;
  }
  return g;
}

// Arclength-parametrized chain over the arc polyline, true endpoints
// (beyond the heads) included.
struct Chain {
  std::vector<Complex> v;
  std::vector<Real> cum;  // cumulative arclength at each vertex
  Real len{0L};

  Complex at(const Real& s) const {
    size_t lo = 0, hi = v.size() - 1;
    while (hi - lo > 1) {
      size_t mid = (lo + hi) / 2;
      if (cum[mid] <= s)
        lo = mid;
      else
        hi = mid;
    }
    Real seg = cum[hi] - cum[lo];
    if (seg.is_zero()) return v[lo];
    return v[lo] + ((s - cum[lo]) / seg) * (v[hi] - v[lo]);
  }

  // Distance from z to the chain and the arclength of the nearest point.
  void nearest(const Complex& z, Real& dist, Real& s_at) const {
    dist = abs(z - v[0]);
    s_at = Real(0L);
    for (size_t k = 1; k < v.size(); ++k) {
      Complex d = v[k] - v[k - 1];
      Real h = cum[k] - cum[k - 1];
      if (h.is_zero()) continue;
      Complex u = d / h;
      Complex w = z - v[k - 1];
      Real t = w.re * u.re + w.im * u.im;
      t = max(Real(0L), min(t, h));
      Real dd = abs(z - (v[k - 1] + u * t));
      if (dd < dist) {
        dist = dd;
        s_at = cum[k - 1] + t;
      }
    }
  }
};

Chain make_chain(const DensityArc& arc) {
  Chain c;
  Complex u0 = arc.points[1] - arc.points[0];
  u0 = u0 / abs(u0);
  size_t n = arc.points.size();
  Complex u1 = arc.points[n - 1] - arc.points[n - 2];
  u1 = u1 / abs(u1);
  if (!arc.head_start_len.is_zero()) c.v.push_back(arc.points.front() - u0 * arc.head_start_len);
  for (const auto& p : arc.points) c.v.push_back(p);
  if (!arc.head_end_len.is_zero()) c.v.push_back(arc.points.back() + u1 * arc.head_end_len);
  c.cum.assign(c.v.size(), Real(0L));
  for (size_t k = 1; k < c.v.size(); ++k) c.cum[k] = c.cum[k - 1] + abs(c.v[k] - c.v[k - 1]);
  c.len = c.cum.back();
  return c;
}

Real local_spacing(const DensityArc& arc) {
  Real total(0L);
  for (size_t k = 1; k < arc.points.size(); ++k) total += abs(arc.points[k] - arc.points[k - 1]);
  return total / Real(static_cast<long>(arc.points.size()));
}

// Integral of rho(x) K(x) ds over an arc carrying the exact density; splits
// at the nearest point to `z_near` so the kernel weakness sits at interval
// ends, where tanh-sinh absorbs it.
template <typename Kernel>
Complex exact_arc_integral(const DensityArc& arc, Kernel&& kernel, const Complex* z_near,
                           const PrecisionContext& ctx) {
  Chain c = make_chain(arc);
  auto integrand_at = [&](const Real& s) {
    Complex x = c.at(s);
    Complex v = Complex(arc.rho_exact(x), Real(0L)) * kernel(x);
    // Edge densities are integrable but blow up; nodes that round onto the
    // endpoint itself carry negligible weight and are dropped.
    if (!v.re.is_finite() || !v.im.is_finite()) return Complex(0L);
    return v;
  };
  std::vector<Real> cuts{Real(0L), c.len};
  if (z_near) {
    Real dist, s_at;
    c.nearest(*z_near, dist, s_at);
    if (dist < c.len * Real("0.25") && s_at > Real(0L) && s_at < c.len) cuts.insert(cuts.begin() + 1, s_at);
  }
  Complex total(0L);
  for (size_t k = 1; k < cuts.size(); ++k) {
    Real s0 = cuts[k - 1], s1 = cuts[k];
    if (!(s1 > s0)) continue;
    auto u = [&](const Real& t) { return integrand_at(s0 + (s1 - s0) * t) * (s1 - s0); };
    total += tanhsinh_01(u, ctx);
  }
  return total;
}

// Collects the straight pieces of one arc with linear densities (the
// fallback when no exact density is attached).
struct ArcPieces {
  std::vector<Complex> p;
  std::vector<Complex> u;
  std::vector<Real> h;
  std::vector<Real> rho0, rho1;
  struct Head {
    Complex endpoint, dir;
    Real coeff, len;
  };
  std::vector<Head> heads;
};

ArcPieces pieces_of(const DensityArc& arc) {
  ArcPieces out;
  for (size_t k = 1; k < arc.points.size(); ++k) {
    Complex d = arc.points[k] - arc.points[k - 1];
    Real len = abs(d);
    if (len.is_zero()) continue;
    out.p.push_back(arc.points[k - 1]);
    out.u.push_back(d / len);
    out.h.push_back(len);
    out.rho0.push_back(arc.density[k - 1]);
    out.rho1.push_back(arc.density[k]);
  }
  if (!arc.head_start.is_zero() && !out.p.empty()) {
    ArcPieces::Head hd;
    hd.dir = out.u.front();
    hd.endpoint = out.p.front() - hd.dir * arc.head_start_len;
    hd.coeff = arc.head_start;
    hd.len = arc.head_start_len;
    out.heads.push_back(hd);
  }
  if (!arc.head_end.is_zero() && !out.p.empty()) {
    ArcPieces::Head hd;
    size_t last = out.p.size() - 1;
    hd.dir = -out.u[last];
    hd.endpoint = out.p[last] + out.u[last] * out.h[last] + out.u[last] * arc.head_end_len;
    hd.coeff = arc.head_end;
    hd.len = arc.head_end_len;
    out.heads.push_back(hd);
  }
  return out;
}

Real dist_to_segment(const Complex& z, const Complex& p, const Complex& u, const Real& h) {
  Complex d = z - p;
  Real t = d.re * u.re + d.im * u.im;
  t = max(Real(0L), min(t, h));
  return abs(z - (p + u * t));
}

// Sampled-density route: Gauss per piece, split rule for near pieces when
// the kernel is weakly singular (allow_near).
template <typename Kernel>
Complex sampled_arc_integral(const DensityArc& arc, Kernel&& kernel, const Complex* z_near,
                             bool allow_near, const PrecisionContext& ctx) {
  ArcPieces pc = pieces_of(arc);
  const GL4& g = gl4();
  Complex total(0L);
  for (size_t k = 0; k < pc.p.size(); ++k) {
    bool near = false;
    if (z_near) {
      Real dist = dist_to_segment(*z_near, pc.p[k], pc.u[k], pc.h[k]);
      near = dist < Real(3L) * pc.h[k];
      if (near && !allow_near) throw std::runtime_error("evaluation too close to support");
    }
    if (!near) {
      for (int q = 0; q < 4; ++q) {
        Real s = g.x[q] * pc.h[k];
        Real rho = pc.rho0[k] + (pc.rho1[k] - pc.rho0[k]) * g.x[q];
        total += (g.w[q] * pc.h[k] * rho) * kernel(pc.p[k] + pc.u[k] * s);
      }
      continue;
    }
    Complex d = *z_near - pc.p[k];
    Real foot = d.re * pc.u[k].re + d.im * pc.u[k].im;
    foot = max(Real(0L), min(foot, pc.h[k]));
    const Real h = pc.h[k];
    for (int side = 0; side < 2; ++side) {
      Real s0 = side == 0 ? Real(0L) : foot;
      Real s1 = side == 0 ? foot : h;
      if (!(s1 > s0)) continue;
      auto u = [&](const Real& t) {
        Real s = s0 + (s1 - s0) * t;
        Real rho = pc.rho0[k] + (pc.rho1[k] - pc.rho0[k]) * (s / h);
        return Complex(rho, Real(0L)) * kernel(pc.p[k] + pc.u[k] * s) * (s1 - s0);
      };
      total += tanhsinh_01(u, ctx);
    }
  }
  for (const auto& hd : pc.heads) {
    Complex xm = hd.endpoint + hd.dir * (hd.len / Real(3L));
    total += (Real(2L) * hd.coeff * sqrt(hd.len)) * kernel(xm);
  }
  return total;
}

template <typename Kernel>
Complex arc_integral(const DensityArc& arc, Kernel&& kernel, const Complex* z_near, bool allow_near,
                     const PrecisionContext& ctx) {
  if (arc.rho_exact) {
    if (z_near && !allow_near) {
      Chain c = make_chain(arc);
      Real dist, s_at;
      c.nearest(*z_near, dist, s_at);
      if (dist < local_spacing(arc)) throw std::runtime_error("evaluation too close to support");
    }
    return exact_arc_integral(arc, kernel, z_near, ctx);
  }
  return sampled_arc_integral(arc, kernel, z_near, allow_near, ctx);
}

// Measure-quadrature context: residual targets sit far above the working
// quadrature tolerance, so cap the effort.
PrecisionContext measure_ctx(const PrecisionContext& ctx) {
  PrecisionContext c = ctx;
  c.quad_tol_digits = std::min(c.quad_tol_digits, 14);
  return c;
}

}  // namespace

Complex cauchy_transform(const DiscreteMeasure& m, const Complex& z) {
  Complex sum(0L);
  for (size_t i = 0; i < m.atoms.size(); ++i) {
    Complex d = m.atoms[i] - z;
    if (abs(d).is_zero()) throw std::runtime_error("evaluation too close to support");
    sum += Complex(m.weights[i], Real(0L)) / d;
  }
  return sum;
}

Complex cauchy_transform(const DensityMeasure& m, const Complex& z, const PrecisionContext& ctx) {
  ScopedPrecision sp(ctx.decimal_digits);
  PrecisionContext mc = measure_ctx(ctx);
  Complex sum(0L);
  for (const auto& arc : m.arcs)
    sum += arc_integral(arc, [&](const Complex& x) { return Complex(1L) / (x - z); }, &z, false, mc);
  return sum;
}

Real log_potential(const DiscreteMeasure& m, const Complex& z) {
  Real sum(0L);
  for (size_t i = 0; i < m.atoms.size(); ++i) {
    Real d = abs(m.atoms[i] - z);
    if (d.is_zero()) throw std::runtime_error("evaluation too close to support");
    sum -= m.weights[i] * log(d);
  }
  return sum;
}

Real log_potential(const DensityMeasure& m, const Complex& z, const PrecisionContext& ctx) {
  ScopedPrecision sp(ctx.decimal_digits);
  PrecisionContext mc = measure_ctx(ctx);
  Real sum(0L);
  for (const auto& arc : m.arcs)
    sum += arc_integral(arc, [&](const Complex& x) { return Complex(-log(abs(x - z)), Real(0L)); },
                        &z, true, mc)
               .re;
  return sum;
}

Real energy(const DiscreteMeasure& m) {
  Real sum(0L);
  for (size_t i = 0; i < m.atoms.size(); ++i)
    for (size_t j = 0; j < m.atoms.size(); ++j) {
      if (i == j) continue;
      Real d = abs(m.atoms[i] - m.atoms[j]);
      if (d.is_zero()) throw std::runtime_error("coincident atoms have infinite energy");
      sum -= m.weights[i] * m.weights[j] * log(d);
    }
  return sum;
}

namespace {

// int u(x) d mu(x) over a density measure via the arc integrators.
Real outer_integral(const DensityMeasure& m, const std::function<Real(const Complex&)>& u_at,
                    const PrecisionContext& ctx) {
  Real sum(0L);
  for (const auto& arc : m.arcs)
    sum += arc_integral(arc, [&](const Complex& x) { return Complex(u_at(x), Real(0L)); }, nullptr,
                        true, ctx)
               .re;
  return sum;
}

}  // namespace

Real energy(const DensityMeasure& m, const PrecisionContext& ctx) {
  ScopedPrecision sp(ctx.decimal_digits);
  PrecisionContext mc = measure_ctx(ctx);
  mc.quad_tol_digits = std::min(mc.quad_tol_digits, 13);  // double integral
  return outer_integral(m, [&](const Complex& x) { return log_potential(m, x, mc); }, mc);
}

Real mutual_energy(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  Real sum(0L);
  for (size_t i = 0; i < a.atoms.size(); ++i)
    for (size_t j = 0; j < b.atoms.size(); ++j) {
      Real d = abs(a.atoms[i] - b.atoms[j]);
      if (d.is_zero()) throw std::runtime_error("overlapping atoms in mutual energy");
      sum -= a.weights[i] * b.weights[j] * log(d);
    }
  return sum;
}

Real mutual_energy(const DensityMeasure& a, const DensityMeasure& b, const PrecisionContext& ctx) {
  ScopedPrecision sp(ctx.decimal_digits);
  PrecisionContext mc = measure_ctx(ctx);
  mc.quad_tol_digits = std::min(mc.quad_tol_digits, 13);
  return outer_integral(a, [&](const Complex& x) { return log_potential(b, x, mc); }, mc);
}

Real mutual_energy(const DiscreteMeasure& a, const DensityMeasure& b, const PrecisionContext& ctx) {
  ScopedPrecision sp(ctx.decimal_digits);
  Real sum(0L);
  for (size_t i = 0; i < a.atoms.size(); ++i)
    sum += a.weights[i] * log_potential(b, a.atoms[i], ctx);
  return sum;
}

Real field_integral(const MeasureRef& m, const ExternalField& phi, const PrecisionContext& ctx) {
  ScopedPrecision sp(ctx.decimal_digits);
  if (m.discrete) {
    Real sum(0L);
    for (size_t i = 0; i < m.discrete->atoms.size(); ++i)
      sum += m.discrete->weights[i] * phi.eval(m.discrete->atoms[i]);
    return sum;
  }
  return outer_integral(*m.density, [&](const Complex& x) { return phi.eval(x); }, measure_ctx(ctx));
}

Real weighted_energy(const DiscreteMeasure& m, const ExternalField& phi) {
  PrecisionContext ctx(std::max(30, static_cast<int>(detail::working_prec() / 3.4)));
  return energy(m) + Real(2L) * field_integral(MeasureRef(m), phi, ctx);
}

Real weighted_energy(const DensityMeasure& m, const ExternalField& phi, const PrecisionContext& ctx) {
  return energy(m, ctx) + Real(2L) * field_integral(MeasureRef(m), phi, ctx);
}

Real vector_energy(const VectorMeasure& vm, const PrecisionContext& ctx) {
  ScopedPrecision sp(ctx.decimal_digits);
  const size_t p = vm.components.size();
  if (vm.interaction.size() != p) throw std::invalid_argument("vector_energy: T shape");
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < p; ++j)
      if (!(vm.interaction[i][j] == vm.interaction[j][i]))
        throw std::invalid_argument("vector_energy: T must be symmetric");

  auto pair_energy = [&](const MeasureRef& a, const MeasureRef& b, bool same) {
    if (same) return a.discrete ? energy(*a.discrete) : energy(*a.density, ctx);
    if (a.discrete && b.discrete) return mutual_energy(*a.discrete, *b.discrete);
    if (a.discrete && b.density) return mutual_energy(*a.discrete, *b.density, ctx);
    if (a.density && b.discrete) return mutual_energy(*b.discrete, *a.density, ctx);
    return mutual_energy(*a.density, *b.density, ctx);
  };

  Real total(0L);
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < p; ++j)
      total += vm.interaction[i][j] * pair_energy(vm.components[i], vm.components[j], i == j);
  for (size_t i = 0; i < p; ++i)
    if (i < vm.fields.size() && vm.fields[i])
      total += Real(2L) * field_integral(vm.components[i], *vm.fields[i], ctx);
  return total;
}

std::vector<std::vector<Real>> interaction_all_ones(int p) {
  return std::vector<std::vector<Real>>(static_cast<size_t>(p),
                                        std::vector<Real>(static_cast<size_t>(p), Real(1L)));
}

std::vector<std::vector<Real>> interaction_angelesco() {
  auto t = interaction_all_ones(2);
  t[0][1] = t[1][0] = Real("0.5");
  return t;
}

std::vector<std::vector<Real>> interaction_nikishin() {
  auto t = interaction_all_ones(2);
  t[0][1] = t[1][0] = Real("-0.5");
  return t;
}

namespace {

Real potential_of(const MeasureRef& m, const Complex& z, const PrecisionContext& ctx) {
  return m.discrete ? log_potential(*m.discrete, z) : log_potential(*m.density, z, ctx);
}

void check_inside(const MeasureRef& m, const Real& bound) {
  auto fail = [] { throw std::runtime_error("support escapes the probe disk"); };
  if (m.discrete) {
    for (const auto& a : m.discrete->atoms)
      if (abs(a) > bound) fail();
  } else {
    for (const auto& arc : m.density->arcs)
      for (const auto& pt : arc.points)
        if (abs(pt) > bound) fail();
  }
}

}  // namespace

Real potential_distance(const MeasureRef& m1, const MeasureRef& m2, const Real& radius, int grid,
                        const PrecisionContext& ctx) {
  ScopedPrecision sp(ctx.decimal_digits);
  check_inside(m1, radius * Real("0.5"));
  check_inside(m2, radius * Real("0.5"));
  Real worst(0L);
  for (int j = 0; j < grid; ++j) {
    Real th = Real(2L) * pi() * Real(j) / Real(grid);
    Complex z = polar(radius, th);
    worst = max(worst, abs(potential_of(m1, z, ctx) - potential_of(m2, z, ctx)));
  }
  return worst + abs(m1.mass() - m2.mass());
}

namespace {

struct SupportSample {
  Complex point;
  Complex normal;
  Real spacing;
};

std::vector<SupportSample> interior_samples(const DensityMeasure& m, int per_arc, double trim) {
  std::vector<SupportSample> out;
  for (const auto& arc : m.arcs) {
    const auto& pts = arc.points;
    if (pts.size() < 3) continue;
    // Trim by arclength, not index: the samples cluster at the endpoints.
    std::vector<Real> cum(pts.size(), Real(0L));
    for (size_t k = 1; k < pts.size(); ++k) cum[k] = cum[k - 1] + abs(pts[k] - pts[k - 1]);
    Real lo_s = cum.back() * Real(trim);
    Real hi_s = cum.back() * Real(1.0 - trim);
    std::vector<size_t> eligible;
    for (size_t k = 1; k + 1 < pts.size(); ++k)
      if (cum[k] > lo_s && cum[k] < hi_s) eligible.push_back(k);
    if (eligible.empty()) continue;
    size_t step = std::max<size_t>(1, eligible.size() / static_cast<size_t>(per_arc));
    for (size_t e = 0; e < eligible.size(); e += step) {
      size_t k = eligible[e];
      SupportSample s;
      s.point = pts[k];
      Complex t = pts[k + 1] - pts[k - 1];
      Real tl = abs(t);
      if (tl.is_zero()) continue;
      t = t / tl;
      s.normal = Complex(-t.im, t.re);
      s.spacing = min(abs(pts[k + 1] - pts[k]), abs(pts[k] - pts[k - 1]));
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace

EquilibriumReport equilibrium_residual(const DensityMeasure& lambda, const ExternalField* phi,
                                       const Path* s_curve, const PrecisionContext& ctx) {
  ScopedPrecision sp(ctx.decimal_digits);
  auto samples = interior_samples(lambda, 24, 0.02);
  if (samples.empty()) throw std::runtime_error("equilibrium_residual: no interior samples");

  auto w_at = [&](const Complex& z) {
    Real v = log_potential(lambda, z, ctx);
    if (phi) v += phi->eval(z);
    return v;
  };

  EquilibriumReport rep;
  Real lo(0L), hi(0L), sum(0L);
  bool first = true;
  for (const auto& s : samples) {
    Real h = s.spacing * Real("0.001");
    // Two-sided Richardson extrapolation to the curve: U0 = 2 U(h/2) - U(h).
    Real up = Real(2L) * w_at(s.point + s.normal * (h * Real("0.5"))) - w_at(s.point + s.normal * h);
    Real dn = Real(2L) * w_at(s.point - s.normal * (h * Real("0.5"))) - w_at(s.point - s.normal * h);
    Real w = (up + dn) * Real("0.5");
    if (first) { lo = hi = w; first = false; }
    lo = min(lo, w);
    hi = max(hi, w);
    sum += w;
  }
  rep.support_variation = hi - lo;
  rep.omega = sum / Real(static_cast<long>(samples.size()));

  if (s_curve) {
    rep.offsupport_checked = true;
    Real slack(0L);
    bool got = false;
    const int probes = 160;
    for (const auto& seg : s_curve->segments) {
      for (int j = 1; j < probes; ++j) {
        Complex z = seg.point(Real(j) / Real(probes));
        Real dist(1000000L);
        for (const auto& arc : lambda.arcs)
          for (size_t k = 1; k < arc.points.size(); ++k) {
            Complex d = arc.points[k] - arc.points[k - 1];
            Real len = abs(d);
            if (len.is_zero()) continue;
            dist = min(dist, dist_to_segment(z, arc.points[k - 1], d / len, len));
          }
        Real local = seg.length() / Real(probes);
        if (dist < Real(4L) * local) continue;  // on or next to the support
        Real v = w_at(z) - rep.omega;
        if (!got) { slack = v; got = true; }
        slack = min(slack, v);
      }
    }
    rep.offsupport_slack = got ? slack : Real(0L);
  }
  return rep;
}

Real s_property_residual(const DensityMeasure& lambda, const ExternalField* phi,
                         const PrecisionContext& ctx) {
  ScopedPrecision sp(ctx.decimal_digits);
  auto samples = interior_samples(lambda, 24, 0.02);
  if (samples.empty()) throw std::runtime_error("s_property_residual: no interior samples");

  auto w_at = [&](const Complex& z) {
    Real v = log_potential(lambda, z, ctx);
    if (phi) v += phi->eval(z);
    return v;
  };

  Real worst(0L);
  for (const auto& s : samples) {
    Real h = s.spacing * Real("0.001");
    // d/dh [W(x+h nu) - W(x-h nu)] at h -> 0 is the jump of the normal
    // derivative across the arc; Richardson on the odd difference.
    Real j_h = w_at(s.point + s.normal * h) - w_at(s.point - s.normal * h);
    Real j_h2 = w_at(s.point + s.normal * (h * Real("0.5"))) -
                w_at(s.point - s.normal * (h * Real("0.5")));
    worst = max(worst, abs((Real(4L) * j_h2 - j_h) / h));
  }
  return worst;
}

}  // namespace scurve
