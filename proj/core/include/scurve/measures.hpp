#ifndef SCURVE_MEASURES_HPP
#define SCURVE_MEASURES_HPP

#include "scurve/polynomial.hpp"
#include "scurve/weights.hpp"

#include <functional>
#include <vector>

namespace scurve {

// Atomic measure; weights positive, usually 1/n each.
struct DiscreteMeasure {
  std::vector<Complex> atoms;
  std::vector<Real> weights;

  Real mass() const;
};

// Absolutely continuous measure on a chain of arcs. Each arc is a polyline
// of sample points with a piecewise-linear density per arclength; endpoint
// inverse-square-root blow-ups are carried as (coefficient, -1/2) head
// terms beyond the first/last sample. Solver-produced arcs additionally
// carry the exact pointwise density (|sqrt R|/pi needs no branch data), and
// integrals then run adaptive quadrature on it instead of the linear
// interpolant.
struct DensityArc {
  std::vector<Complex> points;
  std::vector<Real> density;
  Real head_start{0L};  // density ~ c/sqrt(distance) before points.front()
  Real head_end{0L};    // and past points.back(); c = 0 means no head term
  Real head_start_len{0L}, head_end_len{0L};  // arclength covered by each head
  std::function<Real(const Complex&)> rho_exact;  // optional

  Real arclength() const;
  Real mass(const PrecisionContext* ctx = nullptr) const;
};

struct DensityMeasure {
  std::vector<DensityArc> arcs;
  Real total_mass{0L};

  Real mass(const PrecisionContext* ctx = nullptr) const;
  void set_mass_from_arcs(const PrecisionContext* ctx = nullptr) { total_mass = mass(ctx); }
  // Drops the exact-density callbacks (what a JSON round trip would do).
  DensityMeasure sampled_only() const;
};

// chi(p): atoms at the roots, weights 1/deg; root clusters merged.
DiscreteMeasure zero_counting(const PolynomialC& p, const PrecisionContext& ctx);
DiscreteMeasure zero_counting(const std::vector<Complex>& zeros);

// Builds an arc from a parametric description with endpoint-clustered
// sampling (sin^2 reparametrization); flags head terms where the density
// blows up like an inverse square root, and keeps the exact density.
DensityArc sample_density_arc(const std::function<Complex(const Real&)>& point,
                              const std::function<Real(const Complex&)>& rho, int samples,
                              bool blowup_start, bool blowup_end);

// Same, from a traced polyline: geometry is the polyline, density pointwise.
DensityArc arc_from_polyline(const std::vector<Complex>& pts,
                             const std::function<Real(const Complex&)>& rho, int samples,
                             bool blowup_start, bool blowup_end);

// Vector measures for the total-energy functional.
struct MeasureRef {
  const DiscreteMeasure* discrete = nullptr;
  const DensityMeasure* density = nullptr;

  MeasureRef(const DiscreteMeasure& d) : discrete(&d) {}
  MeasureRef(const DensityMeasure& d) : density(&d) {}
  Real mass() const;
};

struct VectorMeasure {
  std::vector<MeasureRef> components;
  std::vector<std::vector<Real>> interaction;  // symmetric T
  std::vector<const ExternalField*> fields;    // may hold nullptr for zero field
};

}  // namespace scurve

#endif  // SCURVE_MEASURES_HPP
