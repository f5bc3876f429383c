#ifndef SCURVE_POTENTIAL_HPP
#define SCURVE_POTENTIAL_HPP

#include "scurve/measures.hpp"
#include "scurve/path.hpp"

namespace scurve {

// C^mu(z) = int d mu(x) / (x - z). Exact sum for atoms, arclength quadrature
// for densities. Throws "evaluation too close to support" inside the
// principal-value zone (closer than the local sample spacing).
Complex cauchy_transform(const DiscreteMeasure& m, const Complex& z);
Complex cauchy_transform(const DensityMeasure& m, const Complex& z, const PrecisionContext& ctx);

// U^mu(z) = int log(1/|z-t|) d mu(t). The logarithmic singularity is
// integrable, so density measures may be evaluated arbitrarily close to (or
// on) the support; the nearest intervals are integrated with a split rule.
Real log_potential(const DiscreteMeasure& m, const Complex& z);
Real log_potential(const DensityMeasure& m, const Complex& z, const PrecisionContext& ctx);

// Logarithmic energy; the discrete form sums off-diagonal pairs only.
Real energy(const DiscreteMeasure& m);
Real energy(const DensityMeasure& m, const PrecisionContext& ctx);
Real mutual_energy(const DiscreteMeasure& a, const DiscreteMeasure& b);
Real mutual_energy(const DensityMeasure& a, const DensityMeasure& b, const PrecisionContext& ctx);
Real mutual_energy(const DiscreteMeasure& a, const DensityMeasure& b, const PrecisionContext& ctx);

Real weighted_energy(const DiscreteMeasure& m, const ExternalField& phi);
Real weighted_energy(const DensityMeasure& m, const ExternalField& phi, const PrecisionContext& ctx);

Real field_integral(const MeasureRef& m, const ExternalField& phi, const PrecisionContext& ctx);

// Total vector energy: sum tau_jk E(mu_j, mu_k) + 2 sum int phi_j d mu_j.
Real vector_energy(const VectorMeasure& vm, const PrecisionContext& ctx);

// Canned interaction matrices.
std::vector<std::vector<Real>> interaction_all_ones(int p);
std::vector<std::vector<Real>> interaction_angelesco();
std::vector<std::vector<Real>> interaction_nikishin();

// max over probe points on |z| = radius of |U^{m1} - U^{m2}| plus the mass
// mismatch; the working weak-* proxy. Supports must stay inside radius/2.
Real potential_distance(const MeasureRef& m1, const MeasureRef& m2, const Real& radius, int grid,
                        const PrecisionContext& ctx);

struct EquilibriumReport {
  Real support_variation{0L};   // max - min of U + phi over support samples
  Real offsupport_slack{0L};    // min over off-support samples of (U+phi) - omega
  Real omega{0L};               // support mean of U + phi
  bool offsupport_checked = false;
};

// Variational residuals of the equilibrium conditions: U^lambda + phi
// constant on supp(lambda) and >= that constant on the rest of S. Support
// values come from two-sided Richardson extrapolation along the normal.
EquilibriumReport equilibrium_residual(const DensityMeasure& lambda, const ExternalField* phi,
                                       const Path* s_curve, const PrecisionContext& ctx);

// max over interior support samples of the jump of the normal derivative of
// U^lambda + phi; endpoints trimmed by 2% of arclength.
Real s_property_residual(const DensityMeasure& lambda, const ExternalField* phi,
                         const PrecisionContext& ctx);

}  // namespace scurve

#endif  // SCURVE_POTENTIAL_HPP
