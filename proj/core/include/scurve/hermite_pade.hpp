#ifndef SCURVE_HERMITE_PADE_HPP
#define SCURVE_HERMITE_PADE_HPP

#include "scurve/series.hpp"

namespace scurve {

struct HermitePadeResult {
  PolynomialC q0, q1, q2;
  bool non_normal = false;
  // Residual of the constrained remainder coefficients (z^n .. z^{-2n-1}),
  // relative to the solution scale; the order certificate.
  Real order_residual{0L};
};

// Type I Hermite-Pade triple for (1, f1, f2): Q0 + Q1 f1 + Q2 f2 = O(z^{-2(n+1)}).
// Needs >= 3n+3 tail coefficients of each germ (constants included).
HermitePadeResult hermite_pade_type1(const SeriesGerm& f1, const SeriesGerm& f2, int n,
                                     const PrecisionContext& ctx);

// Laurent coefficient of R at z^{-m}, m >= 1 (for order checks past the
// constrained range).
Complex hp_remainder_coeff(const HermitePadeResult& r, const SeriesGerm& f1, const SeriesGerm& f2,
                           long m);

}  // namespace scurve

#endif  // SCURVE_HERMITE_PADE_HPP
