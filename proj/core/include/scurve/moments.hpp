#ifndef SCURVE_MOMENTS_HPP
#define SCURVE_MOMENTS_HPP

#include "scurve/path.hpp"
#include "scurve/weights.hpp"

#include <vector>

namespace scurve {

// mu_j = int_F z^j w_n(z) dz for j = 0..count-1 along the segment a1 -> a2
// (weights are entire, so the moments are path independent).
struct MomentTable {
  std::vector<Complex> values;
  int n = 0;  // weight degree parameter the table was built for
};

// Closed-form moment chain mu_hat_j(s) = int z^j e^{-sz} dz with the
// boundary-term recurrence; prefactor polynomials fold in by index shift.
MomentTable moments_expsum(const ExpSumWeight& w, int count, const PrecisionContext& ctx);

// Quadrature route for cross-checks and for arbitrary polyline paths.
MomentTable moments_quadrature(const ExpSumWeight& w, int count, const Path& path,
                               const PrecisionContext& ctx);

// Three-term recurrence coefficients: monic Q_{k+1} = (z-alpha_k) Q_k - beta_k Q_{k-1}.
struct RecurrenceCoeffs {
  std::vector<Complex> alpha;
  std::vector<Complex> beta;  // beta_0 = mu_0
};

// Chebyshev algorithm from 2N moments. Throws "degenerate moment sequence
// at k" when a Hankel-type pivot sigma_{k,k} collapses.
RecurrenceCoeffs recurrence_coeffs(const MomentTable& m, int N, const PrecisionContext& ctx);

}  // namespace scurve

#endif  // SCURVE_MOMENTS_HPP
