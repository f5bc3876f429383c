#ifndef SCURVE_ORTHOPOLY_HPP
#define SCURVE_ORTHOPOLY_HPP

#include "scurve/moments.hpp"
#include "scurve/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace scurve {

// Builds the monic orthogonal polynomial from recurrence coefficients.
PolynomialC monic_from_recurrence(const RecurrenceCoeffs& rc, int N);

// Zeros of the degree-N non-Hermitian orthogonal polynomial for w.
// Primary route: moments -> Chebyshev algorithm -> monic Q_N -> poly_roots.
// Cross-check route: eigenvalues of the complex Jacobi matrix. On route
// disagreement the computation retries once at doubled digits; persistent
// disagreement above 1e-3 is an error.
struct OpZerosResult {
  std::vector<Complex> zeros;
  PolynomialC q;                 // monic Q_N
  Real route_disagreement{0L};   // Hausdorff-type distance between routes
  bool route_warning = false;    // disagreement above 1e3 * root_tolerance
  int digits_used = 0;
};

OpZerosResult op_zeros(const ExpSumWeight& w, int N, const PrecisionContext& ctx);

// Zeros from a precomputed moment table (used for path-override runs).
OpZerosResult op_zeros_from_moments(const MomentTable& m, int N, const PrecisionContext& ctx);

// max_k |int Q z^k w dz| / int |z^k w| |dz| over k < deg Q; the a-posteriori
// orthogonality certificate. N = 0 is vacuous (0 by convention).
Real orthogonality_residual(const PolynomialC& q, const ExpSumWeight& w, const Path& path,
                            const PrecisionContext& ctx);

// Small-N oracle: monic orthogonal polynomial via Hankel moment determinants
// (cofactor expansion of the classical determinant formula). N <= 12.
PolynomialC op_from_moment_determinants(const MomentTable& m, int N, const PrecisionContext& ctx);

}  // namespace scurve

#endif  // SCURVE_ORTHOPOLY_HPP
