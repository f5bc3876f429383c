#ifndef SCURVE_HEINE_STIELTJES_HPP
#define SCURVE_HEINE_STIELTJES_HPP

#include "scurve/polynomial.hpp"

#include <string>
#include <vector>

namespace scurve {

// Generalized Lame data: A(z) = prod (z - a_i) over the p+1 marked points,
// B of degree <= p with leading coefficient alpha (in the z^p slot).
struct HSConfig {
  std::vector<Complex> points;  // a_0..a_p, pairwise distinct
  PolynomialC b;
  int n = 1;

  PolynomialC a_poly() const;
  Complex alpha() const;  // coefficient of z^p in B (0 when deg B < p)
  // B with all residues rho_k equal to one, i.e. B = A'.
  static PolynomialC unit_residue_b(const std::vector<Complex>& points);
};

struct HSResult {
  PolynomialC q;              // monic Heine-Stieltjes polynomial, degree n
  PolynomialC v;              // Van Vleck polynomial (monic when deg = p-1)
  std::vector<Complex> zeros;
  Real residual{0L};          // coefficient-wise ODE residual, normalized
  std::vector<int> occupancy; // zeros per interval (Stieltjes regime only)
};

struct HSSolveLog {
  int seeds_tried = 0;
  int dropped = 0;
  std::vector<std::string> notes;
};

// Newton on the electrostatic zero system 2 sum_{j!=k} 1/(x_k-x_j) + B(x_k)/A(x_k) = 0.
// In the Stieltjes regime (real points, positive residues) seeds enumerate
// all C(n+p-1, n) interval occupancy patterns at Chebyshev points; otherwise
// the caller supplies seed zero sets.
std::vector<HSResult> heine_stieltjes_solve(const HSConfig& cfg, const PrecisionContext& ctx,
                                            const std::vector<std::vector<Complex>>& seeds = {},
                                            HSSolveLog* log = nullptr);

// Heine's bound sigma(n) = C(n+p-1, n).
long van_vleck_count(int n, int p);

}  // namespace scurve

#endif  // SCURVE_HEINE_STIELTJES_HPP
