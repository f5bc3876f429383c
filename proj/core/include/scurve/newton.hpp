#ifndef SCURVE_NEWTON_HPP
#define SCURVE_NEWTON_HPP

#include "scurve/real.hpp"

#include <functional>
#include <vector>

namespace scurve {

using RealSystem = std::function<std::vector<Real>(const std::vector<Real>&)>;

struct NewtonReport {
  bool converged = false;
  int iterations = 0;
  Real residual_norm{0L};
};

// Damped Newton with forward-difference Jacobian on a square real system.
// `tol` is on the max-norm of the residual.
std::vector<Real> newton_solve(const RealSystem& f, std::vector<Real> x0, const Real& tol,
                               int max_iters, NewtonReport* report = nullptr);

}  // namespace scurve

#endif  // SCURVE_NEWTON_HPP
