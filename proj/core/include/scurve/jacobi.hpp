#ifndef SCURVE_JACOBI_HPP
#define SCURVE_JACOBI_HPP

#include "scurve/polynomial.hpp"

namespace scurve {

// Jacobi polynomial P_n^{(alpha,beta)} from the explicit double sum; entire
// in the complex parameters.
PolynomialC jacobi_explicit(int n, const Complex& alpha, const Complex& beta,
                            const PrecisionContext& ctx);

// Normalized max coefficient magnitude of (1-z^2) y'' + (b-a-(a+b+2)z) y' + n(n+a+b+1) y.
Real jacobi_ode_residual(const PolynomialC& y, int n, const Complex& alpha, const Complex& beta);

}  // namespace scurve

#endif  // SCURVE_JACOBI_HPP
