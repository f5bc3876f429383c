#ifndef SCURVE_ROOTS_HPP
#define SCURVE_ROOTS_HPP

#include "scurve/polynomial.hpp"

#include <vector>

namespace scurve {

// Simultaneous (Aberth-Ehrlich) root iteration at working precision.
// Returns exactly degree(p) roots counted with multiplicity. The residual
// |p(r)| / (max|coeff| * max(1,|r|)^deg) is driven below ctx.root_tolerance.
// Initial placement is pseudo-random but fully determined by ctx.seed.
std::vector<Complex> poly_roots(const PolynomialC& p, const PrecisionContext& ctx);

}  // namespace scurve

#endif  // SCURVE_ROOTS_HPP
