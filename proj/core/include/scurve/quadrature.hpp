#ifndef SCURVE_QUADRATURE_HPP
#define SCURVE_QUADRATURE_HPP

#include "scurve/path.hpp"

#include <functional>

namespace scurve {

using ComplexFun = std::function<Complex(const Complex&)>;

enum class EndpointSingularity { None, InvSqrtStart, InvSqrtEnd, InvSqrtBoth };

// Adaptive contour integral of f along path: tanh-sinh rule per segment with
// level refinement, bisecting segments that fail to settle. Declared
// inverse-square-root endpoint singularities are removed by the substitution
// t = endpoint + s^2 before quadrature. Relative error target is
// ctx.quad_tolerance(); persistent failure raises "quadrature failure".
Complex contour_integrate(const ComplexFun& f, const Path& path, const PrecisionContext& ctx,
                          EndpointSingularity sing = EndpointSingularity::None);

// Same machinery for scalar integrands over [x0, x1] on the real line.
Real real_integrate(const std::function<Real(const Real&)>& f, const Real& x0, const Real& x1,
                    const PrecisionContext& ctx,
                    EndpointSingularity sing = EndpointSingularity::None);

// tanh-sinh on the open interval t in (0,1); the workhorse behind both
// wrappers above. `err` receives the last level-difference estimate.
Complex tanhsinh_01(const std::function<Complex(const Real&)>& u, const PrecisionContext& ctx,
                    Real* err = nullptr);

}  // namespace scurve

#endif  // SCURVE_QUADRATURE_HPP
