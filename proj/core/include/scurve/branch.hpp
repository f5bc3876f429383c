#ifndef SCURVE_BRANCH_HPP
#define SCURVE_BRANCH_HPP

#include "scurve/path.hpp"
#include "scurve/quadrature.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace scurve {

// Records the continuation of a square-root branch: a base value and the
// (point, value) pairs visited along the way.
struct BranchTracker {
  Complex base_point;
  Complex base_value;
  std::vector<std::pair<Complex, Complex>> log;
};

// Analytic continuation of sqrt(f) along the path, starting from
// tracker.base_value at the path start. Squaring the result reproduces f to
// root tolerance. Throws "branch collision" if f comes too close to zero on
// the path.
Complex sqrt_continued(const ComplexFun& f, const Path& path, BranchTracker& tracker,
                       const PrecisionContext& ctx);

// Branch-consistent sqrt of f along one segment, evaluable at arbitrary
// parameters (not just in path order). Used by quadrature rules whose nodes
// interleave. Builds an adaptive continuation table on construction.
class BranchedSqrt {
 public:
  BranchedSqrt(ComplexFun f, PathSegment seg, Complex base_value, const PrecisionContext& ctx);
  // sqrt(f(z(t))) on the branch continued from the segment start.
  Complex at(const Real& t) const;
  Complex at_point_near(const Complex& z, const Real& t_hint) const;
  const Complex& end_value() const { return table_.back().second; }

 private:
  ComplexFun f_;
  PathSegment seg_;
  std::vector<std::pair<Real, Complex>> table_;  // (t, sqrt value), ascending t
};

}  // namespace scurve

#endif  // SCURVE_BRANCH_HPP
