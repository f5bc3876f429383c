#include "scurve/branch.hpp"

#include <stdexcept>

namespace scurve {

namespace {

Complex sqrt_near(const Complex& fval, const Complex& ref) {
  Complex w = sqrt(fval);
  return (abs(w - ref) <= abs(w + ref)) ? w : -w;
}

// March sqrt(f) along one segment, refining steps until consecutive values
// stay within a fraction of each other. Appends (point, value) samples.
Complex continue_segment(const ComplexFun& f, const PathSegment& seg, Complex w,
                         std::vector<std::pair<Complex, Complex>>* log, const Real& collision_tol,
                         std::vector<std::pair<Real, Complex>>* table) {
  const Real quarter("0.25");
  Real t(0L);
  Real step("0.03125");
  int guard = 0;
  while (t < Real(1L)) {
    if (++guard > 100000) throw std::runtime_error("branch collision: continuation stalled");
    Real tn = min(t + step, Real(1L));
    Complex zn = seg.point(tn);
    Complex fv = f(zn);
    if (abs(fv) < collision_tol)
      throw std::runtime_error("branch collision at " + zn.str(8));
    Complex wn = sqrt_near(fv, w);
    Real jump = abs(wn - w);
    if (jump > quarter * (abs(wn) + abs(w)) && step > Real("1e-12")) {
      step = step * Real("0.5");
      continue;
    }
    if (jump < Real("0.02") * abs(wn)) step = min(step * Real(2L), Real("0.0625"));
    t = tn;
    w = wn;
    if (log) log->emplace_back(zn, wn);
    if (table) table->emplace_back(t, wn);
  }
  return w;
}

}  // namespace

Complex sqrt_continued(const ComplexFun& f, const Path& path, BranchTracker& tracker,
                       const PrecisionContext& ctx) {
  ScopedPrecision sp(ctx.decimal_digits);
  Complex w = tracker.base_value;
  // Scale-aware zero-proximity bound.
  Real f0 = abs(f(path.start()));
  Real collision_tol = max(f0, Real(1L)) * pow10(-20);
  Complex w0sq = w * w;
  if (abs(w0sq - f(path.start())) > ctx.root_tolerance() * max(Real(1L), abs(w0sq)))
    throw std::runtime_error("branch tracker base value does not square to f(start)");
  for (const auto& seg : path.segments)
    w = continue_segment(f, seg, w, &tracker.log, collision_tol, nullptr);
  return w;
}

BranchedSqrt::BranchedSqrt(ComplexFun f, PathSegment seg, Complex base_value,
                           const PrecisionContext& ctx)
    : f_(std::move(f)), seg_(std::move(seg)) {
  ScopedPrecision sp(ctx.decimal_digits);
  table_.emplace_back(Real(0L), base_value);
  Real f0 = abs(f_(seg_.start()));
  Real collision_tol = max(f0, Real(1L)) * pow10(-2 * ctx.decimal_digits);
  continue_segment(f_, seg_, base_value, nullptr, collision_tol, &table_);
}

Complex BranchedSqrt::at(const Real& t) const {
  // Nearest table entry by parameter, then one local sign decision.
  size_t lo = 0, hi = table_.size();
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (table_[mid].first <= t)
      lo = mid;
    else
      hi = mid;
  }
  size_t best = lo;
  if (lo + 1 < table_.size() && abs(table_[lo + 1].first - t) < abs(table_[lo].first - t))
    best = lo + 1;
  return sqrt_near(f_(seg_.point(t)), table_[best].second);
}

Complex BranchedSqrt::at_point_near(const Complex& z, const Real& t_hint) const {
  size_t lo = 0, hi = table_.size();
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (table_[mid].first <= t_hint)
      lo = mid;
    else
      hi = mid;
  }
  return sqrt_near(f_(z), table_[lo].second);
}

}  // namespace scurve
