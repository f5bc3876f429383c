#ifndef SCURVE_PATH_HPP
#define SCURVE_PATH_HPP

#include "scurve/complexmath.hpp"

#include <stdexcept>
#include <vector>

namespace scurve {

// One parametric arc, t in [0,1]. Straight segment or circular arc.
struct PathSegment {
  enum class Kind { Line, Arc };
  Kind kind = Kind::Line;
  Complex a, b;      // line endpoints
  Complex center;    // arc data
  Real radius{0L};
  Real theta0{0L}, theta1{0L};

  static PathSegment line(Complex from, Complex to) {
    PathSegment s;
    s.kind = Kind::Line;
    s.a = std::move(from);
    s.b = std::move(to);
    return s;
  }
  static PathSegment arc(Complex center, Real radius, Real theta0, Real theta1);

  Complex point(const Real& t) const;
  Complex tangent(const Real& t) const;  // dz/dt
  Complex start() const;
  Complex end() const;
  Real length() const;
};

// Connected chain of segments.
struct Path {
  std::vector<PathSegment> segments;

  Path() = default;
  explicit Path(std::vector<PathSegment> segs);

  static Path line(const Complex& a, const Complex& b) { return Path({PathSegment::line(a, b)}); }
  static Path polyline(const std::vector<Complex>& pts);
  static Path circle(const Complex& center, const Real& radius, bool ccw = true);

  Complex start() const { return segments.front().start(); }
  Complex end() const { return segments.back().end(); }
  Path reversed() const;
  Path concat(const Path& other) const;
  Real length() const;
  bool closed() const;
};

// Straight path from a to b with circular detours around any of the given
// points that lie within `clearance` of the segment.
Path path_with_detours(const Complex& a, const Complex& b,
                       const std::vector<Complex>& avoid, const Real& clearance);

}  // namespace scurve

#endif  // SCURVE_PATH_HPP
