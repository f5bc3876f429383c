#include "scurve/path.hpp"

namespace scurve {

PathSegment PathSegment::arc(Complex center, Real radius, Real theta0, Real theta1) {
  if (radius.is_zero() || !(theta0 != theta1)) throw std::invalid_argument("arc: degenerate");
  PathSegment s;
  s.kind = Kind::Arc;
  s.center = std::move(center);
  s.radius = std::move(radius);
  s.theta0 = std::move(theta0);
  s.theta1 = std::move(theta1);
  s.a = s.point(Real(0L));
  s.b = s.point(Real(1L));
  return s;
}

Complex PathSegment::point(const Real& t) const {
  if (kind == Kind::Line) return a + t * (b - a);
  Real th = theta0 + t * (theta1 - theta0);
  return center + polar(radius, th);
}

Complex PathSegment::tangent(const Real& t) const {
  if (kind == Kind::Line) return b - a;
  Real th = theta0 + t * (theta1 - theta0);
  Real dth = theta1 - theta0;
  return Complex(-radius * sin(th) * dth, radius * cos(th) * dth);
}

Complex PathSegment::start() const { return kind == Kind::Line ? a : point(Real(0L)); }
Complex PathSegment::end() const { return kind == Kind::Line ? b : point(Real(1L)); }

Real PathSegment::length() const {
  if (kind == Kind::Line) return abs(b - a);
  return radius * abs(theta1 - theta0);
}

Path::Path(std::vector<PathSegment> segs) : segments(std::move(segs)) {
  if (segments.empty()) throw std::invalid_argument("Path: empty");
  Real tol = pow10(-30);
  for (const auto& s : segments)
    if (s.length().is_zero()) throw std::invalid_argument("Path: zero-length segment");
  for (size_t k = 1; k < segments.size(); ++k) {
    Real gap = abs(segments[k].start() - segments[k - 1].end());
    Real scale = max(Real(1L), segments[k].length());
    if (gap > tol * scale) throw std::invalid_argument("Path: disconnected segments");
  }
}

Path Path::polyline(const std::vector<Complex>& pts) {
  if (pts.size() < 2) throw std::invalid_argument("polyline: need two points");
  std::vector<PathSegment> segs;
  for (size_t k = 1; k < pts.size(); ++k) segs.push_back(PathSegment::line(pts[k - 1], pts[k]));
  return Path(std::move(segs));
}

Path Path::circle(const Complex& center, const Real& radius, bool ccw) {
  Real tp = Real(2L) * pi();
  // Two half turns keep each segment's angular span below pi.
  Real h = tp * Real("0.5");
  if (ccw)
    return Path({PathSegment::arc(center, radius, Real(0L), h), PathSegment::arc(center, radius, h, tp)});
  return Path({PathSegment::arc(center, radius, Real(0L), -h), PathSegment::arc(center, radius, -h, -tp)});
}

Path Path::reversed() const {
  std::vector<PathSegment> segs;
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
    PathSegment s = *it;
    if (s.kind == PathSegment::Kind::Line) {
      std::swap(s.a, s.b);
    } else {
      std::swap(s.theta0, s.theta1);
      std::swap(s.a, s.b);
    }
    segs.push_back(std::move(s));
  }
  return Path(std::move(segs));
}

Path Path::concat(const Path& other) const {
  std::vector<PathSegment> segs = segments;
  segs.insert(segs.end(), other.segments.begin(), other.segments.end());
  return Path(std::move(segs));
}

Real Path::length() const {
  Real L(0L);
  for (const auto& s : segments) L += s.length();
  return L;
}

bool Path::closed() const { return abs(start() - end()) < pow10(-30) * max(Real(1L), length()); }

Path path_with_detours(const Complex& a, const Complex& b,
                       const std::vector<Complex>& avoid, const Real& clearance) {
  // Project each avoided point onto [a,b]; if too close, replace the straight
  // stretch by a half-circle detour around it.
  struct Hit { Real t; Complex p; };
  std::vector<Hit> hits;
  Complex d = b - a;
  Real len2 = norm(d);
  for (const Complex& p : avoid) {
    Complex w = p - a;
    Real t = (w.re * d.re + w.im * d.im) / len2;
    if (t.to_double() < 0.02 || t.to_double() > 0.98) continue;
    Complex foot = a + t * d;
    if (abs(p - foot) < clearance) hits.push_back({t, p});
  }
  if (hits.empty()) return Path::line(a, b);
  std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) { return x.t < y.t; });

  std::vector<PathSegment> segs;
  Complex cur = a;
  Real dir = arg(d);
  for (const Hit& h : hits) {
    Real r = clearance;
    Complex in = h.p - polar(r, dir);   // entry point on the circle, before p
    Complex out = h.p + polar(r, dir);  // exit point past p
    if (!(abs(in - cur) < pow10(-30))) segs.push_back(PathSegment::line(cur, in));
    // Half circle on the left side of travel.
    Real th_in = arg(in - h.p);
    segs.push_back(PathSegment::arc(h.p, r, th_in, th_in + pi()));
    cur = out;
  }
  segs.push_back(PathSegment::line(cur, b));
  return Path(std::move(segs));
}

}  // namespace scurve
