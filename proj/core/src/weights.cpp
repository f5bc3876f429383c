#include "scurve/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace scurve {

ExpSumWeight::ExpSumWeight(std::vector<WeightTerm> t, Complex a1_, Complex a2_, int n_)
    : terms(std::move(t)), a1(std::move(a1_)), a2(std::move(a2_)), n(n_) {
  if (terms.empty()) throw std::invalid_argument("ExpSumWeight: need at least one term");
  if (a1 == a2) throw std::invalid_argument("ExpSumWeight: endpoints coincide");
  if (n < 1) throw std::invalid_argument("ExpSumWeight: n must be positive");
  for (size_t i = 0; i < terms.size(); ++i)
    for (size_t j = i + 1; j < terms.size(); ++j)
      if (terms[i].slope_k == terms[j].slope_k)
        throw std::invalid_argument("slopes must be distinct");
}

ExpSumWeight ExpSumWeight::single(Complex k, Complex a1, Complex a2, int n) {
  return ExpSumWeight({WeightTerm{std::move(k), PolynomialC::constant(Complex(1L))}},
                      std::move(a1), std::move(a2), n);
}

ExpSumWeight ExpSumWeight::cosh_weight(const Real& k, Complex a1, Complex a2, int n) {
  return ExpSumWeight({WeightTerm{Complex(k, Real(0L))}, WeightTerm{Complex(-k, Real(0L))}},
                      std::move(a1), std::move(a2), n);
}

ExpSumWeight ExpSumWeight::one_plus_exp(const Real& k, Complex a1, Complex a2, int n) {
  return ExpSumWeight({WeightTerm{Complex(0L)}, WeightTerm{Complex(k, Real(0L))}},
                      std::move(a1), std::move(a2), n);
}

Complex weight_eval(const ExpSumWeight& w, const Complex& z) {
  Complex sum(0L);
  Real nn(static_cast<long>(w.n));
  for (const auto& t : w.terms) {
    Complex expo = -(nn * t.slope_k * z);
    if (::fabs(expo.re.to_double()) > 4.0e17)
      throw std::runtime_error("magnitude overflow; raise precision or rescale");
    sum += t.prefactor.eval(z) * exp(expo);
  }
  return sum;
}

Real ExternalField::eval(const Complex& z) const {
  Real best = (slopes[0] * z).re;
  for (size_t j = 1; j < slopes.size(); ++j) best = min(best, (slopes[j] * z).re);
  return best;
}

Complex ExternalField::gradient_slope(const Complex& z) const {
  Complex bk = slopes[0];
  Real best = (slopes[0] * z).re;
  for (size_t j = 1; j < slopes.size(); ++j) {
    Real v = (slopes[j] * z).re;
    if (v < best) { best = v; bk = slopes[j]; }
  }
  return bk;
}

namespace {

int winner_at(const std::vector<Complex>& ks, const Real& theta) {
  Complex z = polar(Real(1L), theta);
  int w = 0;
  Real best = (ks[0] * z).re;
  for (size_t j = 1; j < ks.size(); ++j) {
    Real v = (ks[j] * z).re;
    if (v < best) { best = v; w = static_cast<int>(j); }
  }
  return w;
}

}  // namespace

ExternalField external_field(const ExpSumWeight& w) {
  ExternalField f;
  for (const auto& t : w.terms) f.slopes.push_back(t.slope_k);

  // Scan directions; refine each dominance change by bisection. The
  // boundaries are rays Re((k_i-k_j)z) = 0 through the origin.
  const int samples = 720;
  Real two_pi = Real(2L) * pi();
  int prev = winner_at(f.slopes, Real(0L));
  Real start_theta(0L);
  std::vector<std::pair<Real, int>> arcs;  // (start angle, winner index)
  arcs.emplace_back(Real(0L), prev);
  for (int i = 1; i <= samples; ++i) {
    Real th = two_pi * Real(i) / Real(samples);
    int cur = winner_at(f.slopes, th);
    if (cur != prev) {
      Real lo = two_pi * Real(i - 1) / Real(samples), hi = th;
      for (int b = 0; b < 120; ++b) {
        Real mid = (lo + hi) * Real("0.5");
        if (winner_at(f.slopes, mid) == prev)
          lo = mid;
        else
          hi = mid;
      }
      arcs.emplace_back(hi, cur);
      prev = cur;
    }
  }
  for (size_t a = 0; a < arcs.size(); ++a) {
    Real lo = arcs[a].first;
    Real hi = (a + 1 < arcs.size()) ? arcs[a + 1].first : two_pi;
    if (!(lo < hi)) continue;
    f.pieces.push_back({lo, hi, f.slopes[static_cast<size_t>(arcs[a].second)]});
  }
  // Merge a wrapped-around first/last pair with the same winner.
  if (f.pieces.size() > 1 && f.pieces.front().slope_k == f.pieces.back().slope_k) {
    f.pieces.front().theta_lo = f.pieces.back().theta_lo - two_pi;
    f.pieces.pop_back();
  }
  return f;
}

std::vector<FieldPiece> harmonic_regions(const ExternalField& f) { return f.pieces; }

}  // namespace scurve
