#ifndef SCURVE_PADE_HPP
#define SCURVE_PADE_HPP

#include "scurve/series.hpp"

#include <vector>

namespace scurve {

struct PadeResult {
  PolynomialC q;      // denominator, monic at normal indices
  PolynomialC p;      // numerator, the truncation of Q*f at nonnegative powers
  bool non_normal = false;
};

// Diagonal Pade denominator of degree n from the Hankel system of eq-order
// conditions; needs at least 2n tail coefficients.
PadeResult pade_denominator(const SeriesGerm& f, int n, const PrecisionContext& ctx);

// Laurent coefficients of the remainder R = Q f - P at powers z^{-1}..z^{-count}.
std::vector<Complex> pade_remainder_tail(const PadeResult& r, const SeriesGerm& f, int count);

struct PadePole {
  Complex location;
  Complex residue;
  bool multiple = false;   // residue omitted: pole cluster detected
  bool spurious = false;
};

// Poles with residues of P/Q; spurious = |residue| < threshold * median residue.
std::vector<PadePole> pade_poles(const PadeResult& r, const PrecisionContext& ctx);
void detect_spurious(std::vector<PadePole>& poles, const Real& threshold);

}  // namespace scurve

#endif  // SCURVE_PADE_HPP
