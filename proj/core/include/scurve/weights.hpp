#ifndef SCURVE_WEIGHTS_HPP
#define SCURVE_WEIGHTS_HPP

#include "scurve/polynomial.hpp"

#include <vector>

namespace scurve {

// One exponential term g(z) * exp(-k n z) of a varying weight.
struct WeightTerm {
  Complex slope_k;
  PolynomialC prefactor = PolynomialC::constant(Complex(1L));
};

// w_n(z) = sum_j g_j(z) exp(-k_j n z), integrated between endpoints a1, a2.
struct ExpSumWeight {
  std::vector<WeightTerm> terms;
  Complex a1, a2;
  int n = 1;

  ExpSumWeight(std::vector<WeightTerm> t, Complex a1_, Complex a2_, int n_);
  static ExpSumWeight single(Complex k, Complex a1, Complex a2, int n);
  static ExpSumWeight cosh_weight(const Real& k, Complex a1, Complex a2, int n);
  // 1 + e^{-knz}
  static ExpSumWeight one_plus_exp(const Real& k, Complex a1, Complex a2, int n);
};

Complex weight_eval(const ExpSumWeight& w, const Complex& z);

// phi(z) = Re(k z) on a sector of directions; regions are cones about the
// origin because all the competing linear forms are homogeneous.
struct FieldPiece {
  Real theta_lo, theta_hi;  // direction sector (radians, in (-pi, pi] wrap)
  Complex slope_k;          // minimizing slope on the sector
};

struct ExternalField {
  std::vector<Complex> slopes;
  std::vector<FieldPiece> pieces;

  // min_j Re(k_j z)
  Real eval(const Complex& z) const;
  Complex gradient_slope(const Complex& z) const;  // the minimizing k at z
};

// Limit external field phi(z) = -lim (1/n) log|w_n(z)| = min_j Re(k_j z).
ExternalField external_field(const ExpSumWeight& w);

// The maximal open sectors on which a single term dominates.
std::vector<FieldPiece> harmonic_regions(const ExternalField& f);

}  // namespace scurve

#endif  // SCURVE_WEIGHTS_HPP
