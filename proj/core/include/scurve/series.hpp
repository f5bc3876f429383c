#ifndef SCURVE_SERIES_HPP
#define SCURVE_SERIES_HPP

#include "scurve/polynomial.hpp"

#include <utility>
#include <vector>

namespace scurve {

// Laurent germ at infinity: f = constant + sum_{k>=0} coeffs[k] / z^{k+1}.
// The constant is kept separate; Pade denominators ignore it, Hermite-Pade
// systems use it.
struct SeriesGerm {
  Complex constant{0L};
  std::vector<Complex> coeffs;

  int tail_length() const { return static_cast<int>(coeffs.size()); }
};

struct Frac {
  long num = 0;
  long den = 1;
};

// f = prod_i (z - b_i)^{gamma_i} with sum gamma_i = 0 and f(infinity) = 1.
struct SemiclassicalSpec {
  std::vector<Complex> branch_points;
  std::vector<Frac> exponents;
};

// Laurent coefficients of the semiclassical germ via the linear recurrence
// obtained from A_b f' = f * sum_i gamma_i prod_{j != i} (z - b_j).
SeriesGerm series_from_semiclassical(const SemiclassicalSpec& s, int M, const PrecisionContext& ctx);

// The paper's two showcase germ pairs.
SemiclassicalSpec pade_showcase_f1();
SemiclassicalSpec pade_showcase_f2();
SemiclassicalSpec hp_showcase_f1();
SemiclassicalSpec hp_showcase_f2();

}  // namespace scurve

#endif  // SCURVE_SERIES_HPP
