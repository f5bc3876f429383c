#ifndef SCURVE_LINALG_HPP
#define SCURVE_LINALG_HPP

#include "scurve/complexmath.hpp"

#include <vector>

namespace scurve {

// Dense complex matrix, row-major. Small sizes only (n <= a few hundred).
class CMatrix {
 public:
  CMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, Complex(0L)) {}
  int rows() const { return r_; }
  int cols() const { return c_; }
  Complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Complex& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

 private:
  int r_, c_;
  std::vector<Complex> a_;
};

// Solve A x = b by LU with partial pivoting. Throws on numerical singularity.
std::vector<Complex> lu_solve(CMatrix a, std::vector<Complex> b);

// One nullspace vector of an m x n system (m < n), by column-pivoted
// elimination; `rank_deficient` reports extra rank collapse beyond the
// expected one-dimensional nullspace.
std::vector<Complex> null_vector(CMatrix a, bool* rank_deficient = nullptr);

// Eigenvalues of a general complex matrix: Hessenberg reduction followed by
// shifted QR with deflation, all at working precision.
std::vector<Complex> eigenvalues(CMatrix a, int max_sweeps = 2000);

// Real dense solve for Newton steps.
std::vector<Real> real_solve(std::vector<std::vector<Real>> a, std::vector<Real> b);

}  // namespace scurve

#endif  // SCURVE_LINALG_HPP
