#include "scurve/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace scurve {

std::vector<Complex> lu_solve(CMatrix a, std::vector<Complex> b) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n) throw std::invalid_argument("lu_solve: shape");
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;

  for (int k = 0; k < n; ++k) {
    int piv = k;
    Real best = abs(a(k, k));
    for (int i = k + 1; i < n; ++i) {
      Real v = abs(a(i, k));
      if (v > best) { best = v; piv = i; }
    }
    if (best.is_zero()) throw std::runtime_error("lu_solve: singular matrix");
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(b[static_cast<size_t>(k)], b[static_cast<size_t>(piv)]);
    }
    for (int i = k + 1; i < n; ++i) {
      Complex m = a(i, k) / a(k, k);
      if (m.is_zero()) continue;
      for (int j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
      b[static_cast<size_t>(i)] -= m * b[static_cast<size_t>(k)];
    }
  }
  std::vector<Complex> x(static_cast<size_t>(n), Complex(0L));
  for (int i = n - 1; i >= 0; --i) {
    Complex s = b[static_cast<size_t>(i)];
    for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[static_cast<size_t>(j)];
    x[static_cast<size_t>(i)] = s / a(i, i);
  }
  return x;
}

std::vector<Complex> null_vector(CMatrix a, bool* rank_deficient) {
  const int m = a.rows();
  const int n = a.cols();
  if (m >= n) throw std::invalid_argument("null_vector: need m < n");
  std::vector<int> col_of(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) col_of[static_cast<size_t>(j)] = j;

  int rank = 0;
  Real scale(0L);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) scale = max(scale, abs(a(i, j)));
  if (scale.is_zero()) scale = Real(1L);
  Real tiny = scale * pow10(-static_cast<long>(detail::working_prec() / 3.4));

  for (int k = 0; k < m; ++k) {
    // Full pivot search in the remaining block.
    int pr = -1, pc = -1;
    Real best(0L);
    for (int i = k; i < m; ++i)
      for (int j = k; j < n; ++j) {
        Real v = abs(a(i, j));
        if (v > best) { best = v; pr = i; pc = j; }
      }
    if (pr < 0 || best <= tiny) break;
    if (pr != k)
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(pr, j));
    if (pc != k) {
      for (int i = 0; i < m; ++i) std::swap(a(i, k), a(i, pc));
      std::swap(col_of[static_cast<size_t>(k)], col_of[static_cast<size_t>(pc)]);
    }
    for (int i = k + 1; i < m; ++i) {
      Complex f = a(i, k) / a(k, k);
      if (f.is_zero()) continue;
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
    ++rank;
  }
  if (rank_deficient) *rank_deficient = (rank < m);

  // Free variable: column `rank` (permuted). Back-substitute the rest.
  std::vector<Complex> y(static_cast<size_t>(n), Complex(0L));
  y[static_cast<size_t>(rank)] = Complex(1L);
  for (int i = rank - 1; i >= 0; --i) {
    Complex s(0L);
    for (int j = i + 1; j < n; ++j)
      if (!y[static_cast<size_t>(j)].is_zero()) s -= a(i, j) * y[static_cast<size_t>(j)];
    y[static_cast<size_t>(i)] = s / a(i, i);
  }
  std::vector<Complex> x(static_cast<size_t>(n), Complex(0L));
  for (int j = 0; j < n; ++j) x[static_cast<size_t>(col_of[static_cast<size_t>(j)])] = y[static_cast<size_t>(j)];
  return x;
}

namespace {

void hessenberg_reduce(CMatrix& h) {
  const int n = h.rows();
  for (int k = 1; k < n - 1; ++k) {
    // Zero column k-1 below row k with Givens rotations.
    for (int i = k + 1; i < n; ++i) {
      Complex f = h(k, k - 1), g = h(i, k - 1);
      if (g.is_zero()) continue;
      Real r = sqrt(norm(f) + norm(g));
      Complex c = f / r, s = g / r;
      for (int j = k - 1; j < n; ++j) {
        Complex t1 = h(k, j), t2 = h(i, j);
        h(k, j) = conj(c) * t1 + conj(s) * t2;
        h(i, j) = c * t2 - s * t1;
      }
      for (int j = 0; j < n; ++j) {
        Complex t1 = h(j, k), t2 = h(j, i);
        h(j, k) = c * t1 + s * t2;
        h(j, i) = conj(c) * t2 - conj(s) * t1;
      }
    }
  }
}

}  // namespace

std::vector<Complex> eigenvalues(CMatrix a, int max_sweeps) {
  const int n0 = a.rows();
  if (a.cols() != n0) throw std::invalid_argument("eigenvalues: square matrix required");
  if (n0 == 0) return {};
  hessenberg_reduce(a);

  Real eps = pow10(-static_cast<long>(detail::working_prec() / 3.4));
  std::vector<Complex> eig;
  int hi = n0 - 1;
  int sweeps = 0;
  int stuck = 0;  // sweeps spent on the current trailing eigenvalue
  while (hi >= 0) {
    if (hi == 0) {
      eig.push_back(a(0, 0));
      break;
    }
    // Deflate converged trailing eigenvalue.
    Real sub = abs(a(hi, hi - 1));
    Real local = abs(a(hi, hi)) + abs(a(hi - 1, hi - 1));
    if (local.is_zero()) local = Real(1L);
    if (sub <= eps * local) {
      eig.push_back(a(hi, hi));
      --hi;
      stuck = 0;
      continue;
    }
    if (++sweeps > max_sweeps) throw std::runtime_error("eigenvalues: QR did not converge");
    ++stuck;

    // Wilkinson shift from the trailing 2x2 block; exceptional shift when a
    // symmetric cycle keeps the plain shift from biting.
    Complex h00 = a(hi - 1, hi - 1), h01 = a(hi - 1, hi), h10 = a(hi, hi - 1), h11 = a(hi, hi);
    Complex tr = h00 + h11;
    Complex det = h00 * h11 - h01 * h10;
    Complex disc = sqrt(tr * tr - Real(4L) * det);
    Complex mu1 = (tr + disc) * Real("0.5");
    Complex mu2 = (tr - disc) * Real("0.5");
    Complex mu = (abs(mu1 - h11) < abs(mu2 - h11)) ? mu1 : mu2;
    if (stuck % 12 == 0) {
      Real kick = abs(a(hi, hi - 1));
      if (hi >= 2) kick += abs(a(hi - 1, hi - 2));
      mu = h11 + Complex(Real("0.7310"), Real("0.4219")) * kick;
    }

    // Explicit QR step on the active block via Givens.
    int lo = 0;
    for (int k = hi; k > 0; --k) {
      Real s2 = abs(a(k, k - 1));
      Real loc = abs(a(k, k)) + abs(a(k - 1, k - 1));
      if (loc.is_zero()) loc = Real(1L);
      if (s2 <= eps * loc) { lo = k; break; }
    }
    for (int i = lo; i <= hi; ++i) a(i, i) -= mu;
    std::vector<std::pair<Complex, Complex>> rots;
    for (int k = lo; k < hi; ++k) {
      Complex f = a(k, k), g = a(k + 1, k);
      Real r = sqrt(norm(f) + norm(g));
      if (r.is_zero()) { rots.emplace_back(Complex(1L), Complex(0L)); continue; }
      Complex c = f / r, s = g / r;
      rots.emplace_back(c, s);
      for (int j = k; j <= hi; ++j) {
        Complex t1 = a(k, j), t2 = a(k + 1, j);
        a(k, j) = conj(c) * t1 + conj(s) * t2;
        a(k + 1, j) = c * t2 - s * t1;
      }
    }
    for (int k = lo; k < hi; ++k) {
      const Complex& c = rots[static_cast<size_t>(k - lo)].first;
      const Complex& s = rots[static_cast<size_t>(k - lo)].second;
      int top = lo;
      for (int i = top; i <= std::min(k + 2, hi); ++i) {
        Complex t1 = a(i, k), t2 = a(i, k + 1);
        a(i, k) = c * t1 + s * t2;
        a(i, k + 1) = conj(c) * t2 - conj(s) * t1;
      }
    }
    for (int i = lo; i <= hi; ++i) a(i, i) += mu;
  }
  return eig;
}

std::vector<Real> real_solve(std::vector<std::vector<Real>> a, std::vector<Real> b) {
  const size_t n = b.size();
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    Real best = abs(a[k][k]);
    for (size_t i = k + 1; i < n; ++i)
      if (abs(a[i][k]) > best) { best = abs(a[i][k]); piv = i; }
    if (best.is_zero()) throw std::runtime_error("real_solve: singular matrix");
    std::swap(a[k], a[piv]);
    std::swap(b[k], b[piv]);
    for (size_t i = k + 1; i < n; ++i) {
      Real m = a[i][k] / a[k][k];
      if (m.is_zero()) continue;
      for (size_t j = k + 1; j < n; ++j) a[i][j] -= m * a[k][j];
      b[i] -= m * b[k];
    }
  }
  std::vector<Real> x(n, Real(0L));
  for (size_t i = n; i-- > 0;) {
    Real s = b[i];
    for (size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

}  // namespace scurve
