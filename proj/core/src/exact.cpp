#include "scurve/exact.hpp"

#include <stdexcept>

namespace scurve {

Complex QComplex::to_complex() const {
  // Exact numerator/denominator conversion at working precision.
  auto cv = [](const Rat& q) {
    Real num(q.get_num().get_str());
    Real den(q.get_den().get_str());
    return num / den;
  };
  return Complex(cv(re), cv(im));
}

std::vector<QComplex> exact_solve(std::vector<std::vector<QComplex>> a, std::vector<QComplex> b) {
  const size_t n = b.size();
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) throw std::runtime_error("exact_solve: singular system");
    std::swap(a[k], a[piv]);
    std::swap(b[k], b[piv]);
    for (size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      QComplex m = a[i][k] / a[k][k];
      for (size_t j = k; j < n; ++j) a[i][j] -= m * a[k][j];
      b[i] -= m * b[k];
    }
  }
  std::vector<QComplex> x(n);
  for (size_t i = n; i-- > 0;) {
    QComplex s = b[i];
    for (size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

std::vector<QComplex> exact_null_vector(std::vector<std::vector<QComplex>> a) {
  const size_t m = a.size();
  const size_t n = a[0].size();
  if (m >= n) throw std::invalid_argument("exact_null_vector: need m < n");
  std::vector<size_t> col(n);
  for (size_t j = 0; j < n; ++j) col[j] = j;

  size_t rank = 0;
  for (size_t k = 0; k < m; ++k) {
    size_t pr = m, pc = n;
    for (size_t i = k; i < m && pr == m; ++i)
      for (size_t j = k; j < n; ++j)
        if (!a[i][j].is_zero()) { pr = i; pc = j; break; }
    if (pr == m) break;
    std::swap(a[k], a[pr]);
    if (pc != k) {
      for (size_t i = 0; i < m; ++i) std::swap(a[i][k], a[i][pc]);
      std::swap(col[k], col[pc]);
    }
    for (size_t i = k + 1; i < m; ++i) {
      if (a[i][k].is_zero()) continue;
      QComplex f = a[i][k] / a[k][k];
      for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    ++rank;
  }
  std::vector<QComplex> y(n);
  y[rank] = QComplex(1L);
  for (size_t i = rank; i-- > 0;) {
    QComplex s;
    for (size_t j = i + 1; j < n; ++j)
      if (!y[j].is_zero()) s -= a[i][j] * y[j];
    y[i] = s / a[i][i];
  }
  std::vector<QComplex> x(n);
  for (size_t j = 0; j < n; ++j) x[col[j]] = y[j];
  return x;
}

std::vector<Rat> legendre_monic_exact(int n) {
  std::vector<Rat> qm1{1};          // Q_{-1} placeholder (unused at k=0)
  std::vector<Rat> q0{1};           // Q_0 = 1
  if (n == 0) return q0;
  for (int k = 0; k < n; ++k) {
    // Q_{k+1} = z Q_k - beta_k Q_{k-1}, alpha_k = 0, beta_k = k^2/(4k^2-1).
    std::vector<Rat> q1(q0.size() + 1);
    for (size_t j = 0; j < q0.size(); ++j) q1[j + 1] += q0[j];
    if (k > 0) {
      Rat beta(static_cast<long>(k) * k, 4L * k * k - 1);
      beta.canonicalize();
      for (size_t j = 0; j < qm1.size(); ++j) q1[j] -= beta * qm1[j];
    }
    qm1 = std::move(q0);
    q0 = std::move(q1);
  }
  return q0;
}

std::vector<Rat> binomial_sqrt_tail(int M) {
  // (1 - u)^{1/2} (1 + u)^{-1/2} with u = 1/z; coefficient of u^m.
  auto binom_series = [&](const Rat& alpha, bool minus_u) {
    std::vector<Rat> c(static_cast<size_t>(M) + 1);
    c[0] = 1;
    Rat cur = 1;
    for (int m = 1; m <= M; ++m) {
      // C(alpha, m) = C(alpha, m-1) * (alpha - m + 1)/m
      cur *= (alpha - (m - 1)) / m;
      c[static_cast<size_t>(m)] = cur;
      if (minus_u && (m % 2 == 1)) c[static_cast<size_t>(m)] = -c[static_cast<size_t>(m)];
    }
    return c;
  };
  std::vector<Rat> a = binom_series(Rat(1, 2), true);    // (1-u)^{1/2}
  std::vector<Rat> b = binom_series(Rat(-1, 2), false);  // (1+u)^{-1/2}
  std::vector<Rat> prod(static_cast<size_t>(M) + 1);
  for (int i = 0; i <= M; ++i)
    for (int j = 0; i + j <= M; ++j) prod[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
  // f = 1 + sum_{k>=0} c_k z^{-k-1}: c_k = prod[k+1].
  std::vector<Rat> tail;
  for (int k = 0; k + 1 <= M; ++k) tail.push_back(prod[static_cast<size_t>(k) + 1]);
  return tail;
}

}  // namespace scurve
