#ifndef SCURVE_EXACT_HPP
#define SCURVE_EXACT_HPP

// Exact arithmetic over Q(i) for the small-instance oracles: rational
// Hankel solves, exact series generation, exact Legendre data.

#include "scurve/complexmath.hpp"

#include <gmpxx.h>

#include <vector>

namespace scurve {

using Rat = mpq_class;

struct QComplex {
  Rat re = 0, im = 0;

  QComplex() = default;
  QComplex(Rat r) : re(std::move(r)) {}
  QComplex(long r) : re(r) {}
  QComplex(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend QComplex operator+(const QComplex& a, const QComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend QComplex operator-(const QComplex& a, const QComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend QComplex operator-(const QComplex& a) { return {-a.re, -a.im}; }
  friend QComplex operator*(const QComplex& a, const QComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend QComplex operator/(const QComplex& a, const QComplex& b) {
    Rat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  QComplex& operator+=(const QComplex& o) { re += o.re; im += o.im; return *this; }
  QComplex& operator-=(const QComplex& o) { re -= o.re; im -= o.im; return *this; }
  friend bool operator==(const QComplex& a, const QComplex& b) { return a.re == b.re && a.im == b.im; }

  Complex to_complex() const;
};

// Exact solve of a square system over Q(i); throws on singularity.
std::vector<QComplex> exact_solve(std::vector<std::vector<QComplex>> a, std::vector<QComplex> b);

// One exact nullspace vector of an m x n system with m < n.
std::vector<QComplex> exact_null_vector(std::vector<std::vector<QComplex>> a);

// Coefficients of the monic Legendre polynomial of degree n (exact, via the
// three-term recurrence beta_k = k^2/(4k^2-1)).
std::vector<Rat> legendre_monic_exact(int n);

// Exact Laurent tail of ((z-1)/(z+1))^(1/2) = 1 + sum c_k z^{-k-1}, from the
// product of the two binomial series; returns c_0..c_{M-1}.
std::vector<Rat> binomial_sqrt_tail(int M);

}  // namespace scurve

#endif  // SCURVE_EXACT_HPP
