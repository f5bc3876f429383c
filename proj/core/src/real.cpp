#include "scurve/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace scurve {

namespace detail {

namespace {
thread_local mpfr_prec_t g_prec = bits_for_digits(50);
}

mpfr_prec_t working_prec() noexcept { return g_prec; }
void set_working_prec(mpfr_prec_t bits) noexcept { g_prec = std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN); }

mpfr_prec_t bits_for_digits(int decimal_digits) noexcept {
  // log2(10) = 3.3219...; a few guard bits on top.
  return static_cast<mpfr_prec_t>(decimal_digits * 3.3219280948873623 + 16.0);
}

}  // namespace detail

std::string Real::str(int digits) const {
  if (digits <= 0)
    digits = static_cast<int>(mpfr_get_prec(v_) / 3.3219280948873623);
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Rg", digits, v_) < 0)
    return "<fmt-error>";
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

#define SCURVE_REAL_FUN1(name, mpfr_name)          \
  Real name(const Real& a) {                       \
    Real r = Real::make();                         \
    mpfr_name(r.raw(), a.raw(), MPFR_RNDN);        \
    return r;                                      \
  }

SCURVE_REAL_FUN1(abs, mpfr_abs)
SCURVE_REAL_FUN1(sqrt, mpfr_sqrt)
SCURVE_REAL_FUN1(exp, mpfr_exp)
SCURVE_REAL_FUN1(log, mpfr_log)
SCURVE_REAL_FUN1(sin, mpfr_sin)
SCURVE_REAL_FUN1(cos, mpfr_cos)

#undef SCURVE_REAL_FUN1

Real floor(const Real& a) {
  Real r = Real::make();
  mpfr_floor(r.raw(), a.raw());
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r = Real::make();
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r = Real::make();
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& a, long n) {
  Real r = Real::make();
  mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}

Real pow10(long n) {
  Real r = Real::make();
  mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(n < 0 ? -n : n), MPFR_RNDN);
  if (n < 0) {
    Real one(1L);
    mpfr_div(r.raw(), one.raw(), r.raw(), MPFR_RNDN);
  }
  return r;
}

Real pi() {
  Real r = Real::make();
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

int default_digits(int n, double slope_bound, double diam) {
  double d = 0.6 * n * std::max(1.0, slope_bound) * diam;
  return std::max(50, static_cast<int>(std::ceil(d)));
}

}  // namespace scurve
