#ifndef SCURVE_REAL_HPP
#define SCURVE_REAL_HPP

// Arbitrary-precision real numbers on top of MPFR. Every arithmetic result
// is rounded to the current thread-local working precision, so a run is
// reproducible bit for bit once the precision is fixed.

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace scurve {

namespace detail {
// Working precision in bits for the calling thread.
mpfr_prec_t working_prec() noexcept;
void set_working_prec(mpfr_prec_t bits) noexcept;
mpfr_prec_t bits_for_digits(int decimal_digits) noexcept;
}  // namespace detail

class Real {
 public:
  Real() { mpfr_init2(v_, detail::working_prec()); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real(long n) { mpfr_init2(v_, detail::working_prec()); mpfr_set_si(v_, n, MPFR_RNDN); }
  Real(int n) : Real(static_cast<long>(n)) {}
  // double payloads are taken as exact binary values (useful for small
  // literals like 1.5); decimal strings are rounded to working precision.
  explicit Real(double d) { mpfr_init2(v_, detail::working_prec()); mpfr_set_d(v_, d, MPFR_RNDN); }
  explicit Real(const std::string& s) {
    mpfr_init2(v_, detail::working_prec());
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw std::invalid_argument("Real: cannot parse '" + s + "'");
  }
  ~Real() { mpfr_clear(v_); }

  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  Real& operator=(long n) { mpfr_set_prec(v_, detail::working_prec()); mpfr_set_si(v_, n, MPFR_RNDN); return *this; }

  mpfr_ptr raw() noexcept { return v_; }
  mpfr_srcptr raw() const noexcept { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  std::string str(int digits = 0) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_negative() const { return mpfr_sgn(v_) < 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real& operator+=(const Real& o) { return apply2(mpfr_add, o); }
  Real& operator-=(const Real& o) { return apply2(mpfr_sub, o); }
  Real& operator*=(const Real& o) { return apply2(mpfr_mul, o); }
  Real& operator/=(const Real& o) { return apply2(mpfr_div, o); }

  friend Real operator+(const Real& a, const Real& b) { return binop(mpfr_add, a, b); }
  friend Real operator-(const Real& a, const Real& b) { return binop(mpfr_sub, a, b); }
  friend Real operator*(const Real& a, const Real& b) { return binop(mpfr_mul, a, b); }
  friend Real operator/(const Real& a, const Real& b) { return binop(mpfr_div, a, b); }
  friend Real operator-(const Real& a) {
    Real r = make();
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  static Real make() { return Real(tag_uninit{}); }

 private:
  struct tag_uninit {};
  explicit Real(tag_uninit) { mpfr_init2(v_, detail::working_prec()); }

  using mpfr_fun2 = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  Real& apply2(mpfr_fun2 f, const Real& o) {
    Real r = make();
    f(r.v_, v_, o.v_, MPFR_RNDN);
    mpfr_swap(v_, r.v_);
    return *this;
  }
  static Real binop(mpfr_fun2 f, const Real& a, const Real& b) {
    Real r = make();
    f(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

// Installs `decimal_digits` as the thread's working precision for its
// lifetime and restores the previous precision on destruction.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(int decimal_digits)
      : saved_(detail::working_prec()) {
    detail::set_working_prec(detail::bits_for_digits(decimal_digits));
  }
  ~ScopedPrecision() { detail::set_working_prec(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  mpfr_prec_t saved_;
};

Real abs(const Real& a);
Real sqrt(const Real& a);
Real exp(const Real& a);
Real log(const Real& a);
Real sin(const Real& a);
Real cos(const Real& a);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& a, long n);
Real pow10(long n);  // 10^n at working precision
Real pi();
Real floor(const Real& a);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

// Precision/tolerance bundle threaded through every numerical operation.
// Tolerances are stored as powers of ten so they stay representable at any
// working precision.
struct PrecisionContext {
  int decimal_digits = 50;
  int quad_tol_digits = 40;   // quad_tolerance = 10^-quad_tol_digits
  int root_tol_digits = 40;   // root_tolerance = 10^-root_tol_digits
  std::uint64_t seed = 0;     // initial root placement seed

  explicit PrecisionContext(int digits = 50)
      : decimal_digits(digits),
        quad_tol_digits(digits - 10),
        root_tol_digits(digits - 10) {
    if (digits < 30)
      throw std::invalid_argument("PrecisionContext: need at least 30 digits");
    if (quad_tol_digits < 1 || root_tol_digits < 1)
      throw std::invalid_argument("PrecisionContext: tolerances must be positive");
  }

  Real quad_tolerance() const { return pow10(-quad_tol_digits); }
  Real root_tolerance() const { return pow10(-root_tol_digits); }
  PrecisionContext escalated(int factor = 2) const {
    PrecisionContext c(decimal_digits * factor);
    c.seed = seed;
    return c;
  }
};

// Default digits for a moment-pipeline run of degree n with slope bound k
// and endpoint separation diam. Calibrated empirically; the moment chain
// loses digits geometrically in n.
int default_digits(int n, double slope_bound, double diam);

}  // namespace scurve

#endif  // SCURVE_REAL_HPP
