#ifndef ALGX_REAL_HPP
#define ALGX_REAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace algx {

using prec_t = mpfr_prec_t;

// Arbitrary-precision floating-point scalar.  Every value carries its own
// precision; binary operations round to nearest at the larger of the two
// operand precisions.  Rigorous (directed-rounding) bounds live in the
// interval/ball types, not here.
class Real {
 public:
  Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
  explicit Real(prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(double d, prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_d(v_, d, MPFR_RNDN); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Real() { mpfr_clear(v_); }

  static Real of(const mpz_class& z, prec_t prec) {
    Real r(prec); mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN); return r;
  }
  static Real of(const mpq_class& q, prec_t prec) {
    Real r(prec); mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN); return r;
  }
  static Real of(long n, prec_t prec) {
    Real r(prec); mpfr_set_si(r.v_, n, MPFR_RNDN); return r;
  }
  // 2^e, exact.
  static Real pow2(long e, prec_t prec = 64) {
    Real r(prec); mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN); return r;
  }

  prec_t prec() const { return mpfr_get_prec(v_); }
  Real with_prec(prec_t p) const {
    Real r(p); mpfr_set(r.v_, v_, MPFR_RNDN); return r;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  int sgn() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator!=(const Real& a, const Real& b) { return !mpfr_equal_p(a.v_, b.v_); }
  bool operator<(double d) const { return mpfr_cmp_d(v_, d) < 0; }
  bool operator>(double d) const { return mpfr_cmp_d(v_, d) > 0; }

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real operator-() const;
  Real& operator+=(const Real& o) { *this = *this + o; return *this; }
  Real& operator-=(const Real& o) { *this = *this - o; return *this; }
  Real& operator*=(const Real& o) { *this = *this * o; return *this; }
  Real& operator/=(const Real& o) { *this = *this / o; return *this; }

  friend Real abs(const Real& a);
  friend Real sqrt(const Real& a);
  friend Real log(const Real& a);
  friend Real exp(const Real& a);
  friend Real hypot(const Real& a, const Real& b);
  friend Real min(const Real& a, const Real& b);
  friend Real max(const Real& a, const Real& b);

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Exact rational value; requires a finite number.
  mpq_class to_mpq() const;
  // Decimal rounded to `digits` significant digits.
  std::string str(int digits = 20) const;
  // Exact terminating decimal expansion of the stored dyadic value.
  std::string exact_decimal() const;

 private:
  mpfr_t v_;
};

// Complex number over Real, rectangular form.
struct Complex {
  Real re, im;

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(prec_t prec) : re(prec), im(prec) {}

  prec_t prec() const { return std::max(re.prec(), im.prec()); }
  Complex with_prec(prec_t p) const { return {re.with_prec(p), im.with_prec(p)}; }
  Complex conj() const { return {re, -im}; }
  Real norm_sqr() const { return re * re + im * im; }
  Real abs() const { return hypot(re, im); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.norm_sqr();
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Complex operator-() const { return {-re, -im}; }
};

}  // namespace algx

#endif
