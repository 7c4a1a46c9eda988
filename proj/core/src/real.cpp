#include "algx/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace algx {

namespace {
prec_t join(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }
}  // namespace

Real operator+(const Real& a, const Real& b) {
  Real r(join(a, b)); mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(join(a, b)); mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(join(a, b)); mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(join(a, b)); mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r;
}
Real Real::operator-() const {
  Real r(prec()); mpfr_neg(r.raw(), v_, MPFR_RNDN); return r;
}
Real abs(const Real& a) { Real r(a.prec()); mpfr_abs(r.raw(), a.raw(), MPFR_RNDN); return r; }
Real sqrt(const Real& a) { Real r(a.prec()); mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN); return r; }
Real log(const Real& a) { Real r(a.prec()); mpfr_log(r.raw(), a.raw(), MPFR_RNDN); return r; }
Real exp(const Real& a) { Real r(a.prec()); mpfr_exp(r.raw(), a.raw(), MPFR_RNDN); return r; }
Real hypot(const Real& a, const Real& b) {
  Real r(join(a, b)); mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r;
}
Real min(const Real& a, const Real& b) {
  Real r(join(a, b)); mpfr_min(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r;
}
Real max(const Real& a, const Real& b) {
  Real r(join(a, b)); mpfr_max(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r;
}

mpq_class Real::to_mpq() const {
  if (!is_finite()) throw std::domain_error("Real::to_mpq: non-finite value");
  if (is_zero()) return mpq_class(0);
  mpf_t f;
  mpf_init2(f, mpfr_get_prec(v_) + 8);
  mpfr_get_f(f, v_, MPFR_RNDN);  // exact: target has enough precision
  mpq_class q;
  mpq_set_f(q.get_mpq_t(), f);
  mpf_clear(f);
  return q;
}

std::string Real::str(int digits) const {
  if (is_nan()) return "nan";
  if (!is_finite()) return sgn() > 0 ? "inf" : "-inf";
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Rg", digits, v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string Real::exact_decimal() const {
  // Internal values are dyadic rationals, so the decimal expansion
  // terminates: num / 2^k = num * 5^k / 10^k.
  mpq_class q = to_mpq();
  if (q == 0) return "0";
  mpz_class num = q.get_num(), den = q.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  // den is a power of two
  unsigned long k = mpz_scan1(den.get_mpz_t(), 0);
  mpz_class five;
  mpz_ui_pow_ui(five.get_mpz_t(), 5, k);
  num *= five;
  std::string digits = num.get_str();
  std::string out;
  if (neg) out += '-';
  if (digits.size() > k) {
    out += digits.substr(0, digits.size() - k);
    if (k > 0) out += "." + digits.substr(digits.size() - k);
  } else {
    out += "0.";
    out.append(k - digits.size(), '0');
    out += digits;
  }
  // trim trailing zeros after the point
  if (out.find('.') != std::string::npos) {
    size_t last = out.find_last_not_of('0');
    if (out[last] == '.') last--;
    out.erase(last + 1);
  }
  return out;
}

}  // namespace algx
