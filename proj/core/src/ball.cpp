#include "algx/ball.hpp"

#include "algx/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace algx {

namespace {

prec_t join(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }

Real dir2(int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t),
          const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r(join(a, b));
  op(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}

Real add_d(const Real& a, const Real& b) { return dir2(mpfr_add, a, b, MPFR_RNDD); }
Real add_u(const Real& a, const Real& b) { return dir2(mpfr_add, a, b, MPFR_RNDU); }
Real sub_d(const Real& a, const Real& b) { return dir2(mpfr_sub, a, b, MPFR_RNDD); }
Real sub_u(const Real& a, const Real& b) { return dir2(mpfr_sub, a, b, MPFR_RNDU); }
Real mul_d(const Real& a, const Real& b) { return dir2(mpfr_mul, a, b, MPFR_RNDD); }
Real mul_u(const Real& a, const Real& b) { return dir2(mpfr_mul, a, b, MPFR_RNDU); }
Real div_d(const Real& a, const Real& b) { return dir2(mpfr_div, a, b, MPFR_RNDD); }
Real div_u(const Real& a, const Real& b) { return dir2(mpfr_div, a, b, MPFR_RNDU); }

// upper bound on |z| including nothing but the midpoint
Real mag_u(const Complex& z) {
  Real r(z.prec());
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDU);
  return r;
}
Real mag_d(const Complex& z) {
  Real r(z.prec());
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDD);
  return r;
}

// x * 2^e rounded up, cheap scale for rounding-slop terms
Real ldexp_u(const Real& x, long e) {
  Real r(x.prec());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDU);
  return r;
}

}  // namespace

RIv RIv::exact(const mpq_class& q, prec_t prec) {
  Real lo(prec), hi(prec);
  mpfr_set_q(lo.raw(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.raw(), q.get_mpq_t(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

Real RIv::width() const { return sub_u(hi_, lo_); }

bool RIv::contains(const mpq_class& q) const {
  // compare exactly against the dyadic endpoints
  return lo_.to_mpq() <= q && q <= hi_.to_mpq();
}

RIv operator+(const RIv& a, const RIv& b) { return {add_d(a.lo_, b.lo_), add_u(a.hi_, b.hi_)}; }
RIv operator-(const RIv& a, const RIv& b) { return {sub_d(a.lo_, b.hi_), sub_u(a.hi_, b.lo_)}; }

RIv operator*(const RIv& a, const RIv& b) {
  Real lo = mul_d(a.lo_, b.lo_), hi = mul_u(a.lo_, b.lo_);
  auto fold = [&](const Real& x, const Real& y) {
    lo = min(lo, mul_d(x, y));
    hi = max(hi, mul_u(x, y));
  };
  fold(a.lo_, b.hi_);
  fold(a.hi_, b.lo_);
  fold(a.hi_, b.hi_);
  return {lo, hi};
}

RIv operator/(const RIv& a, const RIv& b) {
  if (b.contains_zero()) throw domain_error("RIv division by interval containing zero");
  Real lo = div_d(a.lo_, b.lo_), hi = div_u(a.lo_, b.lo_);
  auto fold = [&](const Real& x, const Real& y) {
    lo = min(lo, div_d(x, y));
    hi = max(hi, div_u(x, y));
  };
  fold(a.lo_, b.hi_);
  fold(a.hi_, b.lo_);
  fold(a.hi_, b.hi_);
  return {lo, hi};
}

RIv abs(const RIv& a) {
  if (a.lo_.sgn() >= 0) return a;
  if (a.hi_.sgn() <= 0) return -a;
  return {Real(0.0, a.lo_.prec()), max(-a.lo_, a.hi_)};
}

RIv sqrt(const RIv& a) {
  if (a.lo_.sgn() < 0) throw domain_error("RIv sqrt of interval with negative part");
  Real lo(a.lo_.prec()), hi(a.hi_.prec());
  mpfr_sqrt(lo.raw(), a.lo_.raw(), MPFR_RNDD);
  mpfr_sqrt(hi.raw(), a.hi_.raw(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

RIv log(const RIv& a) {
  if (a.lo_.sgn() <= 0) throw domain_error("RIv log requires strictly positive interval");
  Real lo(a.lo_.prec()), hi(a.hi_.prec());
  mpfr_log(lo.raw(), a.lo_.raw(), MPFR_RNDD);
  mpfr_log(hi.raw(), a.hi_.raw(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

RIv RIv::max1() const {
  Real one(1.0, lo_.prec());
  return {max(lo_, one), max(hi_, one)};
}

std::string RIv::str(int digits) const {
  return "[" + lo_.str(digits) + ", " + hi_.str(digits) + "]";
}

CBall CBall::exact(const mpq_class& re, const mpq_class& im, prec_t prec) {
  Complex mid{Real(prec), Real(prec)};
  mpfr_set_q(mid.re.raw(), re.get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(mid.im.raw(), im.get_mpq_t(), MPFR_RNDN);
  // rounding of each component is within half an ulp
  Real rad = ldexp_u(mag_u(mid), 1 - static_cast<long>(prec));
  return {std::move(mid), std::move(rad)};
}

CBall operator+(const CBall& a, const CBall& b) {
  Complex mid = a.mid_ + b.mid_;
  long p = static_cast<long>(mid.prec());
  Real rad = add_u(add_u(a.rad_, b.rad_), ldexp_u(mag_u(mid), 1 - p));
  return {std::move(mid), std::move(rad)};
}

CBall operator-(const CBall& a, const CBall& b) {
  Complex mid = a.mid_ - b.mid_;
  long p = static_cast<long>(mid.prec());
  Real rad = add_u(add_u(a.rad_, b.rad_), ldexp_u(mag_u(mid), 1 - p));
  return {std::move(mid), std::move(rad)};
}

CBall operator*(const CBall& a, const CBall& b) {
  Complex mid = a.mid_ * b.mid_;
  long p = static_cast<long>(mid.prec());
  Real ma = mag_u(a.mid_), mb = mag_u(b.mid_);
  Real rad = add_u(add_u(mul_u(ma, b.rad_), mul_u(mb, a.rad_)), mul_u(a.rad_, b.rad_));
  rad = add_u(rad, ldexp_u(mul_u(ma, mb), 3 - p));
  return {std::move(mid), std::move(rad)};
}

CBall CBall::pow(unsigned long e) const {
  CBall acc = CBall::exact(1, 0, prec());
  CBall base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = (e >>= 1) ? base * base : base;
  }
  return acc;
}

RIv CBall::abs() const {
  Real lo = sub_d(mag_d(mid_), rad_);
  if (lo.sgn() < 0) lo = Real(0.0, 64);
  Real hi = add_u(mag_u(mid_), rad_);
  return {std::move(lo), std::move(hi)};
}

RIv CBall::re_iv() const { return {sub_d(mid_.re, rad_), add_u(mid_.re, rad_)}; }
RIv CBall::im_iv() const { return {sub_d(mid_.im, rad_), add_u(mid_.im, rad_)}; }

bool CBall::contains_zero() const { return !(mag_d(mid_) > rad_); }

bool CBall::contains(const CBall& other) const {
  // |mid - other.mid| + other.rad <= rad, evaluated upward
  Real d = add_u(mag_u(mid_ - other.mid_),
                 ldexp_u(max(mag_u(mid_), mag_u(other.mid_)), 2 - static_cast<long>(prec())));
  return add_u(d, other.rad_) <= rad_;
}

bool CBall::disjoint(const CBall& a, const CBall& b) {
  Complex diff = a.mid_ - b.mid_;
  Real slop = ldexp_u(max(mag_u(a.mid_), mag_u(b.mid_)), 2 - static_cast<long>(diff.prec()));
  Real lo_dist = sub_d(sub_d(mag_d(diff), slop), add_u(a.rad_, b.rad_));
  return lo_dist.sgn() > 0;
}

std::string CBall::str(int digits) const {
  return "(" + mid_.re.str(digits) + " + " + mid_.im.str(digits) + "i +/- " + rad_.str(6) + ")";
}

}  // namespace algx
