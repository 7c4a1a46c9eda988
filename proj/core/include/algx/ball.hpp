#ifndef ALGX_BALL_HPP
#define ALGX_BALL_HPP

#include <string>

#include "algx/real.hpp"

namespace algx {

// Rigorous real interval [lo, hi].  All operations use directed rounding,
// so the exact mathematical result is always contained in the output.
class RIv {
 public:
  RIv() = default;
  RIv(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

  static RIv exact(const mpq_class& q, prec_t prec = 64);
  static RIv of_int(long n) { return {Real::of(n, 64), Real::of(n, 64)}; }
  static RIv point(const Real& x) { return {x, x}; }
  static RIv hull(const RIv& a, const RIv& b) { return {min(a.lo_, b.lo_), max(a.hi_, b.hi_)}; }

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  Real mid() const { return (lo_ + hi_) * Real(0.5, lo_.prec()); }
  Real width() const;  // upper bound on hi-lo

  bool contains_zero() const { return lo_.sgn() <= 0 && hi_.sgn() >= 0; }
  bool contains(const mpq_class& q) const;
  bool strictly_positive() const { return lo_.sgn() > 0; }
  bool strictly_negative() const { return hi_.sgn() < 0; }
  // certified comparison: true means a < b (resp. a <= b) mathematically
  static bool certainly_less(const RIv& a, const RIv& b) { return a.hi_ < b.lo_; }
  static bool certainly_leq(const RIv& a, const RIv& b) { return a.hi_ <= b.lo_; }

  friend RIv operator+(const RIv& a, const RIv& b);
  friend RIv operator-(const RIv& a, const RIv& b);
  friend RIv operator*(const RIv& a, const RIv& b);
  friend RIv operator/(const RIv& a, const RIv& b);  // b must not contain 0
  RIv operator-() const { return {-hi_, -lo_}; }

  friend RIv abs(const RIv& a);
  friend RIv sqrt(const RIv& a);   // a.lo >= 0 required
  friend RIv log(const RIv& a);    // a.lo > 0 required
  RIv max1() const;                // max(1, x), elementwise rigorous

  std::string str(int digits = 20) const;

 private:
  Real lo_, hi_;
};

// Complex ball: certified enclosure { z : |z - mid| <= rad }.
class CBall {
 public:
  CBall() : mid_(Real(), Real()) {}
  CBall(Complex mid, Real rad) : mid_(std::move(mid)), rad_(std::move(rad)) {}

  static CBall exact(const mpq_class& re, const mpq_class& im, prec_t prec);
  static CBall exact_int(const mpz_class& re, prec_t prec) {
    return exact(mpq_class(re), mpq_class(0), prec);
  }

  const Complex& mid() const { return mid_; }
  const Real& rad() const { return rad_; }
  prec_t prec() const { return mid_.prec(); }

  CBall conj() const { return {mid_.conj(), rad_}; }
  CBall operator-() const { return {-mid_, rad_}; }
  friend CBall operator+(const CBall& a, const CBall& b);
  friend CBall operator-(const CBall& a, const CBall& b);
  friend CBall operator*(const CBall& a, const CBall& b);
  CBall pow(unsigned long e) const;

  RIv abs() const;       // certified |z|
  RIv re_iv() const;     // certified Re z
  RIv im_iv() const;     // certified Im z
  bool contains_zero() const;
  bool contains(const CBall& other) const;  // other ball fully inside this one
  // true if the two enclosures are certainly disjoint
  static bool disjoint(const CBall& a, const CBall& b);

  std::string str(int digits = 20) const;

 private:
  Complex mid_;
  Real rad_;
};

}  // namespace algx

#endif
