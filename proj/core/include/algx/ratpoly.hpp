#ifndef ALGX_RATPOLY_HPP
#define ALGX_RATPOLY_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "algx/intpoly.hpp"

namespace algx {

// Univariate polynomial over Q.  mpq_class keeps every coefficient in
// lowest terms with a positive denominator, which makes equality
// structural.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { normalize(); }
  explicit RatPoly(const IntPoly& p) {
    c_.reserve(p.degree() + 1);
    for (const auto& a : p.coeffs()) c_.emplace_back(a);
  }

  static RatPoly zero() { return RatPoly(); }
  static RatPoly constant(mpq_class a) { return RatPoly(std::vector<mpq_class>{std::move(a)}); }
  static RatPoly x() { return RatPoly(std::vector<mpq_class>{0, 1}); }
  static RatPoly monomial(mpq_class a, int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& operator[](size_t i) const {
    static const mpq_class kZero = 0;
    return i < c_.size() ? c_[i] : kZero;
  }
  const mpq_class& lc() const { return c_.back(); }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  RatPoly operator-() const;
  RatPoly operator*(const mpq_class& k) const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }
  bool operator!=(const RatPoly& o) const { return c_ != o.c_; }

  RatPoly derivative() const;
  mpq_class eval(const mpq_class& x) const;
  CBall eval_ball(const CBall& z) const;
  RatPoly monic() const;  // divide by leading coefficient

  // exact Euclidean division, deg(rem) < deg(b); domain error if b == 0
  static std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);
  // monic gcd
  static RatPoly gcd(const RatPoly& a, const RatPoly& b);
  // (g, u, v) with u*a + v*b = g, g monic gcd
  static std::tuple<RatPoly, RatPoly, RatPoly> xgcd(const RatPoly& a, const RatPoly& b);

  RatPoly mod(const RatPoly& f) const { return divrem(*this, f).second; }
  // smallest D > 0 with D*p integral, plus the integer polynomial D*p
  std::pair<IntPoly, mpz_class> clear_denominators() const;

  std::string str(const std::string& var = "X") const;

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<mpq_class> c_;
};

// g(h(X)) reduced modulo f, exact.  f must be nonconstant.
RatPoly compose_mod(const RatPoly& g, const RatPoly& h, const IntPoly& f);

// inverse of a modulo f in Q[X]/(f); domain error if gcd(a, f) != 1
RatPoly invert_mod(const RatPoly& a, const IntPoly& f);

}  // namespace algx

#endif
