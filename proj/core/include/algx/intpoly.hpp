#ifndef ALGX_INTPOLY_HPP
#define ALGX_INTPOLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "algx/ball.hpp"

namespace algx {

// Univariate polynomial with arbitrary-precision integer coefficients.
// Coefficients are stored constant term first; the representation is
// normalized so the leading coefficient is nonzero unless the polynomial
// is zero.  Values are immutable in spirit: all operations return new
// polynomials.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }
  IntPoly(std::initializer_list<long> coeffs) {
    for (long x : coeffs) c_.emplace_back(x);
    normalize();
  }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(mpz_class a) { return IntPoly(std::vector<mpz_class>{std::move(a)}); }
  static IntPoly x() { return IntPoly{0, 1}; }
  // a*X^k
  static IntPoly monomial(mpz_class a, int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  // coefficient of X^i, zero beyond the degree
  const mpz_class& operator[](size_t i) const {
    static const mpz_class kZero = 0;
    return i < c_.size() ? c_[i] : kZero;
  }
  const mpz_class& lc() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  mpz_class naive_height() const;
  mpz_class content() const;       // nonnegative gcd of coefficients
  IntPoly primitive_part() const;  // divide by content, sign preserved
  IntPoly derivative() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  IntPoly operator*(const mpz_class& k) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  mpq_class eval(const mpq_class& x) const;
  mpz_class eval_z(const mpz_class& x) const;
  CBall eval_ball(const CBall& z) const;
  // upper bound on |p'| over the closed disk |z - ball.mid| <= ball.rad
  // (used for certified evaluation error propagation elsewhere)

  // p(X) -> X^deg * p(1/X)
  IntPoly reversed() const;
  // p(k*X), exact
  IntPoly dilate(const mpz_class& k) const;
  // p(X + k)
  IntPoly taylor_shift(const mpz_class& k) const;

  std::string str(const std::string& var = "X") const;

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<mpz_class> c_;
};

// Sylvester-determinant resultant: Res(p, q) = lc(p)^deg(q) * prod q(root_i(p)).
// Domain error on zero input.
mpz_class resultant(const IntPoly& p, const IntPoly& q);
mpz_class discriminant(const IntPoly& p);

}  // namespace algx

#endif
