#include "algx/ratpoly.hpp"

#include <sstream>
#include <tuple>

#include "algx/errors.hpp"

namespace algx {

RatPoly RatPoly::monomial(mpq_class a, int k) {
  std::vector<mpq_class> c(k + 1, mpq_class(0));
  c[k] = std::move(a);
  return RatPoly(std::move(c));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-() const {
  std::vector<mpq_class> c(c_);
  for (auto& x : c) x = -x;
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const mpq_class& k) const {
  if (k == 0) return RatPoly();
  std::vector<mpq_class> c(c_);
  for (auto& x : c) x *= k;
  return RatPoly(std::move(c));
}

RatPoly RatPoly::derivative() const {
  if (degree() < 1) return RatPoly();
  std::vector<mpq_class> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
  return RatPoly(std::move(c));
}

mpq_class RatPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CBall RatPoly::eval_ball(const CBall& z) const {
  prec_t p = z.prec();
  CBall acc = CBall::exact(0, 0, p);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + CBall::exact(*it, 0, p);
  return acc;
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return RatPoly();
  return *this * (1 / lc());
}

std::pair<RatPoly, RatPoly> RatPoly::divrem(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw domain_error("divrem: division by zero polynomial");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<mpq_class> rem(a.c_);
  std::vector<mpq_class> quo(a.degree() - b.degree() + 1, mpq_class(0));
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    mpq_class f = rem[i] / b.lc();
    if (f == 0) continue;
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divrem(x, y).second;
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

std::tuple<RatPoly, RatPoly, RatPoly> RatPoly::xgcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0 = RatPoly::constant(1), s1;
  RatPoly t0, t1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = r1; r1 = r;
    RatPoly s = s0 - q * s1; s0 = s1; s1 = s;
    RatPoly t = t0 - q * t1; t0 = t1; t1 = t;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  mpq_class inv = 1 / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::pair<IntPoly, mpz_class> RatPoly::clear_denominators() const {
  mpz_class l = 1;
  for (const auto& q : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<mpz_class> c;
  c.reserve(c_.size());
  for (const auto& q : c_) {
    mpq_class s = q * l;
    c.push_back(s.get_num());
  }
  return {IntPoly(std::move(c)), l};
}

std::string RatPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& a = (*this)[i];
    if (a == 0) continue;
    mpq_class v = abs(a);
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (v != 1 || i == 0) os << v.get_str();
    if (i > 0) {
      if (v != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RatPoly compose_mod(const RatPoly& g, const RatPoly& h, const IntPoly& f) {
  if (f.degree() < 1) throw domain_error("compose_mod: modulus must be nonconstant");
  RatPoly fq(f);
  RatPoly hr = h.mod(fq);
  RatPoly acc;
  for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it)
    acc = (acc * hr + RatPoly::constant(*it)).mod(fq);
  return acc;
}

RatPoly invert_mod(const RatPoly& a, const IntPoly& f) {
  RatPoly fq(f);
  auto [g, u, v] = RatPoly::xgcd(a.mod(fq), fq);
  if (g.degree() != 0) throw domain_error("invert_mod: element not invertible modulo f");
  return u.mod(fq);
}

}  // namespace algx
