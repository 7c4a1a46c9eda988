#include "algx/intpoly.hpp"

#include <sstream>

#include "algx/errors.hpp"
#include "algx/linalg.hpp"

namespace algx {

IntPoly IntPoly::monomial(mpz_class a, int k) {
  std::vector<mpz_class> c(k + 1, mpz_class(0));
  c[k] = std::move(a);
  return IntPoly(std::move(c));
}

mpz_class IntPoly::naive_height() const {
  mpz_class h = 0;
  for (const auto& a : c_) {
    mpz_class v = abs(a);
    if (v > h) h = v;
  }
  return h;
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& a : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  mpz_class g = content();
  std::vector<mpz_class> c(c_);
  for (auto& a : c) a /= g;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
  if (degree() < 1) return IntPoly();
  std::vector<mpz_class> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
  return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
  std::vector<mpz_class> c(c_);
  for (auto& x : c) x = -x;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const mpz_class& k) const {
  if (k == 0) return IntPoly();
  std::vector<mpz_class> c(c_);
  for (auto& x : c) x *= k;
  return IntPoly(std::move(c));
}

mpq_class IntPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpz_class IntPoly::eval_z(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CBall IntPoly::eval_ball(const CBall& z) const {
  prec_t p = z.prec();
  CBall acc = CBall::exact(0, 0, p);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * z + CBall::exact(mpq_class(*it), 0, p);
  return acc;
}

IntPoly IntPoly::reversed() const {
  std::vector<mpz_class> c(c_.rbegin(), c_.rend());
  return IntPoly(std::move(c));
}

IntPoly IntPoly::dilate(const mpz_class& k) const {
  std::vector<mpz_class> c(c_);
  mpz_class pw = 1;
  for (auto& a : c) {
    a *= pw;
    pw *= k;
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::taylor_shift(const mpz_class& k) const {
  IntPoly xk = IntPoly{0, 1} + IntPoly::constant(k);  // X + k
  IntPoly result;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    result = result * xk + IntPoly::constant(*it);
  return result;
}

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& a = (*this)[i];
    if (a == 0) continue;
    mpz_class v = abs(a);
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

mpz_class resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) throw domain_error("resultant: zero input polynomial");
  int dp = p.degree(), dq = q.degree();
  if (dp == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), p.lc().get_mpz_t(), dq);
    return r;
  }
  if (dq == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), q.lc().get_mpz_t(), dp);
    return r;
  }
  int n = dp + dq;
  ZMat m(n, std::vector<mpz_class>(n, mpz_class(0)));
  for (int i = 0; i < dq; ++i)
    for (int j = 0; j <= dp; ++j) m[i][i + j] = p[dp - j];
  for (int i = 0; i < dp; ++i)
    for (int j = 0; j <= dq; ++j) m[dq + i][i + j] = q[dq - j];
  return det_bareiss(std::move(m));
}

mpz_class discriminant(const IntPoly& p) {
  if (p.degree() < 1) throw domain_error("discriminant: degree must be >= 1");
  if (p.degree() == 1) return 1;
  mpz_class r = resultant(p, p.derivative());
  mpz_class d;
  mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), p.lc().get_mpz_t());
  int dd = p.degree();
  if (((dd * (dd - 1)) / 2) % 2 == 1) d = -d;
  return d;
}

}  // namespace algx
