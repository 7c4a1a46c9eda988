#include "algx/lll.hpp"

#include "algx/errors.hpp"

namespace algx {

namespace {

mpq_class dot_zz(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  mpz_class s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return mpq_class(s);
}

// nearest integer to q, ties toward +infinity
mpz_class round_q(const mpq_class& q) {
  mpq_class t = q + mpq_class(1, 2);
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
  return r;
}

struct Gso {
  QMat mu;                  // mu[i][j], j < i
  std::vector<mpq_class> B;  // squared norms of the orthogonal vectors

  void compute(const ZMat& b) {
    size_t n = b.size();
    mu.assign(n, std::vector<mpq_class>(n, mpq_class(0)));
    B.assign(n, mpq_class(0));
    // bstar_i = b_i - sum_{j<i} mu_ij bstar_j; track dots with b rows
    std::vector<std::vector<mpq_class>> bstar(n);
    for (size_t i = 0; i < n; ++i) {
      std::vector<mpq_class> v(b[i].size());
      for (size_t k = 0; k < v.size(); ++k) v[k] = b[i][k];
      for (size_t j = 0; j < i; ++j) {
        mpq_class d(0);
        for (size_t k = 0; k < v.size(); ++k) d += mpq_class(b[i][k]) * bstar[j][k];
        mu[i][j] = d / B[j];
        for (size_t k = 0; k < v.size(); ++k) v[k] -= mu[i][j] * bstar[j][k];
      }
      mpq_class nb(0);
      for (const auto& x : v) nb += x * x;
      if (nb == 0) throw domain_error("lll_reduce: rows are linearly dependent");
      B[i] = nb;
      bstar[i] = std::move(v);
    }
  }
};

}  // namespace

mpz_class norm_sqr(const std::vector<mpz_class>& v) {
  mpz_class s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

void lll_reduce(ZMat& basis, const mpq_class& delta) {
  const size_t n = basis.size();
  if (n <= 1) return;
  Gso g;
  g.compute(basis);

  auto size_reduce = [&](size_t k, size_t j) {
    mpz_class r = round_q(g.mu[k][j]);
    if (r == 0) return;
    for (size_t t = 0; t < basis[k].size(); ++t) basis[k][t] -= r * basis[j][t];
    for (size_t t = 0; t < j; ++t) g.mu[k][t] -= mpq_class(r) * g.mu[j][t];
    g.mu[k][j] -= mpq_class(r);
  };

  size_t k = 1;
  while (k < n) {
    for (size_t j = k; j-- > 0;) size_reduce(k, j);
    mpq_class lhs = g.B[k];
    mpq_class rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.B[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      std::swap(basis[k], basis[k - 1]);
      // incremental Gram-Schmidt update for the swap (Cohen, Alg. 2.6.3)
      mpq_class mu_ = g.mu[k][k - 1];
      mpq_class Bnew = g.B[k] + mu_ * mu_ * g.B[k - 1];
      g.mu[k][k - 1] = mu_ * g.B[k - 1] / Bnew;
      g.B[k] = g.B[k - 1] * g.B[k] / Bnew;
      g.B[k - 1] = Bnew;
      for (size_t j = 0; j + 1 < k; ++j) std::swap(g.mu[k - 1][j], g.mu[k][j]);
      for (size_t i = k + 1; i < n; ++i) {
        mpq_class t = g.mu[i][k];
        g.mu[i][k] = g.mu[i][k - 1] - mu_ * t;
        g.mu[i][k - 1] = t + g.mu[k][k - 1] * g.mu[i][k];
      }
      k = (k > 1) ? k - 1 : 1;
    }
  }
}

}  // namespace algx
