#include "doctest.h"

#include "algx/errors.hpp"
#include "algx/lll.hpp"

#include <random>

using namespace algx;

namespace {

// verify size reduction and the Lovasz condition from scratch
void check_reduced(const ZMat& b, const mpq_class& delta) {
  size_t n = b.size();
  std::vector<std::vector<mpq_class>> bstar(n);
  std::vector<mpq_class> B(n);
  QMat mu(n, std::vector<mpq_class>(n, mpq_class(0)));
  for (size_t i = 0; i < n; ++i) {
    std::vector<mpq_class> v(b[i].size());
    for (size_t k = 0; k < v.size(); ++k) v[k] = b[i][k];
    for (size_t j = 0; j < i; ++j) {
      mpq_class d(0);
      for (size_t k = 0; k < v.size(); ++k) d += mpq_class(b[i][k]) * bstar[j][k];
      mu[i][j] = d / B[j];
      for (size_t k = 0; k < v.size(); ++k) v[k] -= mu[i][j] * bstar[j][k];
    }
    B[i] = 0;
    for (const auto& x : v) B[i] += x * x;
    bstar[i] = std::move(v);
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j)
      CHECK(abs(mu[i][j]) <= mpq_class(1, 2));
  for (size_t k = 1; k < n; ++k)
    CHECK(B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]);
}

}  // namespace

TEST_CASE("two dimensional examples") {
  ZMat b = {{1, 0}, {4, 1}};
  lll_reduce(b);
  check_reduced(b, mpq_class(3, 4));
  CHECK(norm_sqr(b[0]) == 1);
  CHECK(norm_sqr(b[1]) == 1);

  ZMat c = {{201, 37}, {1648, 297}};
  lll_reduce(c);
  check_reduced(c, mpq_class(3, 4));
  // determinant preserved up to sign
  mpz_class det = c[0][0] * c[1][1] - c[0][1] * c[1][0];
  CHECK(abs(det) == abs(mpz_class(201) * 297 - mpz_class(37) * 1648));
}

TEST_CASE("three dimensional example") {
  ZMat b = {{1, 1, 1}, {-1, 0, 2}, {3, 5, 6}};
  ZMat orig = b;
  lll_reduce(b);
  check_reduced(b, mpq_class(3, 4));
  CHECK(det_bareiss(b) * det_bareiss(b) == det_bareiss(orig) * det_bareiss(orig));
  // every original row is an integer combination of the reduced rows
  for (const auto& row : orig) {
    QMat m(b[0].size(), std::vector<mpq_class>(b.size()));
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = 0; j < b[0].size(); ++j) m[j][i] = b[i][j];
    std::vector<mpq_class> rhs(row.size());
    for (size_t j = 0; j < row.size(); ++j) rhs[j] = row[j];
    auto x = solve_q(m, rhs);
    for (const auto& q : x) CHECK(q.get_den() == 1);
  }
}

TEST_CASE("randomized invariants") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int trial = 0; trial < 10; ++trial) {
    size_t n = 4;
    ZMat b(n, std::vector<mpz_class>(n));
    do {
      for (auto& row : b)
        for (auto& x : row) x = d(rng);
    } while (det_bareiss(b) == 0);
    ZMat orig = b;
    lll_reduce(b);
    check_reduced(b, mpq_class(3, 4));
    CHECK(abs(det_bareiss(b)) == abs(det_bareiss(orig)));
  }
}

TEST_CASE("dependent rows rejected") {
  ZMat b = {{1, 2}, {2, 4}};
  CHECK_THROWS_AS(lll_reduce(b), domain_error);
}
