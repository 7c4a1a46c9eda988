#include "algx/linalg.hpp"

#include "algx/errors.hpp"

namespace algx {

mpz_class det_bareiss(ZMat m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

namespace {
// reduce m to row echelon form, returns pivot columns
std::vector<int> echelonize(QMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    mpq_class inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}
}  // namespace

int rank_q(QMat m) { return static_cast<int>(echelonize(m).size()); }

QMat kernel_q(QMat m) {
  if (m.empty()) return {};
  size_t cols = m[0].size();
  std::vector<int> pivots = echelonize(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  QMat basis;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<mpq_class> v(cols, mpq_class(0));
    v[fc] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<mpq_class> solve_q(QMat m, std::vector<mpq_class> b) {
  const size_t n = m.size();
  if (n == 0) return {};
  for (size_t i = 0; i < n; ++i) m[i].push_back(b[i]);
  std::vector<int> pivots = echelonize(m);
  if (pivots.size() != n || (!pivots.empty() && pivots.back() == static_cast<int>(n)))
    throw domain_error("solve_q: singular system");
  std::vector<mpq_class> x(n);
  for (size_t i = 0; i < n; ++i) x[pivots[i]] = m[i][n];
  return x;
}

std::vector<mpz_class> primitive_integer_vector(const std::vector<mpq_class>& v) {
  mpz_class l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(v.size());
  mpz_class g = 0;
  for (const auto& q : v) {
    mpq_class s = q * l;
    out.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g == 0) return out;
  int sign = 0;
  for (auto& z : out) {
    z /= g;
    if (sign == 0 && z != 0) sign = sgn(z);
  }
  if (sign < 0)
    for (auto& z : out) z = -z;
  return out;
}

}  // namespace algx
