#ifndef ALGX_LINALG_HPP
#define ALGX_LINALG_HPP

#include <gmpxx.h>

#include <vector>

namespace algx {

using ZMat = std::vector<std::vector<mpz_class>>;
using QMat = std::vector<std::vector<mpq_class>>;

// Exact determinant, Bareiss fraction-free elimination.
mpz_class det_bareiss(ZMat m);

// Rank of a rational matrix by exact Gaussian elimination.
int rank_q(QMat m);

// Basis of the right kernel { x : m x = 0 }, exact, reduced echelon style.
QMat kernel_q(QMat m);

// Solve m x = b for square nonsingular m; throws domain_error if singular.
std::vector<mpq_class> solve_q(QMat m, std::vector<mpq_class> b);

// Scale a rational vector to a primitive integer vector (gcd 1); the first
// nonzero entry becomes positive.
std::vector<mpz_class> primitive_integer_vector(const std::vector<mpq_class>& v);

}  // namespace algx

#endif
