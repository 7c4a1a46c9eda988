#ifndef ALGX_LLL_HPP
#define ALGX_LLL_HPP

#include <gmpxx.h>

#include <vector>

#include "algx/linalg.hpp"

namespace algx {

// In-place LLL reduction of the lattice spanned by the rows of `basis`
// (linearly independent integer vectors), exact rational Gram-Schmidt,
// reduction parameter delta (1/4 < delta < 1).
void lll_reduce(ZMat& basis, const mpq_class& delta = mpq_class(3, 4));

// Squared euclidean norm of an integer vector.
mpz_class norm_sqr(const std::vector<mpz_class>& v);

}  // namespace algx

#endif
