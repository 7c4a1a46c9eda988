#ifndef ALGX_STURM_HPP
#define ALGX_STURM_HPP

#include <optional>

#include "algx/intpoly.hpp"

namespace algx {

// p / gcd(p, p'), primitive, leading sign preserved.
IntPoly squarefree_part(const IntPoly& p);

// Exact count of distinct real roots of p in (lo, hi]; an empty optional
// means -infinity (lo) resp. +infinity (hi).  Works on the squarefree part
// internally.
long sturm_count(const IntPoly& p,
                 const std::optional<mpq_class>& lo = std::nullopt,
                 const std::optional<mpq_class>& hi = std::nullopt);

}  // namespace algx

#endif
