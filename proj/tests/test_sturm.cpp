#include "doctest.h"

#include "algx/intpoly.hpp"
#include "algx/sturm.hpp"

using namespace algx;

namespace {

IntPoly P(std::vector<long> c) {
  std::vector<mpz_class> z(c.begin(), c.end());
  return IntPoly(std::move(z));
}

}  // namespace

TEST_CASE("global real root counts") {
  CHECK(sturm_count(P({-2, 0, 1})) == 2);           // x^2 - 2
  CHECK(sturm_count(P({1, 0, 1})) == 0);            // x^2 + 1
  CHECK(sturm_count(P({0, 1})) == 1);               // x
  CHECK(sturm_count(P({-6, 11, -6, 1})) == 3);      // (x-1)(x-2)(x-3)
  // the two totally complex sextics have no real roots
  CHECK(sturm_count(P({1, -3, 5, -5, 5, -3, 1})) == 0);
  CHECK(sturm_count(P({1, -1, 0, 2, 0, -1, 1})) == 0);
}

TEST_CASE("counts on intervals, (lo, hi] convention") {
  auto p = P({-2, 0, 1});  // roots +-sqrt(2)
  CHECK(sturm_count(p, mpq_class(0), mpq_class(2)) == 1);
  CHECK(sturm_count(p, mpq_class(-2), mpq_class(0)) == 1);
  CHECK(sturm_count(p, mpq_class(1), mpq_class(2)) == 1);
  CHECK(sturm_count(p, mpq_class(-2), {}) == 2);
  CHECK(sturm_count(p, {}, mpq_class(0)) == 1);

  auto q = P({-6, 11, -6, 1});  // roots 1, 2, 3
  // hi is included, lo is excluded
  CHECK(sturm_count(q, mpq_class(1), mpq_class(3)) == 2);
  CHECK(sturm_count(q, mpq_class(0), mpq_class(1)) == 1);
  CHECK(sturm_count(q, mpq_class(1), mpq_class(1)) == 0);
  CHECK(sturm_count(q, mpq_class(2), mpq_class(2)) == 0);
  CHECK(sturm_count(q, mpq_class(3, 2), mpq_class(5, 2)) == 1);
}

TEST_CASE("multiple roots are counted once") {
  auto dbl = P({-1, 1}) * P({-1, 1}) * P({2, 1});  // (x-1)^2 (x+2)
  CHECK(sturm_count(dbl) == 2);
  CHECK(sturm_count(dbl, mpq_class(0), mpq_class(2)) == 1);
  CHECK(squarefree_part(dbl) == P({-2, 1, 1}));
}

TEST_CASE("squarefree part") {
  auto p = P({-2, 0, 1});
  CHECK(squarefree_part(p) == p);
  // leading sign preserved
  CHECK(squarefree_part(P({2, 0, -1})) == P({2, 0, -1}));
  auto cube = P({-1, 1}) * P({-1, 1}) * P({-1, 1});
  CHECK(squarefree_part(cube) == P({-1, 1}));
}
