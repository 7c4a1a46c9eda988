#include "doctest.h"

#include "algx/errors.hpp"
#include "algx/intpoly.hpp"
#include "algx/linalg.hpp"
#include "algx/ratpoly.hpp"

#include <random>

using namespace algx;

namespace {

IntPoly P(std::vector<long> c) {
  std::vector<mpz_class> z(c.begin(), c.end());
  return IntPoly(std::move(z));
}

// The paper-central sextics used throughout the suite.
IntPoly sextic_f() { return P({1, -3, 5, -5, 5, -3, 1}); }
IntPoly sextic_g() { return P({1, -1, 0, 2, 0, -1, 1}); }

IntPoly random_poly(std::mt19937_64& rng, int deg, int bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<mpz_class> c(deg + 1);
  for (auto& x : c) x = d(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("construction and normalization") {
  CHECK(IntPoly().degree() == -1);
  CHECK(P({0, 0, 0}).degree() == -1);
  CHECK(P({5}).degree() == 0);
  CHECK(P({0, 0, 7}).degree() == 2);
  CHECK(IntPoly::x().degree() == 1);
  CHECK(IntPoly::monomial(3, 4).degree() == 4);
  CHECK(P({1, 2})[5] == 0);
  CHECK(sextic_f().degree() == 6);
  CHECK(sextic_f().is_monic());
  CHECK(sextic_f().naive_height() == 5);
  CHECK(sextic_g().naive_height() == 2);
}

TEST_CASE("ring operations") {
  auto a = P({1, 2, 3});
  auto b = P({-1, 1});
  CHECK(a + b == P({0, 3, 3}));
  CHECK(a - a == IntPoly());
  CHECK(a * b == P({-1, -1, -1, 3}));
  CHECK((a * b).degree() == a.degree() + b.degree());
  CHECK(a * IntPoly() == IntPoly());
  CHECK(a * mpz_class(2) == P({2, 4, 6}));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    auto p = random_poly(rng, 5, 9);
    auto q = random_poly(rng, 4, 9);
    auto r = random_poly(rng, 3, 9);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
  }
}

TEST_CASE("content and primitive part") {
  CHECK(P({6, -9, 12}).content() == 3);
  CHECK(P({6, -9, 12}).primitive_part() == P({2, -3, 4}));
  CHECK(P({-4, -8}).content() == 4);
  // primitive_part preserves the leading sign
  CHECK(P({-4, -8}).primitive_part() == P({-1, -2}));
  CHECK(IntPoly().content() == 0);
}

TEST_CASE("derivative and evaluation") {
  auto p = P({5, -3, 0, 2});  // 2x^3 - 3x + 5
  CHECK(p.derivative() == P({-3, 0, 6}));
  CHECK(p.eval_z(2) == 15);
  CHECK(p.eval(mpq_class(1, 2)) == mpq_class(15, 4));
  CHECK(sextic_f().eval_z(1) == 1);
  CHECK(sextic_f().eval_z(0) == 1);
  CHECK(sextic_f().eval_z(-1) == 23);
  CHECK(sextic_g().eval_z(1) == 2);
}

TEST_CASE("structural maps") {
  auto p = P({1, 2, 3});
  CHECK(p.reversed() == P({3, 2, 1}));
  // p(2X) for p = 3x^2+2x+1
  CHECK(p.dilate(2) == P({1, 4, 12}));
  // p(X+1) = 3(X+1)^2 + 2(X+1) + 1 = 3X^2 + 8X + 6
  CHECK(p.taylor_shift(1) == P({6, 8, 3}));
  // shift back inverts
  std::mt19937_64 rng(23);
  for (int i = 0; i < 10; ++i) {
    auto q = random_poly(rng, 6, 20);
    CHECK(q.taylor_shift(5).taylor_shift(-5) == q);
  }
}

TEST_CASE("resultant: pinned examples") {
  // res(x^2+1, x) = 1 (value of x^2+1 at the root of x)
  CHECK(resultant(P({1, 0, 1}), P({0, 1})) == 1);
  // res(x^2-2, x-1) = (x^2-2)|_{x=1} = -1
  CHECK(resultant(P({-2, 0, 1}), P({-1, 1})) == -1);
  // res(f, x) = f(0) = 1
  CHECK(resultant(sextic_f(), P({0, 1})) == 1);
  // res(x^2-2, x^2-3): roots +-sqrt(2), values (2-3)(2-3) = 1
  CHECK(resultant(P({-2, 0, 1}), P({-3, 0, 1})) == 1);
  // res(ax+b, cx+d) = ad - bc
  CHECK(resultant(P({3, 2}), P({7, 5})) == 2 * 7 - 3 * 5);
  // degree-0 cases: res(c, q) = c^deg(q)
  CHECK(resultant(P({3}), P({1, 1, 1})) == 9);
  CHECK(resultant(P({1, 1, 1}), P({3})) == 9);
  CHECK_THROWS_AS(resultant(IntPoly(), P({1, 1})), domain_error);
}

TEST_CASE("resultant: invariants") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 15; ++i) {
    auto p = random_poly(rng, 4, 6);
    auto q = random_poly(rng, 3, 6);
    auto r = random_poly(rng, 2, 6);
    // multiplicativity in the second argument
    CHECK(resultant(p, q * r) == resultant(p, q) * resultant(p, r));
    // symmetry up to (-1)^{mn}
    mpz_class sign = ((p.degree() * q.degree()) % 2 == 0) ? 1 : -1;
    CHECK(resultant(p, q) == sign * resultant(q, p));
    // res(p, q) is q.lc^deg(p) * prod p(beta_j); spot check via a linear q
    auto lin = P({-i, 1});
    CHECK(resultant(p, lin) == p.eval_z(i));
  }
}

TEST_CASE("discriminant") {
  // disc(x^2 + bx + c) = b^2 - 4c
  CHECK(discriminant(P({5, -3, 1})) == 9 - 20);
  CHECK(discriminant(P({-2, 0, 1})) == 8);
  // disc(x^3 + px + q) = -4p^3 - 27q^2
  CHECK(discriminant(P({-1, -1, 0, 1})) == -4 * (-1) - 27);
  // squareful polynomial has zero discriminant
  CHECK(discriminant(P({-1, 1}) * P({-1, 1}) * P({1, 1})) == 0);
  // pinned values for the two sextics (totally complex, so negative)
  CHECK(discriminant(sextic_f()) == -12167);
  CHECK(discriminant(sextic_g()) == -27556);
}

TEST_CASE("bareiss determinant") {
  ZMat m = {{2, 0}, {0, 3}};
  CHECK(det_bareiss(m) == 6);
  ZMat s = {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
  CHECK(det_bareiss(s) == -3);
  ZMat sing = {{1, 2}, {2, 4}};
  CHECK(det_bareiss(sing) == 0);
}

TEST_CASE("rational linear algebra") {
  QMat m = {{1, 2}, {3, 4}};
  CHECK(rank_q(m) == 2);
  QMat r1 = {{1, 2}, {2, 4}};
  CHECK(rank_q(r1) == 1);
  auto ker = kernel_q(r1);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] * 1 + ker[0][1] * 2 == 0);

  std::vector<mpq_class> rhs = {mpq_class(1), mpq_class(0)};
  auto x = solve_q(m, rhs);
  CHECK(x[0] == mpq_class(-2));
  CHECK(x[1] == mpq_class(3, 2));
  CHECK_THROWS_AS(solve_q(r1, rhs), domain_error);

  std::vector<mpq_class> v = {mpq_class(-2, 3), mpq_class(4, 9)};
  auto pv = primitive_integer_vector(v);
  CHECK(pv[0] == 3);
  CHECK(pv[1] == -2);
}

TEST_CASE("rational polynomial division and gcd") {
  RatPoly a(P({-1, 0, 1}));  // x^2 - 1
  RatPoly b(P({-1, 1}));     // x - 1
  auto [q, r] = RatPoly::divrem(a, b);
  CHECK(q == RatPoly(P({1, 1})));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(RatPoly::divrem(a, RatPoly()), domain_error);

  auto g = RatPoly::gcd(RatPoly(P({-1, 0, 1})), RatPoly(P({1, -2, 1})));
  CHECK(g == RatPoly(P({-1, 1})));

  auto [gg, u, v] =
      RatPoly::xgcd(RatPoly(P({-2, 0, 1})), RatPoly(P({-1, 1})));
  CHECK(u * RatPoly(P({-2, 0, 1})) + v * RatPoly(P({-1, 1})) == gg);
  CHECK(gg.degree() == 0);
}

TEST_CASE("compose_mod and modular inverse") {
  // g(h) mod f with g = x^2, h = x+1, f = x^2+1:
  // (x+1)^2 = x^2+2x+1 = 2x mod x^2+1
  auto f = P({1, 0, 1});
  auto c = compose_mod(RatPoly(P({0, 0, 1})), RatPoly(P({1, 1})), f);
  CHECK(c == RatPoly(P({0, 2})));
  CHECK_THROWS_AS(compose_mod(RatPoly(f), RatPoly(f), P({3})), domain_error);

  // (x)^-1 mod x^2+1 is -x since x * -x = -x^2 = 1
  auto inv = invert_mod(RatPoly(P({0, 1})), f);
  CHECK(RatPoly::divrem(inv * RatPoly(P({0, 1})), RatPoly(f)).second ==
        RatPoly(P({1})));
}
