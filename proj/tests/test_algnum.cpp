#include "doctest.h"

#include <cmath>

#include "algx/algnum.hpp"
#include "algx/errors.hpp"

using namespace algx;

namespace {

IntPoly P(std::vector<long> c) {
  std::vector<mpz_class> z(c.begin(), c.end());
  return IntPoly(std::move(z));
}

IntPoly sextic_f() { return P({1, -3, 5, -5, 5, -3, 1}); }
IntPoly sextic_g() { return P({1, -1, 0, 2, 0, -1, 1}); }

bool iv_contains_approx(const RIv& iv, double x, double tol = 1e-9) {
  return iv.lo().to_double() <= x + tol && iv.hi().to_double() >= x - tol;
}

}  // namespace

TEST_CASE("algebraic number basics") {
  auto q = AlgebraicNumber::rational(mpq_class(3, 2));
  CHECK(q.is_rational());
  CHECK(q.as_rational() == mpq_class(3, 2));
  CHECK(q.degree() == 1);

  auto s2 = AlgebraicNumber::root_of(P({-2, 0, 1}), 0);
  CHECK(s2.degree() == 2);
  CHECK(s2.disk().mid().re.sgn() > 0);  // canonical index 0 is +sqrt(2)
  auto s2m = AlgebraicNumber::root_of(P({-2, 0, 1}), 1);
  CHECK(s2m.disk().mid().re.sgn() < 0);
  CHECK_THROWS_AS(AlgebraicNumber::root_of(P({-2, 0, 1}), 2), domain_error);
  CHECK_THROWS_AS(AlgebraicNumber::root_of(P({-1, 0, 0, 0, 1}), 0), domain_error);

  CBall tight = s2.enclosure(300);
  CHECK(tight.rad() < Real::pow2(-290));
  CHECK((tight * tight).re_iv().contains(mpq_class(2)));

  auto c = AlgebraicNumber::root_of(P({1, 0, 1}), 0).conj();
  CHECK(c.disk().mid().im.sgn() < 0);
}

TEST_CASE("heights") {
  CHECK(naive_height(sextic_f()) == 5);
  CHECK(naive_height(P({-4, 0, 2})) == 2);  // primitive part x^2 - 2

  // h(sqrt 2) = log(2)/2
  CHECK(iv_contains_approx(weil_height(P({-2, 0, 1})), 0.34657359027997264));
  // h(3/2) = log 3
  CHECK(iv_contains_approx(weil_height(P({-3, 2})), 1.0986122886681098));
  // h(golden ratio) = log(phi)/2
  CHECK(iv_contains_approx(weil_height(P({-1, -1, 1})), 0.2406059125829813));
  // roots of unity have height 0
  CHECK(iv_contains_approx(weil_height(P({1, 1, 1})), 0.0));

  // height comparability with the naive height H:
  // -log(d+1)/2 + d*h <= log H <= d*(h + log 2)
  for (const auto& p : {sextic_f(), sextic_g(), P({-1, -1, 1}), P({-2, 0, 1})}) {
    double h = weil_height(p).mid().to_double();
    double logH = std::log(naive_height(p).get_d());
    int d = p.degree();
    CHECK(logH >= -0.5 * std::log(d + 1.0) + d * h - 1e-9);
    CHECK(logH <= d * (h + std::log(2.0)) + 1e-9);
  }
}

TEST_CASE("field arithmetic in Q(sqrt 2)") {
  NumberField K(P({-2, 0, 1}));
  auto th = K.gen();
  CHECK((th * th).rep() == RatPoly::constant(2));
  auto one_plus = K.from_rational(1) + th;
  auto one_minus = K.from_rational(1) - th;
  CHECK((one_plus * one_minus).rep() == RatPoly::constant(-1));
  CHECK((th.inverse() * th).rep() == RatPoly::constant(1));
  CHECK(th.inverse().rep() == RatPoly(std::vector<mpq_class>{0, mpq_class(1, 2)}));

  CHECK(th.trace() == 0);
  CHECK(th.norm() == -2);
  CHECK(one_plus.trace() == 2);
  CHECK(one_plus.norm() == -1);
  CHECK(one_plus.minpoly() == P({-1, -2, 1}));
  CHECK(th.pow(4).rep() == RatPoly::constant(4));
  CHECK(K.from_rational(3).charpoly() == RatPoly(P({9, -6, 1})));
  CHECK_THROWS_AS(K.from_rational(0).inverse(), domain_error);
}

TEST_CASE("embeddings") {
  NumberField K(sextic_f());
  auto emb = K.embeddings(128);
  REQUIRE(emb.size() == 6);
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = i + 1; j < 6; ++j) CHECK(CBall::disjoint(emb[i], emb[j]));
  auto m = K.embedding_matrix(128);
  REQUIRE(m.size() == 6);
  for (const auto& row : m) {
    REQUIRE(row.size() == 6);
    CHECK(row[0].re_iv().contains(mpq_class(1)));
    CHECK(row[0].im_iv().contains(mpq_class(0)));
  }
  // sum of sigma_i(theta) = trace = 3
  CBall s = m[0][1];
  for (size_t i = 1; i < 6; ++i) s = s + m[i][1];
  CHECK(s.re_iv().contains(mpq_class(3)));
  CHECK(s.im_iv().contains(mpq_class(0)));

  // norm and trace of the generator from the defining polynomial
  CHECK(K.gen().norm() == 1);
  CHECK(K.gen().trace() == 3);
  CHECK(K.gen().minpoly() == sextic_f());
}

TEST_CASE("express: membership found") {
  NumberField K(P({-2, 0, 1}));
  auto r = express_in_field(K, AlgebraicNumber::root_of(P({-2, 0, 1}), 0));
  REQUIRE(r.status == Cert::yes);
  CHECK(r.element->rep() == RatPoly::x());
  auto r2 = express_in_field(K, AlgebraicNumber::root_of(P({-2, 0, 1}), 1));
  REQUIRE(r2.status == Cert::yes);
  CHECK(r2.element->rep() == -RatPoly::x());

  auto rq = express_in_field(K, AlgebraicNumber::rational(mpq_class(7, 3)));
  REQUIRE(rq.status == Cert::yes);
  CHECK(rq.element->as_rational() == mpq_class(7, 3));

  // sqrt 2 inside Q(2^{1/4})
  NumberField K4(P({-2, 0, 0, 0, 1}));
  auto r4 = express_in_field(K4, AlgebraicNumber::root_of(P({-2, 0, 1}), 0));
  REQUIRE(r4.status == Cert::yes);
  CHECK(r4.element->minpoly() == P({-2, 0, 1}));
  CBall v = r4.element->value(128);
  CHECK((v * v).re_iv().contains(mpq_class(2)));
  CHECK(v.re_iv().lo() > 1.41);
}

TEST_CASE("express: certified absence") {
  NumberField K(P({-2, 0, 1}));
  // sqrt 3 is not in Q(sqrt 2)
  auto r = express_in_field(K, AlgebraicNumber::root_of(P({-3, 0, 1}), 0));
  CHECK(r.status == Cert::no);
  // degree obstruction: cube root of 2 cannot lie in a quadratic field
  auto rc = express_in_field(K, AlgebraicNumber::root_of(P({-2, 0, 0, 1}), 0));
  CHECK(rc.status == Cert::no);
}

TEST_CASE("express: conjugate generator, galois vs not") {
  // f generates a galois sextic: the conjugate of xi lies in Q(xi)
  NumberField Kf(sextic_f());
  auto xi_bar = Kf.gen_value().conj();
  auto rf = express_in_field(Kf, xi_bar);
  REQUIRE(rf.status == Cert::yes);
  CHECK(rf.element->minpoly() == sextic_f());

  // g does not: Q(xi) is not normal, conjugate is in a different copy
  NumberField Kg(sextic_g());
  auto rg = express_in_field(Kg, Kg.gen_value().conj());
  CHECK(rg.status == Cert::no);
}
