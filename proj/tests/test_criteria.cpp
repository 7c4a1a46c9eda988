#include "doctest.h"

#include "algx/criteria.hpp"
#include "algx/errors.hpp"

using namespace algx;

namespace {

IntPoly P(std::vector<long> c) {
  std::vector<mpz_class> z(c.begin(), c.end());
  return IntPoly(std::move(z));
}

IntPoly sextic_f() { return P({1, -3, 5, -5, 5, -3, 1}); }
IntPoly sextic_g() { return P({1, -1, 0, 2, 0, -1, 1}); }

}  // namespace

TEST_CASE("totally complex detection") {
  CHECK(is_totally_complex(sextic_f()));
  CHECK(is_totally_complex(sextic_g()));
  CHECK(is_totally_complex(P({1, 0, 1})));
  CHECK(!is_totally_complex(P({-2, 0, 1})));
  CHECK(!is_totally_complex(P({-2, 0, 0, 1})));  // x^3 - 2 has a real root
}

TEST_CASE("conjugate membership and galois") {
  NumberField Kf(sextic_f(), "6.0.12167.1");
  CHECK(conj_in_field(Kf) == Cert::yes);
  CHECK(is_galois(Kf) == Cert::yes);

  NumberField Kg(sextic_g(), "6.0.27556.1");
  CHECK(conj_in_field(Kg) == Cert::no);
  CHECK(is_galois(Kg) == Cert::no);

  NumberField Ki(P({1, 0, 1}));
  CHECK(conj_in_field(Ki) == Cert::yes);
  CHECK(is_galois(Ki) == Cert::yes);

  CHECK(is_galois(NumberField(P({-2, 0, 1}))) == Cert::yes);
  CHECK(is_galois(NumberField(P({-2, 0, 0, 1}))) == Cert::no);
}

TEST_CASE("independence for the galois sextic: every pair dependent") {
  // the three conjugate pairs of f satisfy, in some order,
  // x1*c(x1) = 1, x2+c(x2) = 1, x3+c(x3) = x3*c(x3)
  NumberField Kf(sextic_f());
  auto t = independence_triple(Kf);
  CHECK(t.independent == Cert::no);
  REQUIRE(t.relation.has_value());
  auto [c0, c1, c2] = *t.relation;
  // the relation must hold numerically on tight enclosures
  auto emb = Kf.embeddings(256);
  CBall xi = emb[Kf.gen_index()];
  CBall b1 = xi + xi.conj();
  CBall b2 = xi * xi.conj();
  CBall lhs = CBall::exact(c0, mpq_class(0), 256) +
              CBall::exact(c1, mpq_class(0), 256) * b1 +
              CBall::exact(c2, mpq_class(0), 256) * b2;
  CHECK(lhs.contains_zero());

  CHECK(all_pairs_independent(sextic_f()) == Cert::no);
}

TEST_CASE("independence for the non-galois sextic") {
  // the pair on the unit circle is dependent, the other two are
  // independent; canonical index 0 has |root| > 1, hence independent
  NumberField Kg(sextic_g());
  auto t = independence_triple(Kg);
  CHECK(t.independent == Cert::yes);
  CHECK(t.minpoly_sum.degree() > 1);
  CHECK(t.minpoly_prod.degree() > 1);

  CHECK(all_pairs_independent(sextic_g()) == Cert::no);
}

TEST_CASE("real subfield degrees") {
  NumberField Kf(sextic_f());
  auto rf = real_subfield_degree(Kf);
  CHECK(rf.degree == 3);
  CHECK(rf.certified == Cert::yes);

  // paper: Q(xi_2), Q(xi_3) for g have no nontrivial real subfield
  NumberField Kg(sextic_g());
  auto rg = real_subfield_degree(Kg);
  CHECK(rg.degree == 1);

  NumberField Ki(P({1, 0, 1}));
  auto ri = real_subfield_degree(Ki);
  CHECK(ri.degree == 1);
  CHECK(ri.certified == Cert::yes);
}

TEST_CASE("wstar classification rules") {
  FieldCriteria c;
  c.degree = 6;
  c.totally_complex = true;
  c.galois = Cert::yes;
  c.conj_in_field = Cert::yes;
  c.independent = Cert::no;
  c.all_independent = Cert::no;

  CHECK(classify_wstar(c, 3).kind == WstarResult::Kind::value);
  CHECK(classify_wstar(c, 3).w == mpq_class(1));
  CHECK(classify_wstar(c, 2).w == mpq_class(1, 2));  // d > 4
  CHECK(classify_wstar(c, 4).w == mpq_class(2));     // index 2 at d = 6
  CHECK(classify_wstar(c, 5).kind == WstarResult::Kind::out_of_scope);  // d < n+2

  FieldCriteria q4 = c;
  q4.degree = 4;
  q4.conj_in_field = Cert::no;
  q4.independent = Cert::yes;
  CHECK(classify_wstar(q4, 2).w == mpq_class(1, 2));
  q4.independent = Cert::no;
  CHECK(classify_wstar(q4, 2).w == mpq_class(1));
  q4.independent = Cert::unknown;
  CHECK(classify_wstar(q4, 2).kind == WstarResult::Kind::undetermined);

  FieldCriteria d6free = c;
  d6free.conj_in_field = Cert::no;
  d6free.independent = Cert::yes;
  CHECK(classify_wstar(d6free, 4).w == mpq_class(3, 2));

  FieldCriteria d10 = c;
  d10.degree = 10;
  d10.conj_in_field = Cert::yes;
  d10.independent = Cert::yes;
  CHECK(classify_wstar(d10, 6).kind == WstarResult::Kind::undetermined);
  d10.conj_in_field = Cert::no;
  CHECK(classify_wstar(d10, 6).kind == WstarResult::Kind::out_of_scope);

  FieldCriteria real_case;
  real_case.degree = 6;
  real_case.totally_complex = false;
  CHECK(classify_wstar(real_case, 2).kind == WstarResult::Kind::out_of_scope);
}

TEST_CASE("theorem gate") {
  FieldCriteria f6;
  f6.degree = 6;
  f6.totally_complex = true;
  f6.galois = Cert::yes;
  f6.conj_in_field = Cert::yes;
  f6.independent = Cert::no;
  f6.all_independent = Cert::no;
  CHECK(theorem_gate(f6, 2).applies);
  CHECK(theorem_gate(f6, 3).applies);
  CHECK(!theorem_gate(f6, 4).applies);  // d < 8
  CHECK(!theorem_gate(f6, 5).applies);

  FieldCriteria g6 = f6;
  g6.galois = Cert::no;
  CHECK(theorem_gate(g6, 2).applies);
  CHECK(!theorem_gate(g6, 3).applies);

  FieldCriteria oct;
  oct.degree = 8;
  oct.totally_complex = true;
  oct.galois = Cert::yes;
  oct.conj_in_field = Cert::yes;
  oct.independent = Cert::yes;
  oct.all_independent = Cert::yes;
  CHECK(theorem_gate(oct, 4).applies);
  oct.all_independent = Cert::unknown;
  CHECK(!theorem_gate(oct, 4).applies);

  FieldCriteria quart;
  quart.degree = 4;
  quart.totally_complex = true;
  quart.independent = Cert::yes;
  CHECK(theorem_gate(quart, 2).applies);
  quart.independent = Cert::no;
  CHECK(!theorem_gate(quart, 2).applies);
}
