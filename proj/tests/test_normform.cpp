#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "algx/approx.hpp"
#include "algx/errors.hpp"
#include "algx/normform.hpp"

using namespace algx;

namespace {

IntPoly P(std::vector<long> c) {
  std::vector<mpz_class> z(c.begin(), c.end());
  return IntPoly(std::move(z));
}

IntPoly sextic_f() { return P({1, -3, 5, -5, 5, -3, 1}); }

std::vector<mpz_class> V(std::vector<long> c) {
  return std::vector<mpz_class>(c.begin(), c.end());
}

}  // namespace

TEST_CASE("norm of power basis vectors") {
  NumberField Kf(sextic_f());
  CHECK(norm_of_vector(Kf, V({1, 0, 0, 0, 0})) == 1);
  CHECK(norm_of_vector(Kf, V({0, 1, 0, 0, 0})) == 1);
  CHECK(norm_of_vector(Kf, V({0, 0, 1, 0, 0})) == 1);
  CHECK(norm_of_vector(Kf, V({0})) == 0);
  CHECK(norm_of_vector(Kf, V({2})) == 64);
  CHECK(norm_of_vector(Kf, V({0, 2})) == 64);  // Norm(2 xi) = 2^6 Norm(xi)
}

TEST_CASE("norm agrees with the characteristic polynomial and is multiplicative") {
  NumberField Kf(sextic_f());
  NumberField Kq(surd_family({2, 3}).minpoly());
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coef(-4, 4);
  for (const NumberField* K : {&Kf, &Kq}) {
    int d = K->degree();
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<mpq_class> uq, vq;
      std::vector<mpz_class> uz, vz;
      for (int i = 0; i < d - 1; ++i) {
        long a = coef(rng), b = coef(rng);
        uq.emplace_back(a);
        vq.emplace_back(b);
        uz.emplace_back(a);
        vz.emplace_back(b);
      }
      FieldElement u = K->element(RatPoly(uq)), v = K->element(RatPoly(vq));
      CHECK(norm_of_vector(*K, uz) == u.norm());
      FieldElement w = u * v;
      std::vector<mpz_class> wz;
      for (int i = 0; i < d; ++i) {
        const mpq_class& c = w.rep()[i];
        REQUIRE(c.get_den() == 1);
        wz.push_back(c.get_num());
      }
      CHECK(norm_of_vector(*K, wz) == norm_of_vector(*K, uz) * norm_of_vector(*K, vz));
    }
  }
}

TEST_CASE("unit solutions of the sextic norm form") {
  NumberField Kf(sextic_f());
  auto res = enumerate_solutions(Kf, 4, 1, 1);
  CHECK(!res.partial);

  std::set<std::vector<long>> got;
  for (const auto& s : res.solutions) {
    std::vector<long> c;
    for (const auto& z : s.coords) c.push_back(z.get_si());
    got.insert(c);
    CHECK(abs(s.norm_value) == 1);
    // closed under negation
    std::vector<mpz_class> neg;
    for (const auto& z : s.coords) neg.push_back(-z);
    bool found = false;
    for (const auto& t : res.solutions) found = found || t.coords == neg;
    CHECK(found);
  }
  for (int k = 0; k < 5; ++k) {
    std::vector<long> e(5, 0), ne(5, 0);
    e[k] = 1;
    ne[k] = -1;
    CHECK(got.count(e));
    CHECK(got.count(ne));
  }
  size_t canonical = 0;
  for (const auto& s : res.solutions) canonical += s.canonical;
  CHECK(canonical * 2 == res.solutions.size());

  // golden counts from the first certified runs
  CHECK(res.solutions.size() == 36);
  CHECK(enumerate_solutions(Kf, 4, 1, 10).solutions.size() == 232);
}

TEST_CASE("min norm profile stays flat for the sextic") {
  NumberField Kf(sextic_f());
  auto prof = min_norm_profile(Kf, 4, 8);
  REQUIRE(prof.shells.size() == 8);
  for (const auto& [X, v] : prof.shells) CHECK(v == 1);
  CHECK(prof.fitted_exponent == doctest::Approx(0.0));
}

TEST_CASE("min norm profile grows for the surd octic") {
  NumberField K(surd_family({2, 3, 5}).minpoly());
  auto prof = min_norm_profile(K, 4, 8);
  REQUIRE(prof.shells.size() == 8);
  CHECK(prof.shells[0].second == 1);  // e_0 has norm 1
  CHECK(prof.fitted_exponent > 0);
}

TEST_CASE("relation matrix for the galois sextic") {
  NumberField Kf(sextic_f());
  auto R = relation_matrix(Kf, 2);
  REQUIRE(R.A.size() == 3);
  REQUIRE(R.A[0].size() == 6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j)
        CHECK(!R.A[i][j].is_zero());
      else
        CHECK(R.A[i][j].is_zero());
    }
  // conjugate pairing is an involution without fixed points
  for (size_t i = 0; i < 6; ++i) {
    CHECK(R.conj_partner[i] != i);
    CHECK(R.conj_partner[R.conj_partner[i]] == i);
  }
  auto fr = full_rank_condition(R);
  CHECK(fr.full_rank);

  auto num = R.numeric(128);
  CHECK(num.size() == 3);
  CHECK(num[0].size() == 6);
}

TEST_CASE("relation matrix for the quartic surd field") {
  NumberField K(surd_family({2, 3}).minpoly());
  auto R = relation_matrix(K, 2);
  REQUIRE(R.A.size() == 1);
  REQUIRE(R.A[0].size() == 4);
  for (const auto& e : R.A[0]) CHECK(!e.is_zero());
  CHECK(full_rank_condition(R).full_rank);
}

TEST_CASE("relation matrix rejects a non-galois field") {
  NumberField Kg(P({1, -1, 0, 2, 0, -1, 1}));
  CHECK_THROWS_AS(relation_matrix(Kg, 2), domain_error);
}

TEST_CASE("vanishing subsums") {
  NumberField Kf(sextic_f());
  auto R = relation_matrix(Kf, 2);

  NormFormSolution e0{V({1, 0, 0}), 1, 1, true};
  auto hits = vanishing_subsum_detect(R, 0, e0);
  REQUIRE(!hits.empty());
  // the full support is the defining relation, hence always vanishes
  std::vector<size_t> support;
  for (size_t i = 0; i < 6; ++i)
    if (!R.A[0][i].is_zero()) support.push_back(i);
  bool has_full = false;
  for (const auto& h : hits) has_full = has_full || h.support == support;
  CHECK(has_full);
  for (const auto& h : hits) CHECK(h.support.size() >= 2);

  // a norm-1 solution from the xi-power family
  NormFormSolution xsq{V({0, 0, 1}), 1, 1, true};
  for (const auto& h : vanishing_subsum_detect(R, 0, xsq))
    CHECK(h.support.size() >= 2);
}

TEST_CASE("per solution embedding order") {
  NumberField Kf(sextic_f());
  NormFormSolution x{V({1, 2, 0, 1, 0}), norm_of_vector(Kf, V({1, 2, 0, 1, 0})), 2,
                     true};
  auto order = solution_embedding_order(Kf, x);
  REQUIRE(order.size() == 6);
  std::set<size_t> seen(order.begin(), order.end());
  CHECK(seen.size() == 6);

  auto emb = Kf.embeddings(256);
  auto val = [&](size_t i) {
    CBall v = CBall::exact(0, 0, 256);
    CBall pw = CBall::exact(1, 0, 256);
    for (size_t j = 0; j < x.coords.size(); ++j) {
      v = v + pw * CBall::exact_int(x.coords[j], 256);
      pw = pw * emb[i];
    }
    return v;
  };
  double prev = 1e300;
  for (size_t p = 0; p + 1 < 6; p += 2) {
    CBall a = val(order[p]), b = val(order[p + 1]);
    // adjacent entries are conjugate values of equal magnitude
    CHECK((a - b.conj()).contains_zero());
    double mag = std::hypot(a.mid().re.to_double(), a.mid().im.to_double());
    CHECK(mag <= prev + 1e-9);
    prev = mag;
  }
}
