#include "algx/criteria.hpp"

#include <algorithm>
#include <functional>

#include "algx/errors.hpp"
#include "algx/factor.hpp"
#include "algx/linalg.hpp"
#include "algx/lll.hpp"
#include "algx/sturm.hpp"

namespace algx {

namespace {

// exact interpolation of an integer polynomial from values at 0..ys.size()-1
IntPoly interpolate_integer(const std::vector<mpz_class>& ys) {
  const size_t n = ys.size();
  QMat m(n, std::vector<mpq_class>(n));
  std::vector<mpq_class> rhs(n);
  for (size_t i = 0; i < n; ++i) {
    mpq_class pw = 1;
    for (size_t j = 0; j < n; ++j) {
      m[i][j] = pw;
      pw *= static_cast<long>(i);
    }
    rhs[i] = ys[i];
  }
  auto coef = solve_q(m, rhs);
  std::vector<mpz_class> zc(n);
  for (size_t i = 0; i < n; ++i) {
    if (coef[i].get_den() != 1)
      throw domain_error("interpolate_integer: non-integral coefficient");
    zc[i] = coef[i].get_num();
  }
  return IntPoly(std::move(zc));
}

// polynomial with roots alpha_i + alpha_j over all pairs of roots of monic f
IntPoly sum_poly(const IntPoly& f) {
  const int d = f.degree();
  const int D = d * d;
  std::vector<mpz_class> ys(D + 1);
  IntPoly fneg = f.dilate(-1);  // f(-y)
  for (int k = 0; k <= D; ++k) {
    IntPoly second = fneg.taylor_shift(-k);  // f(k - y)
    ys[k] = resultant(f, second);
  }
  return interpolate_integer(ys);
}

// polynomial with roots alpha_i * alpha_j over all pairs of roots of monic f
IntPoly prod_poly(const IntPoly& f) {
  const int d = f.degree();
  const int D = d * d;
  std::vector<mpz_class> ys(D + 1);
  for (int k = 0; k <= D; ++k) {
    // g_k(y) = sum_j f_j k^j y^{d-j}
    std::vector<mpz_class> c(d + 1, mpz_class(0));
    mpz_class pw = 1;
    for (int j = 0; j <= d; ++j) {
      c[d - j] = f[j] * pw;
      pw *= k;
    }
    IntPoly g(std::move(c));
    ys[k] = g.is_zero() ? mpz_class(0) : resultant(f, g);
  }
  return interpolate_integer(ys);
}

// The irreducible factor of `poly` vanishing at the value enclosed by
// val(prec); escalates precision until a unique factor remains.
IntPoly select_factor(const IntPoly& poly, const std::function<CBall(prec_t)>& val,
                      const ExpressOptions& opt) {
  auto fz = factor_over_q(poly);
  for (prec_t wp = opt.prec; wp <= opt.prec_cap; wp *= 2) {
    CBall v = val(wp);
    const IntPoly* hit = nullptr;
    int hits = 0;
    for (const auto& [fac, mult] : fz.factors) {
      if (fac.eval_ball(v).contains_zero()) {
        ++hits;
        hit = &fac;
      }
    }
    if (hits == 1) return *hit;
  }
  throw precision_cap_reached("select_factor: could not isolate the minimal polynomial");
}

// A certified disk of `mp` isolating the value enclosed by val(prec).
CBall isolating_disk(const IntPoly& mp, const std::function<CBall(prec_t)>& val,
                     const ExpressOptions& opt) {
  for (prec_t wp = opt.prec; wp <= opt.prec_cap; wp *= 2) {
    auto roots = certified_roots(mp, wp);
    CBall v = val(wp);
    long match = -1;
    int hits = 0;
    for (size_t i = 0; i < roots.size(); ++i) {
      if (!CBall::disjoint(roots[i].disk, v)) {
        ++hits;
        match = static_cast<long>(i);
      }
    }
    if (hits == 1) return roots[static_cast<size_t>(match)].disk;
  }
  throw precision_cap_reached("isolating_disk: could not isolate the value");
}

// canonical index of the root of `mp` matching the value
size_t root_index_of(const IntPoly& mp, const std::function<CBall(prec_t)>& val,
                     const ExpressOptions& opt) {
  NumberField probe(mp);
  for (prec_t wp = opt.prec; wp <= opt.prec_cap; wp *= 2) {
    auto emb = probe.embeddings(wp);
    CBall v = val(wp);
    long match = -1;
    int hits = 0;
    for (size_t i = 0; i < emb.size(); ++i) {
      if (!CBall::disjoint(emb[i], v)) {
        ++hits;
        match = static_cast<long>(i);
      }
    }
    if (hits == 1) return static_cast<size_t>(match);
  }
  throw precision_cap_reached("root_index_of: could not isolate the value");
}

std::vector<mpq_class> coords_of(const FieldElement& e, int d) {
  std::vector<mpq_class> v(d, mpq_class(0));
  for (int j = 0; j <= e.rep().degree(); ++j) v[static_cast<size_t>(j)] = e.rep()[j];
  return v;
}

}  // namespace

bool is_totally_complex(const IntPoly& f) {
  if (f.degree() < 1) throw domain_error("is_totally_complex: degree must be >= 1");
  return sturm_count(f) == 0;
}

Cert conj_in_field(const NumberField& K, const ExpressOptions& opt) {
  return express_in_field(K, K.gen_value().conj(), opt).status;
}

Cert is_galois(const NumberField& K, const ExpressOptions& opt) {
  auto emb = K.embeddings(256);
  bool any_unknown = false;
  for (size_t i = 0; i < emb.size(); ++i) {
    if (i == K.gen_index()) continue;
    auto r = express_in_field(K, AlgebraicNumber(K.poly(), emb[i]), opt);
    if (r.status == Cert::no) return Cert::no;
    if (r.status == Cert::unknown) any_unknown = true;
  }
  return any_unknown ? Cert::unknown : Cert::yes;
}

GaloisTable galois_table(const NumberField& K, const ExpressOptions& opt) {
  GaloisTable t;
  const int d = K.degree();
  std::vector<CBall> emb = K.embeddings(opt.prec);
  std::vector<FieldElement> sigma;
  for (int i = 0; i < d; ++i) {
    if (static_cast<size_t>(i) == K.gen_index()) {
      sigma.push_back(K.gen());
      continue;
    }
    auto r = express_in_field(K, AlgebraicNumber(K.poly(), emb[i]), opt);
    if (r.status != Cert::yes) {
      t.status = r.status;
      return t;
    }
    sigma.push_back(*r.element);
  }
  for (prec_t wp = opt.prec;; wp *= 2) {
    if (wp > opt.prec_cap)
      throw precision_cap_reached("galois_table: conjugate pairing undecided");
    std::vector<CBall> e = wp == opt.prec ? emb : K.embeddings(wp);
    std::vector<size_t> partner(d, d);
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
      int found = -1;
      for (int j = 0; j < d; ++j)
        if (!CBall::disjoint(e[i].conj(), e[j])) {
          if (found >= 0) ok = false;
          found = j;
        }
      if (found < 0) ok = false;
      partner[i] = found;
    }
    if (ok) {
      t.conj_partner = std::move(partner);
      break;
    }
  }
  t.status = Cert::yes;
  t.sigma = std::move(sigma);
  return t;
}

IndependenceTriple independence_triple(const NumberField& K, const ExpressOptions& opt) {
  IndependenceTriple out;
  const int d = K.degree();
  const IntPoly& f = K.poly();
  auto xi_ball = [&](prec_t wp) { return K.embeddings(wp)[K.gen_index()]; };
  auto b1_val = [&](prec_t wp) {
    CBall x = xi_ball(wp);
    return x + x.conj();
  };
  auto b2_val = [&](prec_t wp) {
    CBall x = xi_ball(wp);
    return x * x.conj();
  };

  auto ex = express_in_field(K, K.gen_value().conj(), opt);
  if (ex.status == Cert::yes) {
    FieldElement b1 = K.gen() + *ex.element;
    FieldElement b2 = K.gen() * *ex.element;
    out.minpoly_sum = b1.minpoly();
    out.minpoly_prod = b2.minpoly();
    QMat m(d, std::vector<mpq_class>(3, mpq_class(0)));
    m[0][0] = 1;
    auto c1 = coords_of(b1, d), c2 = coords_of(b2, d);
    for (int i = 0; i < d; ++i) {
      m[static_cast<size_t>(i)][1] = c1[static_cast<size_t>(i)];
      m[static_cast<size_t>(i)][2] = c2[static_cast<size_t>(i)];
    }
    auto ker = kernel_q(m);
    if (ker.empty()) {
      out.independent = Cert::yes;
    } else {
      out.independent = Cert::no;
      auto rel = primitive_integer_vector(ker[0]);
      out.relation = {mpq_class(rel[0]), mpq_class(rel[1]), mpq_class(rel[2])};
    }
    return out;
  }

  // general path via resultant minimal polynomials
  out.minpoly_sum = select_factor(sum_poly(f), b1_val, opt);
  out.minpoly_prod = select_factor(prod_poly(f), b2_val, opt);
  if (out.minpoly_sum.degree() == 1) {
    mpq_class r = mpq_class(-out.minpoly_sum[0]) / mpq_class(out.minpoly_sum[1]);
    out.independent = Cert::no;
    out.relation = {-r, mpq_class(1), mpq_class(0)};
    return out;
  }
  if (out.minpoly_prod.degree() == 1) {
    mpq_class r = mpq_class(-out.minpoly_prod[0]) / mpq_class(out.minpoly_prod[1]);
    out.independent = Cert::no;
    out.relation = {-r, mpq_class(0), mpq_class(1)};
    return out;
  }
  // dependent iff xi*conj is an affine function of xi+conj over Q
  NumberField K1(out.minpoly_sum, "", root_index_of(out.minpoly_sum, b1_val, opt));
  AlgebraicNumber beta2(out.minpoly_prod, isolating_disk(out.minpoly_prod, b2_val, opt));
  auto ex2 = express_in_field(K1, beta2, opt);
  if (ex2.status == Cert::unknown) {
    out.independent = Cert::unknown;
    return out;
  }
  if (ex2.status == Cert::no || ex2.element->rep().degree() > 1) {
    out.independent = Cert::yes;
    return out;
  }
  out.independent = Cert::no;
  const RatPoly& rep = ex2.element->rep();
  out.relation = {rep[0], rep[1], mpq_class(-1)};
  return out;
}

Cert all_pairs_independent(const IntPoly& f, const ExpressOptions& opt) {
  IntPoly p = f.primitive_part();
  if (p.lc() < 0) p = -p;
  if (!p.is_monic()) throw domain_error("all_pairs_independent: monic polynomial required");
  if (!is_totally_complex(p)) throw domain_error("all_pairs_independent: real root present");
  const int d = p.degree();
  bool any_unknown = false;
  for (int i = 0; i < d; ++i) {
    NumberField Ki(p, "", static_cast<size_t>(i));
    auto t = independence_triple(Ki, opt);
    if (t.independent == Cert::no) return Cert::no;
    if (t.independent == Cert::unknown) any_unknown = true;
  }
  return any_unknown ? Cert::unknown : Cert::yes;
}

RealSubfieldResult real_subfield_degree(const NumberField& K, const ExpressOptions& opt) {
  const int d = K.degree();
  if (!is_totally_complex(K.poly()))
    throw domain_error("real_subfield_degree: field must be totally complex");
  Cert conj = conj_in_field(K, opt);
  if (conj == Cert::yes) return {d / 2, Cert::yes};
  if (conj == Cert::unknown) return {1, Cert::unknown};

  // conj not in K: [K : K cap R] >= 3, so degree <= d/3.  Search for an
  // irrational real element of K via relations among Im(xi^j).
  // absence here is only budget-certified, so cap the search escalation
  const prec_t search_cap = std::min<prec_t>(opt.prec_cap, 2048);
  int best = 1;
  for (prec_t wp = opt.prec; wp <= search_cap && best == 1; wp *= 2) {
    CBall xi = K.embeddings(wp)[K.gen_index()];
    std::vector<CBall> pw(d);
    for (int j = 0; j < d; ++j) pw[j] = xi.pow(static_cast<unsigned long>(j));
    const long scale = static_cast<long>(wp) - 16;
    ZMat lat(d - 1, std::vector<mpz_class>(d, mpz_class(0)));
    for (int j = 1; j < d; ++j) {
      lat[j - 1][j - 1] = 1;
      Real t(pw[j].mid().im.prec());
      mpfr_mul_2si(t.raw(), pw[j].mid().im.raw(), scale, MPFR_RNDN);
      mpfr_get_z(lat[j - 1][d - 1].get_mpz_t(), t.raw(), MPFR_RNDN);
    }
    lll_reduce(lat);
    for (const auto& row : lat) {
      std::vector<mpq_class> gc(d, mpq_class(0));
      for (int j = 1; j < d; ++j) gc[static_cast<size_t>(j)] = row[j - 1];
      RatPoly g{std::move(gc)};
      if (g.degree() < 1) continue;
      FieldElement w = K.element(RatPoly(g));
      IntPoly mw = w.minpoly();
      if (mw.degree() <= 1) continue;
      // exact reality test: w is real iff its enclosure settles onto a
      // certified real root of its minimal polynomial
      bool real = false, decided = false;
      for (prec_t rp = wp; rp <= opt.prec_cap; rp *= 2) {
        CBall v = w.value(rp);
        if (!v.im_iv().contains_zero()) {
          decided = true;
          break;
        }
        auto roots = certified_roots(mw, rp);
        long hit = -1;
        int hits = 0;
        for (size_t i = 0; i < roots.size(); ++i)
          if (!CBall::disjoint(roots[i].disk, v)) {
            ++hits;
            hit = static_cast<long>(i);
          }
        if (hits == 1 && roots[static_cast<size_t>(hit)].is_real) {
          real = true;
          decided = true;
          break;
        }
      }
      if (decided && real) best = std::max(best, mw.degree());
    }
  }
  if (best == 1) return {1, Cert::unknown};  // budget-bounded absence
  // best is a lower bound; it is exact when no larger admissible degree fits
  for (int e = best + 1; e <= d / 3; ++e)
    if (d % e == 0) return {best, Cert::unknown};
  return {best, Cert::yes};
}

FieldCriteria analyze_field(const NumberField& K, const ExpressOptions& opt) {
  FieldCriteria c;
  c.degree = K.degree();
  c.totally_complex = is_totally_complex(K.poly());
  if (!c.totally_complex) return c;
  c.conj_in_field = conj_in_field(K, opt);
  c.galois = is_galois(K, opt);
  c.independent = independence_triple(K, opt).independent;
  c.all_independent = all_pairs_independent(K.poly(), opt);
  return c;
}

WstarResult classify_wstar(const FieldCriteria& c, int n) {
  const int d = c.degree;
  if (n < 2) return {WstarResult::Kind::out_of_scope, 0, "n must be >= 2"};
  if (!c.totally_complex)
    return {WstarResult::Kind::out_of_scope, 0, "field is not totally complex"};
  if (d < n + 2)
    return {WstarResult::Kind::out_of_scope, 0, "requires n <= d - 2"};
  if (n % 2 == 1) {
    mpq_class w(n - 1, 2);
    w.canonicalize();
    return {WstarResult::Kind::value, w, "odd n"};
  }
  if (n == 2) {
    if (d > 4) return {WstarResult::Kind::value, mpq_class(1, 2), "d > 4"};
    if (c.independent == Cert::yes)
      return {WstarResult::Kind::value, mpq_class(1, 2), "d = 4, independent triple"};
    if (c.independent == Cert::no)
      return {WstarResult::Kind::value, mpq_class(1), "d = 4, dependent triple"};
    return {WstarResult::Kind::undetermined, 0, "independence undecided"};
  }
  if (n == 4) {
    if (d > 6) return {WstarResult::Kind::value, mpq_class(3, 2), "d > 6"};
    // d == 6
    if (c.conj_in_field == Cert::yes)
      return {WstarResult::Kind::value, mpq_class(2), "d = 6, [K : K cap R] = 2"};
    if (c.independent == Cert::no)
      return {WstarResult::Kind::value, mpq_class(2), "d = 6, dependent triple"};
    if (c.conj_in_field == Cert::no && c.independent == Cert::yes)
      return {WstarResult::Kind::value, mpq_class(3, 2),
              "d = 6, index > 2 and independent triple"};
    return {WstarResult::Kind::undetermined, 0, "criteria undecided"};
  }
  // even n >= 6
  if (n + 2 < d && d <= 2 * n - 2 && c.conj_in_field == Cert::yes &&
      c.independent == Cert::yes)
    return {WstarResult::Kind::undetermined, 0, "open exceptional configuration"};
  return {WstarResult::Kind::out_of_scope, 0, "no rule encoded for even n >= 6"};
}

GateResult theorem_gate(const FieldCriteria& c, int n) {
  if (!c.totally_complex) return {false, "field is not totally complex"};
  const int d = c.degree;
  switch (n) {
    case 2:
      if (d < 4) return {false, "requires d >= 4"};
      if (d == 4 && c.independent != Cert::yes)
        return {false, "d = 4 requires a certified independent triple"};
      return {true, d > 4 ? "totally complex, d > 4" : "totally complex quartic, independent triple"};
    case 3:
      if (d < 6) return {false, "requires d >= 6"};
      if (c.galois != Cert::yes) return {false, "requires a certified Galois field"};
      return {true, "totally complex Galois, d >= 6"};
    case 4:
      if (d < 8) return {false, "requires d >= 8"};
      if (c.galois != Cert::yes) return {false, "requires a certified Galois field"};
      if (c.all_independent != Cert::yes)
        return {false, "requires certified independence for every conjugate"};
      return {true, "totally complex Galois, d >= 8, all conjugate triples independent"};
    default:
      return {false, "no effective theorem encoded for this n"};
  }
}

}  // namespace algx
