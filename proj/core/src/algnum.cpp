#include "algx/algnum.hpp"

#include <algorithm>
#include <cmath>

#include "algx/errors.hpp"
#include "algx/factor.hpp"
#include "algx/linalg.hpp"
#include "algx/lll.hpp"
#include "algx/sturm.hpp"

namespace algx {

namespace {

IntPoly normalize_minpoly(IntPoly p) {
  p = p.primitive_part();
  if (p.lc() < 0) p = -p;
  return p;
}

// Roots in the canonical order: descending |root|, ties broken by
// descending imaginary part, then descending real part.
std::vector<CBall> canonical_root_disks(const IntPoly& p, prec_t prec) {
  auto roots = certified_roots(p, prec);
  std::vector<CBall> disks;
  disks.reserve(roots.size());
  for (auto& r : roots) disks.push_back(r.disk);
  std::sort(disks.begin(), disks.end(), [](const CBall& a, const CBall& b) {
    double aa = a.mid().abs().to_double(), bb = b.mid().abs().to_double();
    if (aa != bb) return aa > bb;
    double ai = a.mid().im.to_double(), bi = b.mid().im.to_double();
    if (ai != bi) return ai > bi;
    return a.mid().re.to_double() > b.mid().re.to_double();
  });
  return disks;
}

// round(x * 2^scale) as an integer
mpz_class scaled_int(const Real& x, long scale) {
  Real t(x.prec());
  mpfr_mul_2si(t.raw(), x.raw(), scale, MPFR_RNDN);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), t.raw(), MPFR_RNDN);
  return z;
}

}  // namespace

// ---------------------------------------------------------------------------
// AlgebraicNumber
// ---------------------------------------------------------------------------

AlgebraicNumber::AlgebraicNumber(IntPoly minpoly, CBall disk)
    : minpoly_(normalize_minpoly(std::move(minpoly))), disk_(std::move(disk)) {
  if (minpoly_.degree() < 1)
    throw domain_error("AlgebraicNumber: minimal polynomial must be nonconstant");
  if (!is_irreducible_q(minpoly_))
    throw domain_error("AlgebraicNumber: minimal polynomial must be irreducible");
  if (!minpoly_.eval_ball(disk_).contains_zero())
    throw domain_error("AlgebraicNumber: disk contains no root of the minimal polynomial");
}

AlgebraicNumber AlgebraicNumber::rational(const mpq_class& q) {
  // root of den*X - num
  IntPoly p(std::vector<mpz_class>{-q.get_num(), q.get_den()});
  return AlgebraicNumber(p, CBall::exact(q, mpq_class(0), 128));
}

AlgebraicNumber AlgebraicNumber::root_of(const IntPoly& irreducible, size_t index,
                                         prec_t prec) {
  IntPoly p = normalize_minpoly(irreducible);
  auto disks = canonical_root_disks(p, prec);
  if (index >= disks.size()) throw domain_error("root_of: index out of range");
  return AlgebraicNumber(p, disks[index]);
}

CBall AlgebraicNumber::enclosure(prec_t prec) const {
  return refine_root(minpoly_, disk_, prec);
}

AlgebraicNumber AlgebraicNumber::conj() const {
  return AlgebraicNumber(minpoly_, disk_.conj());
}

mpq_class AlgebraicNumber::as_rational() const {
  if (degree() != 1) throw domain_error("as_rational: degree > 1");
  return mpq_class(-minpoly_[0]) / mpq_class(minpoly_[1]);
}

// ---------------------------------------------------------------------------
// heights
// ---------------------------------------------------------------------------

mpz_class naive_height(const IntPoly& minpoly) {
  return normalize_minpoly(minpoly).naive_height();
}

RIv weil_height(const IntPoly& minpoly, prec_t prec) {
  IntPoly p = normalize_minpoly(minpoly);
  if (p.degree() < 1) throw domain_error("weil_height: degree must be >= 1");
  RIv acc = log(RIv::exact(mpq_class(p.lc()), prec));
  for (const auto& r : certified_roots(p, prec)) {
    RIv term = log(r.disk.abs().max1());
    for (int i = 0; i < r.multiplicity; ++i) acc = acc + term;
  }
  return acc / RIv::of_int(p.degree());
}

// ---------------------------------------------------------------------------
// NumberField / FieldElement
// ---------------------------------------------------------------------------

NumberField::NumberField(IntPoly f, std::string label, size_t gen_index)
    : poly_(std::move(f)), label_(std::move(label)), gen_index_(gen_index) {
  if (poly_.degree() < 1 || !poly_.is_monic())
    throw domain_error("NumberField: defining polynomial must be monic of degree >= 1");
  if (!is_irreducible_q(poly_))
    throw domain_error("NumberField: defining polynomial must be irreducible");
  if (gen_index_ >= static_cast<size_t>(poly_.degree()))
    throw domain_error("NumberField: generator index out of range");
  base_roots_ = canonical_root_disks(poly_, 256);
}

FieldElement NumberField::element(RatPoly rep) const {
  return FieldElement(this, rep.mod(RatPoly(poly_)));
}

FieldElement NumberField::gen() const { return element(RatPoly::x()); }

FieldElement NumberField::from_rational(const mpq_class& q) const {
  return element(RatPoly::constant(q));
}

std::vector<CBall> NumberField::embeddings(prec_t prec) const {
  std::vector<CBall> out;
  out.reserve(base_roots_.size());
  for (const auto& b : base_roots_) out.push_back(refine_root(poly_, b, prec));
  return out;
}

std::vector<std::vector<CBall>> NumberField::embedding_matrix(prec_t prec) const {
  const size_t d = base_roots_.size();
  auto emb = embeddings(prec + 64);
  std::vector<std::vector<CBall>> m(d);
  for (size_t i = 0; i < d; ++i) {
    m[i].reserve(d);
    for (size_t j = 0; j < d; ++j) m[i].push_back(emb[i].pow(j));
  }
  return m;
}

AlgebraicNumber NumberField::gen_value(prec_t prec) const {
  return AlgebraicNumber(poly_, refine_root(poly_, base_roots_[gen_index_], prec));
}

mpq_class FieldElement::as_rational() const {
  if (rep_.degree() > 0) throw domain_error("as_rational: element not rational");
  return rep_[0];
}

namespace {

const NumberField* common_field(const FieldElement& a, const FieldElement& b) {
  if (&a.field() != &b.field() && a.field().poly() != b.field().poly())
    throw domain_error("FieldElement: operands from different fields");
  return &a.field();
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return common_field(a, b)->element(a.rep() + b.rep());
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return common_field(a, b)->element(a.rep() - b.rep());
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return common_field(a, b)->element(a.rep() * b.rep());
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return a * b.inverse();
}
FieldElement FieldElement::operator-() const { return field_->element(-rep_); }

FieldElement FieldElement::inverse() const {
  if (rep_.is_zero()) throw domain_error("FieldElement: division by zero");
  return field_->element(invert_mod(rep_, field_->poly()));
}

FieldElement FieldElement::pow(unsigned long e) const {
  FieldElement acc = field_->from_rational(1);
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return common_field(a, b) != nullptr && a.rep() == b.rep();
}

RatPoly FieldElement::charpoly() const {
  const int d = field_->degree();
  if (rep_.degree() <= 0) {
    // (X - c)^d
    mpq_class c = rep_.is_zero() ? mpq_class(0) : rep_[0];
    RatPoly lin(std::vector<mpq_class>{-c, 1});
    RatPoly acc = RatPoly::constant(1);
    for (int i = 0; i < d; ++i) acc = acc * lin;
    return acc;
  }
  // charpoly(X) = Res_y(f(y), X - g(y)); interpolate from integer resultants
  auto [G, e] = rep_.clear_denominators();
  mpz_class ed;
  mpz_pow_ui(ed.get_mpz_t(), e.get_mpz_t(), d);
  std::vector<mpq_class> xs(d + 1), ys(d + 1);
  for (int k = 0; k <= d; ++k) {
    IntPoly second = IntPoly::constant(e * k) - G;
    xs[k] = k;
    ys[k] = mpq_class(resultant(field_->poly(), second)) / mpq_class(ed);
  }
  // Vandermonde solve for the coefficients
  QMat m(d + 1, std::vector<mpq_class>(d + 1));
  for (int i = 0; i <= d; ++i) {
    mpq_class pw = 1;
    for (int j = 0; j <= d; ++j) {
      m[i][j] = pw;
      pw *= xs[i];
    }
  }
  auto coef = solve_q(m, ys);
  RatPoly cp{std::vector<mpq_class>(coef)};
  if (cp.degree() != d || cp.lc() != 1)
    throw domain_error("charpoly: interpolation produced a non-monic result");
  return cp;
}

IntPoly FieldElement::minpoly() const {
  auto [z, den] = charpoly().clear_denominators();
  return normalize_minpoly(squarefree_part(z));
}

mpq_class FieldElement::norm() const {
  RatPoly cp = charpoly();
  mpq_class v = cp[0];
  return (field_->degree() % 2 == 0) ? v : -v;
}

mpq_class FieldElement::trace() const {
  RatPoly cp = charpoly();
  return -cp[field_->degree() - 1];
}

CBall FieldElement::embed(size_t i, prec_t prec) const {
  auto emb = field_->embeddings(prec);
  if (i >= emb.size()) throw domain_error("embed: index out of range");
  return rep_.eval_ball(emb[i]);
}

// ---------------------------------------------------------------------------
// express_in_field
// ---------------------------------------------------------------------------

namespace {

// Locate the unique root disk of h meeting the (tiny) ball enclosing beta.
// Returns -1 when ambiguous at this precision.
long locate_root(const std::vector<RootDisk>& hroots, const CBall& tiny) {
  long match = -1;
  for (size_t i = 0; i < hroots.size(); ++i) {
    if (!CBall::disjoint(hroots[i].disk, tiny)) {
      if (match >= 0) return -1;
      match = static_cast<long>(i);
    }
  }
  return match;
}

}  // namespace

ExpressResult express_in_field(const NumberField& K, const AlgebraicNumber& beta,
                               const ExpressOptions& opt) {
  const int d = K.degree();
  if (beta.is_rational())
    return {Cert::yes, K.from_rational(beta.as_rational())};
  if (d % beta.degree() != 0) return {Cert::no, std::nullopt};

  const IntPoly& h = beta.minpoly();
  const mpz_class D = abs(discriminant(K.poly()));
  const mpz_class L = abs(h.lc());
  const mpz_class DL = D * L;

  for (prec_t wp = opt.prec; wp <= opt.prec_cap; wp *= 2) {
    auto emb = K.embeddings(wp);
    const CBall& theta = emb[K.gen_index()];
    CBall betaB = refine_root(h, beta.disk(), wp);
    auto hroots = certified_roots(h, wp);
    long beta_idx = locate_root(hroots, betaB);
    if (beta_idx < 0) continue;

    // powers of theta and the scaled lattice
    std::vector<CBall> pw(d);
    for (int j = 0; j < d; ++j) pw[j] = theta.pow(j);
    const long scale = static_cast<long>(wp) - 16;
    Real maxrad = betaB.rad();
    for (const auto& b : pw) maxrad = max(maxrad, b.rad());

    ZMat lat(d + 1, std::vector<mpz_class>(d + 3, mpz_class(0)));
    for (int j = 0; j < d; ++j) {
      lat[j][j] = 1;
      lat[j][d + 1] = scaled_int(pw[j].mid().re, scale);
      lat[j][d + 2] = scaled_int(pw[j].mid().im, scale);
    }
    lat[d][d] = 1;
    lat[d][d + 1] = -scaled_int(betaB.mid().re, scale);
    lat[d][d + 2] = -scaled_int(betaB.mid().im, scale);
    lll_reduce(lat);

    // candidate verification: row (a_0..a_{d-1}, b, *, *) suggests
    // beta = (1/b) sum a_j theta^j
    for (const auto& row : lat) {
      const mpz_class& b = row[d];
      if (b == 0) continue;
      std::vector<mpq_class> gc(d);
      for (int j = 0; j < d; ++j) gc[j] = mpq_class(row[j]) / mpq_class(b);
      RatPoly g{std::move(gc)};
      if (!compose_mod(RatPoly(h), g, K.poly()).is_zero()) continue;
      // g(theta) is a conjugate of beta; identify which one
      FieldElement cand = K.element(g);
      bool decided = false;
      for (prec_t rp = wp; rp <= opt.prec_cap; rp *= 2) {
        CBall cv = cand.value(rp);
        long idx = locate_root(hroots, cv);
        if (idx < 0) continue;
        if (idx == beta_idx) return {Cert::yes, std::move(cand)};
        decided = true;  // wrong conjugate, keep scanning rows
        break;
      }
      (void)decided;
    }

    // absence certificate via the LLL approximation bound
    Real slackR = maxrad;
    mpfr_mul_2si(slackR.raw(), slackR.raw(), scale, MPFR_RNDU);
    if (!(slackR < 0.5)) continue;

    // |m_j| <= d * max_i ||row_i of V^{-1}||_inf * |sigma_i(D L beta)|
    RIv p1 = RIv::of_int(1);
    bool certifiable = true;
    for (const auto& t : emb) p1 = p1 * (RIv::of_int(1) + t.abs());
    RIv vmax = RIv::of_int(0);
    for (int i = 0; i < d && certifiable; ++i) {
      RIv den = RIv::of_int(1);
      for (int k = 0; k < d; ++k) {
        if (k == i) continue;
        RIv gap = (emb[i] - emb[k]).abs();
        if (!gap.strictly_positive()) {
          certifiable = false;
          break;
        }
        den = den * gap;
      }
      if (!certifiable) break;
      RIv cur = p1 / den;
      vmax = RIv::hull(vmax, cur);
    }
    if (!certifiable) continue;
    RIv mbeta = RIv::of_int(0);
    for (const auto& r : hroots) mbeta = RIv::hull(mbeta, r.disk.abs());
    RIv mcoef = RIv::of_int(d) * vmax * RIv::exact(mpq_class(DL)) * mbeta.max1();
    mpq_class mc = mcoef.hi().to_mpq();
    mpz_class M_all = mc.get_num() / mc.get_den() + 1;
    if (M_all < DL) M_all = DL;
    mpz_class B_true = 3 * (d + 1) * (d + 1) * M_all * M_all;
    mpz_class lhs = norm_sqr(lat[0]);
    mpz_class gate = B_true;
    gate <<= d;  // 2^d * B_true
    if (lhs > gate) return {Cert::no, std::nullopt};
  }
  return {Cert::unknown, std::nullopt};
}

}  // namespace algx
