#include "algx/approx.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>

#include "algx/errors.hpp"
#include "algx/factor.hpp"

namespace algx {

namespace {

constexpr prec_t kSelectCap = 1 << 14;

// element of Q(sqrt(r), i sqrt(s)): c0 + c1 u + c2 v + c3 uv with
// u^2 = r, v^2 = -s
struct QuarticElt {
  mpq_class c[4];
};

QuarticElt qmul(const QuarticElt& a, const QuarticElt& b, const mpz_class& r,
                const mpz_class& s) {
  QuarticElt o;
  mpq_class R(r), S(s);
  o.c[0] = a.c[0] * b.c[0] + R * a.c[1] * b.c[1] - S * a.c[2] * b.c[2] -
           R * S * a.c[3] * b.c[3];
  o.c[1] = a.c[0] * b.c[1] + a.c[1] * b.c[0] - S * a.c[2] * b.c[3] -
           S * a.c[3] * b.c[2];
  o.c[2] = a.c[0] * b.c[2] + a.c[2] * b.c[0] + R * a.c[1] * b.c[3] +
           R * a.c[3] * b.c[1];
  o.c[3] = a.c[0] * b.c[3] + a.c[3] * b.c[0] + a.c[1] * b.c[2] +
           a.c[2] * b.c[1];
  return o;
}

// x + y sqrt(r)
struct QuadElt {
  mpq_class x, y;
};

int quad_sign(const QuadElt& q, const mpz_class& r) {
  int sx = sgn(q.x), sy = sgn(q.y);
  if (sx == 0 && sy == 0) return 0;
  if (sx >= 0 && sy >= 0) return 1;
  if (sx <= 0 && sy <= 0) return -1;
  int c = cmp(q.x * q.x, q.y * q.y * mpq_class(r));
  if (c == 0) return 0;
  if (sx > 0) return c > 0 ? 1 : -1;  // y < 0
  return c < 0 ? 1 : -1;              // x < 0, y > 0
}

// |z|^2 for z in Q(sqrt(r), i sqrt(s)); lands in Q(sqrt(r))
QuadElt abs_sq(const QuarticElt& z, const mpz_class& r, const mpz_class& s) {
  QuarticElt zc = z;
  zc.c[2] = -zc.c[2];
  zc.c[3] = -zc.c[3];
  QuarticElt p = qmul(z, zc, r, s);
  if (p.c[2] != 0 || p.c[3] != 0)
    throw domain_error("abs_sq: product is not in the real subfield");
  return {p.c[0], p.c[1]};
}

CBall ball_from(const RIv& re, const RIv& im) {
  Complex mid(re.mid(), im.mid());
  Real w = re.width() + im.width();
  mpfr_nextabove(w.raw());
  mpfr_nextabove(w.raw());
  return CBall(std::move(mid), std::move(w));
}

// The algebraic number among the roots of p certified to lie inside the
// enclosures produced by `value`.
AlgebraicNumber select_root(const IntPoly& p,
                            const std::function<CBall(prec_t)>& value,
                            prec_t prec) {
  Factorization fz = factor_over_q(p);
  for (prec_t wp = prec; wp <= kSelectCap; wp *= 2) {
    CBall val = value(wp);
    const IntPoly* hit = nullptr;
    bool ambiguous = false;
    for (const auto& [h, mult] : fz.factors) {
      if (h.eval_ball(val).contains_zero()) {
        if (hit) ambiguous = true;
        hit = &h;
      }
    }
    if (!hit) throw domain_error("select_root: value is not a root");
    if (ambiguous) continue;
    std::vector<RootDisk> roots = certified_roots(*hit, wp);
    const RootDisk* found = nullptr;
    bool clash = false;
    for (const auto& rd : roots) {
      if (!CBall::disjoint(rd.disk, val)) {
        if (found) clash = true;
        found = &rd;
      }
    }
    if (!found || clash) continue;
    return AlgebraicNumber(*hit, found->disk);
  }
  throw precision_cap_reached("select_root: value could not be isolated");
}

RIv log_height(const mpz_class& h, prec_t wp) {
  return log(RIv::exact(mpq_class(h), wp));
}

RIv exponent_of(const RIv& dist, const mpz_class& h, prec_t wp) {
  if (h <= 1) return RIv::of_int(0);
  return -log(dist) / log_height(h, wp);
}

// H^{d/2} as a rigorous interval
RIv height_power(const mpz_class& h, int d, prec_t wp) {
  mpz_class hp;
  if (d % 2 == 0) {
    mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), d / 2);
    return RIv::exact(mpq_class(hp), wp);
  }
  mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), d);
  return sqrt(RIv::exact(mpq_class(hp), wp));
}

std::vector<std::complex<double>> double_roots(const std::vector<double>& c) {
  int deg = static_cast<int>(c.size()) - 1;
  std::vector<std::complex<double>> out;
  if (deg == 1) {
    out.emplace_back(-c[0] / c[1], 0.0);
    return out;
  }
  if (deg == 2) {
    std::complex<double> disc(c[1] * c[1] - 4.0 * c[2] * c[0], 0.0);
    std::complex<double> sq = std::sqrt(disc);
    out.push_back((-c[1] + sq) / (2.0 * c[2]));
    out.push_back((-c[1] - sq) / (2.0 * c[2]));
    return out;
  }
  // Durand-Kerner
  double scale = 0.0;
  for (double x : c) scale = std::max(scale, std::abs(x));
  double radius = 1.0 + scale / std::abs(c.back());
  std::vector<std::complex<double>> z(deg);
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> pt(1.0, 0.0);
  for (int i = 0; i < deg; ++i) {
    pt *= seed;
    z[i] = radius * pt;
  }
  auto eval = [&](std::complex<double> x) {
    std::complex<double> v = 0.0;
    for (int i = deg; i >= 0; --i) v = v * x + c[i];
    return v;
  };
  for (int it = 0; it < 80; ++it) {
    for (int i = 0; i < deg; ++i) {
      std::complex<double> den = c.back();
      for (int j = 0; j < deg; ++j)
        if (j != i) den *= z[i] - z[j];
      if (std::abs(den) == 0.0) continue;
      z[i] -= eval(z[i]) / den;
    }
  }
  return z;
}

}  // namespace

std::vector<PellSolution> pell_solve(const mpz_class& r, int count) {
  if (r < 2 || mpz_perfect_square_p(r.get_mpz_t()))
    throw domain_error("pell_solve: r must be a non-square integer >= 2");
  if (count < 1) return {};
  mpz_class a0;
  mpz_sqrt(a0.get_mpz_t(), r.get_mpz_t());
  mpz_class m = 0, den = 1, a = a0;
  mpz_class p_prev = 1, p = a0, q_prev = 0, q = 1;
  while (p * p - r * q * q != 1) {
    m = den * a - m;
    den = (r - m * m) / den;
    a = (a0 + m) / den;
    mpz_class pn = a * p + p_prev, qn = a * q + q_prev;
    p_prev = p;
    p = pn;
    q_prev = q;
    q = qn;
  }
  std::vector<PellSolution> out;
  mpz_class x = p, y = q;
  for (int i = 0; i < count; ++i) {
    out.push_back({r, x, y});
    mpz_class xn = p * x + r * q * y, yn = p * y + q * x;
    x = xn;
    y = yn;
  }
  return out;
}

PellApproximant pell_approximant(const mpz_class& r, const mpz_class& s,
                                 const PellSolution& sol, prec_t prec) {
  if (r < 2 || mpz_perfect_square_p(r.get_mpz_t()))
    throw domain_error("pell_approximant: r must be a non-square integer >= 2");
  if (s < 1) throw domain_error("pell_approximant: s must be positive");
  const mpz_class &a = sol.a, &b = sol.b;
  if (a < 1 || b < 1 || a * a - r * b * b != 1)
    throw domain_error("pell_approximant: (a, b) does not solve the Pell equation");

  IntPoly P(std::vector<mpz_class>{(r + s) * b, -2 * a, b});
  mpz_class h_p = P.naive_height();
  mpz_class h_pp = P.primitive_part().naive_height();

  // first displayed bound, exactly in Q(sqrt r):
  //   |P(xi)|^2 <= 4(r+s)/(a+b sqrt r)^2 <= (2s(r+s)/H(P))^2
  QuarticElt xi_e{{0, 1, 1, 0}};  // sqrt(r) + i sqrt(s)
  QuarticElt val{{0, 0, 0, 0}};
  for (int i = P.degree(); i >= 0; --i) {
    val = qmul(val, xi_e, r, s);
    val.c[0] += mpq_class(P[i]);
  }
  QuadElt lhs_sq = abs_sq(val, r, s);
  // 1/(a+b sqrt r) = a - b sqrt r, so the middle term is 4(r+s)(a-b sqrt r)^2
  mpq_class rs(r + s);
  QuadElt mid_sq{4 * rs * mpq_class(a * a + b * b * r),
                 4 * rs * mpq_class(-2 * a * b)};
  mpq_class rhs_q = 2 * mpq_class(s) * rs / mpq_class(h_p);
  QuadElt rhs_sq{rhs_q * rhs_q, 0};
  QuadElt d1{mid_sq.x - lhs_sq.x, mid_sq.y - lhs_sq.y};
  QuadElt d2{rhs_sq.x - mid_sq.x, rhs_sq.y - mid_sq.y};
  if (quad_sign(d1, r) < 0 || quad_sign(d2, r) < 0)
    throw domain_error("pell_approximant: displayed bound failed exact verification");

  auto xi_value = [&](prec_t wp) {
    RIv re = sqrt(RIv::exact(mpq_class(r), wp));
    RIv im = sqrt(RIv::exact(mpq_class(s), wp));
    return ball_from(re, im);
  };
  // minimal polynomial of xi divides X^4 - 2(r-s) X^2 + (r+s)^2
  IntPoly quartic(std::vector<mpz_class>{(r + s) * (r + s), 0, -2 * (r - s), 0, 1});
  AlgebraicNumber xi = select_root(quartic, xi_value, prec);

  Factorization fz = factor_over_q(P);
  bool reducible = fz.factors.size() > 1 || fz.factors[0].second > 1 ||
                   fz.factors[0].first.degree() < P.degree();

  struct Cand {
    const IntPoly* h;
    CBall disk;
    RIv dist;
  };
  std::optional<Cand> nearest;
  for (prec_t wp = prec; wp <= kSelectCap && !nearest; wp *= 2) {
    CBall xb = xi_value(wp);
    std::vector<Cand> cands;
    for (const auto& [h, mult] : fz.factors) {
      for (const auto& rd : certified_roots(h, wp))
        cands.push_back({&h, rd.disk, (xb - rd.disk).abs()});
    }
    size_t mi = 0;
    for (size_t i = 1; i < cands.size(); ++i)
      if (cands[i].dist.hi() < cands[mi].dist.hi()) mi = i;
    if (!cands[mi].dist.strictly_positive()) continue;
    bool decided = true;
    for (size_t i = 0; i < cands.size() && decided; ++i)
      if (i != mi && !RIv::certainly_less(cands[mi].dist, cands[i].dist)) {
        // tie: prefer the root in the upper half plane
        if (cands[mi].disk.im_iv().strictly_positive()) continue;
        decided = false;
      }
    if (decided) nearest = cands[mi];
  }
  if (!nearest)
    throw precision_cap_reached("pell_approximant: nearest root undecided");

  AlgebraicNumber alpha(*nearest->h, nearest->disk);
  mpz_class h_alpha = naive_height(alpha.minpoly());

  // second displayed bound: |xi - alpha| <= 2 (r+s)^2 / H(alpha)^2
  mpq_class bound2 = 2 * rs * rs / mpq_class(h_alpha * h_alpha);
  RIv dist = nearest->dist;
  {
    prec_t wp = std::max<prec_t>(prec, nearest->disk.prec());
    while (!RIv::certainly_leq(dist, RIv::exact(bound2, wp))) {
      wp *= 2;
      if (wp > kSelectCap)
        throw precision_cap_reached("pell_approximant: distance bound unverified");
      CBall disk = refine_root(alpha.minpoly(), nearest->disk, wp);
      dist = (xi_value(wp) - disk).abs();
    }
  }

  ApproximationRecord rec{alpha, h_alpha, dist, exponent_of(dist, h_alpha, prec)};
  return PellApproximant{sol, P, h_p, h_pp, reducible, xi, std::move(rec)};
}

AlgebraicNumber surd_family(const std::vector<mpz_class>& d_list, prec_t prec) {
  if (d_list.empty()) throw domain_error("surd_family: empty surd list");
  for (const mpz_class& d : d_list) {
    if (d < 1) throw domain_error("surd_family: surds must be positive");
    for (mpz_class f = 2; f * f <= d; ++f)
      if (mpz_divisible_p(d.get_mpz_t(), mpz_class(f * f).get_mpz_t()))
        throw domain_error("surd_family: " + d.get_str() + " is not squarefree");
  }
  for (size_t i = 0; i < d_list.size(); ++i)
    for (size_t j = i + 1; j < d_list.size(); ++j) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), d_list[i].get_mpz_t(), d_list[j].get_mpz_t());
      if (g != 1) throw domain_error("surd_family: surds must be pairwise coprime");
    }

  // fold in one surd at a time: given p with root set A and T^2 = e, the
  // polynomial with roots A + sqrt(e) is Res_T(T^2 - e, p(X - T)) = A^2 - e B^2
  // where p(X - T) = A(X) + B(X) T mod (T^2 - e)
  auto fold = [](const IntPoly& p, const mpz_class& e) {
    IntPoly A, B;
    for (int i = p.degree(); i >= 0; --i) {
      IntPoly An = IntPoly(std::vector<mpz_class>{0, 1}) * A - B * e;
      IntPoly Bn = IntPoly(std::vector<mpz_class>{0, 1}) * B - A;
      A = An + IntPoly::constant(p[i]);
      B = Bn;
    }
    return A * A - B * B * e;
  };
  IntPoly p = IntPoly::x();
  size_t k = d_list.size();
  for (size_t i = 0; i + 1 < k; ++i) p = fold(p, d_list[i]);
  p = fold(p, -d_list[k - 1]);

  auto value = [&](prec_t wp) {
    RIv re = RIv::of_int(0);
    for (size_t i = 0; i + 1 < k; ++i)
      re = re + sqrt(RIv::exact(mpq_class(d_list[i]), wp));
    RIv im = sqrt(RIv::exact(mpq_class(d_list[k - 1]), wp));
    return ball_from(re, im);
  };
  return select_root(p, value, prec);
}

ExponentReport estimate_exponents(const AlgebraicNumber& xi, int n,
                                  const mpz_class& H_max,
                                  const EstimateOptions& opt) {
  if (n < 0) throw domain_error("estimate_exponents: negative degree bound");
  if (H_max < 1) throw domain_error("estimate_exponents: H_max must be >= 1");
  if (!H_max.fits_slong_p())
    throw domain_error("estimate_exponents: H_max too large to enumerate");
  const long hmax = H_max.get_si();
  const int d = xi.degree();

  ExponentReport rep;
  rep.degree_warning = n > d - 2;

  const prec_t wp = opt.prec;
  CBall xb = xi.enclosure(wp);
  std::vector<CBall> pw{CBall::exact(1, 0, wp)};
  for (int j = 1; j <= n; ++j) pw.push_back(pw.back() * xb);
  const std::complex<double> xd(xb.mid().re.to_double(), xb.mid().im.to_double());

  std::optional<RIv> minval, mindist, floor_iv;
  std::optional<ApproximationRecord> best;

  auto certified_value = [&](const std::vector<long>& c) -> std::optional<RIv> {
    for (prec_t vp = wp; vp <= opt.prec_cap; vp *= 2) {
      CBall acc = CBall::exact(0, 0, vp);
      if (vp == wp) {
        for (int j = 0; j <= n; ++j)
          if (c[j] != 0) acc = acc + pw[j] * CBall::exact_int(c[j], vp);
      } else {
        CBall xv = xi.enclosure(vp);
        for (int j = n; j >= 0; --j)
          acc = acc * xv + CBall::exact_int(c[j], vp);
      }
      RIv v = acc.abs();
      if (v.strictly_positive()) return v;
      // exact vanishing is possible only when P is a multiple of the minpoly
      if (n >= d) {
        std::vector<mpq_class> qc(c.begin(), c.end());
        RatPoly rem = RatPoly(std::move(qc)).mod(RatPoly(xi.minpoly()));
        if (rem.is_zero()) return std::nullopt;
      }
    }
    throw precision_cap_reached("estimate_exponents: |P(xi)| not separated from zero");
  };

  auto certify_roots = [&](const std::vector<long>& c) {
    std::vector<mpz_class> zc(c.begin(), c.end());
    Factorization fz = factor_over_q(IntPoly(std::move(zc)));
    for (const auto& [h, mult] : fz.factors) {
      if (h.degree() < 1) continue;
      if (h == xi.minpoly()) continue;
      mpz_class hh = naive_height(h);
      for (const auto& rd : certified_roots(h, wp)) {
        CBall disk = rd.disk;
        RIv dist = (xb - disk).abs();
        for (prec_t vp = wp; !dist.strictly_positive(); ) {
          vp *= 2;
          if (vp > opt.prec_cap)
            throw precision_cap_reached("estimate_exponents: distance not separated");
          disk = refine_root(h, disk, vp);
          dist = (xi.enclosure(vp) - disk).abs();
        }
        if (!mindist || dist.hi() < mindist->hi()) mindist = dist;
        RIv prod = dist * height_power(hh, d, wp);
        if (!floor_iv || prod.hi() < floor_iv->hi()) floor_iv = prod;
        RIv expo = exponent_of(dist, hh, wp);
        if (!best || expo.hi() > best->exponent.hi())
          best = ApproximationRecord{AlgebraicNumber(h, disk), hh, dist, expo};
      }
    }
  };

  std::vector<long> c(n + 1, 0);
  auto t0 = std::chrono::steady_clock::now();
  for (long H = 1; H <= hmax; ++H) {
    // polynomials of naive height exactly H, leading nonzero coefficient > 0
    std::function<void(int, bool)> scan = [&](int idx, bool hit) {
      if (idx < 0) {
        if (!hit) return;
        int top = n;
        while (top >= 0 && c[top] == 0) --top;
        if (top < 0 || c[top] < 0) return;

        double est = 0.0;
        {
          std::complex<double> v = 0.0;
          for (int j = n; j >= 0; --j) v = v * xd + double(c[j]);
          est = std::abs(v);
        }
        if (!minval || est < 1.5 * minval->hi().to_double()) {
          if (auto v = certified_value(c))
            if (!minval || v->hi() < minval->hi()) minval = *v;
        }
        if (top >= 1) {
          std::vector<double> dc(c.begin(), c.begin() + top + 1);
          double dist_est = 1e300;
          for (const auto& z : double_roots(dc))
            dist_est = std::min(dist_est, std::abs(z - xd));
          double thr = 1e300;
          if (mindist) thr = 1.5 * mindist->hi().to_double();
          if (floor_iv) thr = std::max(thr, 1.5 * floor_iv->hi().to_double());
          if (dist_est < thr) certify_roots(c);
        }
        return;
      }
      for (long v = -H; v <= H; ++v) {
        c[idx] = v;
        scan(idx - 1, hit || v == H || v == -H);
      }
      c[idx] = 0;
    };
    scan(n, false);

    if (H >= 2) {
      RIv logh = log_height(H, wp);
      ExponentRow row;
      row.H = H;
      row.min_poly_value = minval ? *minval : RIv::of_int(0);
      row.min_distance = mindist ? *mindist : RIv::of_int(0);
      row.w_running = minval ? -log(*minval) / logh : RIv::of_int(0);
      row.wstar_running =
          mindist ? -log(*mindist) / logh - RIv::of_int(1) : RIv::of_int(0);
      rep.rows.push_back(std::move(row));
    }
    if (opt.budget_ms > 0) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      if (ms > static_cast<long long>(opt.budget_ms) && H < hmax) {
        rep.partial = true;
        break;
      }
    }
  }
  rep.best = std::move(best);
  rep.liouville_floor = floor_iv ? *floor_iv : RIv::of_int(0);
  return rep;
}

TransferenceReport transference_check(const AlgebraicNumber& xi,
                                      const std::vector<AlgebraicNumber>& samples,
                                      prec_t prec) {
  TransferenceReport rep;
  for (const AlgebraicNumber& s : samples) {
    IntPoly P = s.minpoly();
    mpz_class h = naive_height(P);
    for (prec_t vp = prec;; vp *= 2) {
      if (vp > kSelectCap)
        throw precision_cap_reached("transference_check: sample not separated from xi");
      CBall xb = xi.enclosure(vp);
      RIv pv = P.eval_ball(xb).abs();
      RIv dist = (xb - s.enclosure(vp)).abs();
      if (!pv.strictly_positive() || !dist.strictly_positive()) continue;
      RIv ratio = pv / (RIv::exact(mpq_class(h), vp) * dist);
      ApproximationRecord rec{s, h, dist, exponent_of(dist, h, vp)};
      rep.rows.push_back({std::move(rec), pv, ratio});
      break;
    }
  }
  if (!rep.rows.empty()) {
    RIv c2 = rep.rows.front().ratio;
    for (const auto& row : rep.rows)
      if (row.ratio.hi() > c2.hi()) c2 = row.ratio;
    rep.c2_empirical = c2;
  }
  return rep;
}

}  // namespace algx
