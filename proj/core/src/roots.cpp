#include "algx/roots.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "algx/errors.hpp"
#include "algx/ratpoly.hpp"
#include "algx/sturm.hpp"

namespace algx {

namespace {

// Yun decomposition: pairs (squarefree primitive part, multiplicity).
std::vector<std::pair<IntPoly, int>> yun_parts(const IntPoly& p) {
  RatPoly a(p.primitive_part());
  RatPoly d = a.derivative();
  RatPoly g = RatPoly::gcd(a, d);
  RatPoly b = RatPoly::divrem(a, g).first;
  RatPoly c = RatPoly::divrem(d, g).first - b.derivative();
  std::vector<std::pair<IntPoly, int>> out;
  int mult = 0;
  while (b.degree() >= 1) {
    ++mult;
    RatPoly h = RatPoly::gcd(b, c);
    if (h.degree() >= 1) {
      auto [z, den] = h.clear_denominators();
      IntPoly prim = z.primitive_part();
      if (prim.lc() < 0) prim = -prim;
      out.emplace_back(prim, mult);
    }
    b = RatPoly::divrem(b, h).first;
    c = RatPoly::divrem(c, h).first - b.derivative();
  }
  return out;
}

Complex horner(const std::vector<Real>& coef, const Complex& z) {
  Complex acc(coef.back(), Real(0.0, z.prec()));
  for (size_t i = coef.size() - 1; i-- > 0;) {
    acc = acc * z;
    acc.re += coef[i];
  }
  return acc;
}

// Aberth-Ehrlich simultaneous iteration; returns deg(s) approximations.
std::vector<Complex> aberth(const IntPoly& s, prec_t wp) {
  const int d = s.degree();
  std::vector<Real> cf, cfd;
  cf.reserve(d + 1);
  for (const auto& a : s.coeffs()) cf.push_back(Real::of(a, wp));
  IntPoly sd = s.derivative();
  for (const auto& a : sd.coeffs()) cfd.push_back(Real::of(a, wp));

  // initial points on a ring at the Cauchy bound
  double mx = 0;
  double lc = std::abs(s.lc().get_d());
  for (int i = 0; i < d; ++i) mx = std::max(mx, std::abs(s[i].get_d()));
  double ring = 1.0 + mx / lc;
  if (!std::isfinite(ring) || ring > 1e18) ring = 1e18;
  std::vector<Complex> z;
  z.reserve(d);
  for (int k = 0; k < d; ++k) {
    double th = 6.283185307179586 * k / d + 0.4;
    z.emplace_back(Real(ring * std::cos(th), wp), Real(ring * std::sin(th), wp));
  }

  const Real tol = Real::pow2(-(static_cast<long>(wp) - 8), wp);
  const int max_iter = 60 + 4 * d;
  for (int it = 0; it < max_iter; ++it) {
    bool done = true;
    for (int i = 0; i < d; ++i) {
      Complex pv = horner(cf, z[i]);
      Complex dv = horner(cfd, z[i]);
      if (dv.is_zero()) {
        z[i].re += Real(1e-3, wp);
        done = false;
        continue;
      }
      Complex w = pv / dv;
      Complex sum(Real(0.0, wp), Real(0.0, wp));
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        Complex diff = z[i] - z[j];
        if (diff.is_zero()) diff.re = Real(1e-6, wp);
        sum = sum + Complex(Real(1.0, wp), Real(0.0, wp)) / diff;
      }
      Complex denom = Complex(Real(1.0, wp), Real(0.0, wp)) - w * sum;
      if (denom.is_zero()) {
        z[i].im += Real(1e-3, wp);
        done = false;
        continue;
      }
      Complex corr = w / denom;
      z[i] = z[i] - corr;
      if (corr.abs() > tol * max(Real(1.0, wp), z[i].abs())) done = false;
    }
    if (done) break;
  }
  return z;
}

// Certified enclosure attempt for one squarefree part at one precision.
// Returns empty vector if certification fails at this precision.
std::vector<CBall> certify_part(const IntPoly& s, prec_t wp) {
  const int d = s.degree();
  std::vector<Complex> z = aberth(s, wp);
  IntPoly sd = s.derivative();

  std::vector<CBall> balls;
  balls.reserve(d);
  for (int i = 0; i < d; ++i) {
    CBall zb(z[i], Real(0.0, wp));
    RIv pv = s.eval_ball(zb).abs();
    RIv dv = sd.eval_ball(zb).abs();
    if (!dv.strictly_positive()) return {};
    // a root lies within d * |p(z)| / |p'(z)| of z
    RIv rad = RIv::of_int(d) * pv / dv;
    balls.emplace_back(z[i], rad.hi());
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (!CBall::disjoint(balls[i], balls[j])) return {};
  return balls;
}

}  // namespace

std::vector<RootDisk> certified_roots(const IntPoly& p, prec_t prec,
                                      prec_t prec_cap) {
  if (p.degree() < 1) throw domain_error("certified_roots: degree must be >= 1");
  auto parts = yun_parts(p);
  std::vector<RootDisk> out;
  for (const auto& [s, mult] : parts) {
    const long n_real = sturm_count(s);
    bool ok = false;
    for (prec_t wp = prec; wp <= prec_cap; wp *= 2) {
      auto balls = certify_part(s, wp);
      if (balls.empty()) continue;
      // disks straddling the real axis must be exactly the real roots
      long straddling = 0;
      for (const auto& b : balls)
        if (b.im_iv().contains_zero()) ++straddling;
      if (straddling != n_real) continue;
      for (const auto& b : balls)
        out.push_back({b, mult, b.im_iv().contains_zero()});
      ok = true;
      break;
    }
    if (!ok)
      throw precision_cap_reached("certified_roots: disks not separable at precision cap");
  }
  return out;
}

CBall refine_root(const IntPoly& p, const CBall& disk, prec_t prec) {
  IntPoly s = squarefree_part(p);
  IntPoly sd = s.derivative();
  const int d = s.degree();
  for (prec_t wp = std::max<prec_t>(prec + 64, 128); wp <= (prec_t{1} << 16); wp *= 2) {
    std::vector<Real> cf, cfd;
    for (const auto& a : s.coeffs()) cf.push_back(Real::of(a, wp));
    for (const auto& a : sd.coeffs()) cfd.push_back(Real::of(a, wp));
    Complex z = disk.mid().with_prec(wp);
    for (int it = 0; it < 200; ++it) {
      Complex pv = horner(cf, z);
      Complex dv = horner(cfd, z);
      if (dv.is_zero()) break;
      Complex corr = pv / dv;
      z = z - corr;
      if (corr.abs() < Real::pow2(-(static_cast<long>(wp) - 4), wp) * max(Real(1.0, wp), z.abs()))
        break;
    }
    CBall zb(z, Real(0.0, wp));
    RIv pv = s.eval_ball(zb).abs();
    RIv dv = sd.eval_ball(zb).abs();
    if (!dv.strictly_positive()) continue;
    RIv rad = RIv::of_int(d) * pv / dv;
    CBall refined(z, rad.hi());
    // same root: the refined enclosure must meet the input disk and be small
    if (CBall::disjoint(refined, disk)) continue;
    if (refined.rad() > Real::pow2(-static_cast<long>(prec), wp) * max(Real(1.0, wp), z.abs()))
      continue;
    return refined;
  }
  throw precision_cap_reached("refine_root: could not certify refinement");
}

std::vector<std::pair<RootDisk, RootDisk>> conjugate_pairing(
    const std::vector<RootDisk>& roots) {
  std::vector<std::pair<RootDisk, RootDisk>> pairs;
  std::vector<bool> used(roots.size(), false);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    if (roots[i].is_real)
      throw domain_error("conjugate_pairing: real root present");
    CBall cj = roots[i].disk.conj();
    long match = -1;
    for (size_t j = 0; j < roots.size(); ++j) {
      if (j == i || used[j]) continue;
      if (!CBall::disjoint(roots[j].disk, cj)) {
        if (match >= 0)
          throw domain_error("conjugate_pairing: ambiguous pairing, refine roots first");
        match = static_cast<long>(j);
      }
    }
    if (match < 0)
      throw domain_error("conjugate_pairing: conjugate root not found");
    used[i] = used[match] = true;
    RootDisk a = roots[i], b = roots[static_cast<size_t>(match)];
    if (a.disk.mid().im.sgn() < 0) std::swap(a, b);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    return y.first.disk.mid().abs() < x.first.disk.mid().abs();
  });
  return pairs;
}

}  // namespace algx
