#include "algx/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "algx/errors.hpp"
#include "algx/ratpoly.hpp"
#include "algx/sturm.hpp"

namespace algx {

namespace {

// ---------------------------------------------------------------------------
// arithmetic in F_p[X], p an odd prime < 2^31, coefficients in uint64
// ---------------------------------------------------------------------------

using PolyP = std::vector<uint64_t>;  // constant first, normalized

void norm_p(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg_p(const PolyP& a) { return static_cast<int>(a.size()) - 1; }

uint64_t inv_p(uint64_t a, uint64_t p) {
  // extended Euclid
  int64_t t = 0, nt = 1;
  int64_t r = static_cast<int64_t>(p), nr = static_cast<int64_t>(a % p);
  while (nr != 0) {
    int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (t < 0) t += static_cast<int64_t>(p);
  return static_cast<uint64_t>(t);
}

PolyP mul_p(const PolyP& a, const PolyP& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  norm_p(c);
  return c;
}

PolyP sub_p(PolyP a, const PolyP& b, uint64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  norm_p(a);
  return a;
}

PolyP rem_p(PolyP a, const PolyP& b, uint64_t p) {
  int db = deg_p(b);
  uint64_t binv = inv_p(b.back(), p);
  while (deg_p(a) >= db) {
    uint64_t f = a.back() * binv % p;
    int shift = deg_p(a) - db;
    for (int j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + p - f * b[j] % p) % p;
    norm_p(a);
  }
  return a;
}

PolyP divq_p(PolyP a, const PolyP& b, uint64_t p) {
  int db = deg_p(b);
  if (deg_p(a) < db) return {};
  PolyP q(deg_p(a) - db + 1, 0);
  uint64_t binv = inv_p(b.back(), p);
  while (deg_p(a) >= db) {
    uint64_t f = a.back() * binv % p;
    int shift = deg_p(a) - db;
    q[shift] = f;
    for (int j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + p - f * b[j] % p) % p;
    norm_p(a);
  }
  return q;
}

PolyP gcd_p(PolyP a, PolyP b, uint64_t p) {
  while (!b.empty()) {
    PolyP r = rem_p(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    uint64_t inv = inv_p(a.back(), p);
    for (auto& x : a) x = x * inv % p;
  }
  return a;
}

// (g, s, t) with s*a + t*b = g (monic gcd)
void xgcd_p(PolyP a, PolyP b, uint64_t p, PolyP& g, PolyP& s, PolyP& t) {
  PolyP s0{1}, s1, t0, t1{1};
  while (!b.empty()) {
    PolyP q = divq_p(a, b, p);
    PolyP r = sub_p(a, mul_p(q, b, p), p);
    a = std::move(b);
    b = std::move(r);
    PolyP ns = sub_p(s0, mul_p(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(ns);
    PolyP nt = sub_p(t0, mul_p(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  uint64_t inv = inv_p(a.back(), p);
  for (auto& x : a) x = x * inv % p;
  for (auto& x : s0) x = x * inv % p;
  for (auto& x : t0) x = x * inv % p;
  g = std::move(a);
  s = std::move(s0);
  t = std::move(t0);
}

PolyP powmod_p(const PolyP& base, const mpz_class& e, const PolyP& f, uint64_t p) {
  PolyP acc{1};
  PolyP b = rem_p(base, f, p);
  for (long i = mpz_sizeinbase(e.get_mpz_t(), 2) - 1; i >= 0; --i) {
    acc = rem_p(mul_p(acc, acc, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = rem_p(mul_p(acc, b, p), f, p);
  }
  return acc;
}

PolyP deriv_p(const PolyP& a, uint64_t p) {
  if (a.size() < 2) return {};
  PolyP d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * (i % p) % p;
  norm_p(d);
  return d;
}

// deterministic splittable rng for equal-degree splitting
struct SplitRng {
  uint64_t state;
  uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
};

// Cantor-Zassenhaus equal-degree splitting: f is a product of irreducible
// factors, all of degree d
void equal_degree_split(const PolyP& f, int d, uint64_t p, SplitRng& rng,
                        std::vector<PolyP>& out) {
  if (deg_p(f) == d) {
    out.push_back(f);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, d);
  e = (e - 1) / 2;
  for (;;) {
    PolyP a(deg_p(f), 0);
    for (auto& x : a) x = rng.next() % p;
    norm_p(a);
    if (a.empty()) continue;
    PolyP b = powmod_p(a, e, f, p);
    if (b.empty()) continue;
    b[0] = (b[0] + p - 1) % p;
    norm_p(b);
    PolyP g = gcd_p(b, f, p);
    if (deg_p(g) > 0 && deg_p(g) < deg_p(f)) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(divq_p(f, g, p), d, p, rng, out);
      return;
    }
  }
}

// full factorization of squarefree monic f mod p
std::vector<PolyP> factor_mod_p(PolyP f, uint64_t p) {
  std::vector<PolyP> out;
  SplitRng rng{0x9e3779b97f4a7c15ull ^ (p * 0x100000001b3ull)};
  PolyP x{0, 1};
  PolyP h = x;  // X^{p^i} mod f
  int i = 0;
  while (deg_p(f) > 0) {
    ++i;
    if (2 * i > deg_p(f)) {  // remainder is irreducible
      out.push_back(f);
      break;
    }
    h = powmod_p(h, mpz_class(static_cast<unsigned long>(p)), f, p);
    PolyP g = gcd_p(sub_p(h, x, p), f, p);
    if (deg_p(g) > 0) {
      equal_degree_split(g, i, p, rng, out);
      f = divq_p(f, g, p);
      h = rem_p(h, f, p);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting (monic, two-factor quadratic step + factor tree)
// ---------------------------------------------------------------------------

using ZPoly = std::vector<mpz_class>;  // constant first, not auto-normalized

ZPoly to_z(const IntPoly& p) { return ZPoly(p.coeffs().begin(), p.coeffs().end()); }

void norm_z(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly mulmod_z(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  for (auto& x : c) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  norm_z(c);
  return c;
}

ZPoly submod_z(ZPoly a, const ZPoly& b, const mpz_class& m) {
  if (b.size() > a.size()) a.resize(b.size(), mpz_class(0));
  for (size_t i = 0; i < b.size(); ++i) {
    a[i] -= b[i];
    mpz_fdiv_r(a[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  }
  norm_z(a);
  return a;
}

ZPoly addmod_z(ZPoly a, const ZPoly& b, const mpz_class& m) {
  if (b.size() > a.size()) a.resize(b.size(), mpz_class(0));
  for (size_t i = 0; i < b.size(); ++i) {
    a[i] += b[i];
    mpz_fdiv_r(a[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  }
  norm_z(a);
  return a;
}

// division by monic b, coefficients mod m; returns {quotient, remainder}
std::pair<ZPoly, ZPoly> divrem_monic_z(ZPoly a, const ZPoly& b, const mpz_class& m) {
  int db = static_cast<int>(b.size()) - 1;
  if (b.empty() || b.back() != 1)
    throw domain_error("divrem_monic_z: divisor must be monic");
  norm_z(a);
  if (static_cast<int>(a.size()) - 1 < db) return {{}, a};
  ZPoly q(a.size() - db, mpz_class(0));
  while (static_cast<int>(a.size()) - 1 >= db) {
    mpz_class f = a.back();
    int shift = static_cast<int>(a.size()) - 1 - db;
    q[shift] = f;
    for (int j = 0; j <= db; ++j) {
      a[shift + j] -= f * b[j];
      mpz_fdiv_r(a[shift + j].get_mpz_t(), a[shift + j].get_mpz_t(), m.get_mpz_t());
    }
    norm_z(a);
  }
  norm_z(q);
  return {q, a};
}

// One quadratic Hensel step: from f = g*h (mod m), s*g + t*h = 1 (mod m)
// to the same congruences mod m^2.  f, g, h monic.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const mpz_class& m) {
  mpz_class m2 = m * m;
  ZPoly e = submod_z(ZPoly(f), mulmod_z(g, h, m2), m2);
  auto [q, r] = divrem_monic_z(mulmod_z(s, e, m2), h, m2);
  ZPoly gstar = addmod_z(addmod_z(g, mulmod_z(t, e, m2), m2), mulmod_z(q, g, m2), m2);
  ZPoly hstar = addmod_z(h, r, m2);
  ZPoly b = submod_z(addmod_z(mulmod_z(s, gstar, m2), mulmod_z(t, hstar, m2), m2), ZPoly{1}, m2);
  auto [c, d] = divrem_monic_z(mulmod_z(s, b, m2), hstar, m2);
  ZPoly sstar = submod_z(s, d, m2);
  ZPoly tstar = submod_z(t, addmod_z(mulmod_z(t, b, m2), mulmod_z(c, gstar, m2), m2), m2);
  g = std::move(gstar);
  h = std::move(hstar);
  s = std::move(sstar);
  t = std::move(tstar);
}

ZPoly lift_from_p(const PolyP& a) {
  ZPoly z(a.size());
  for (size_t i = 0; i < a.size(); ++i) z[i] = static_cast<unsigned long>(a[i]);
  return z;
}

// Lift the factorization f = prod(parts) from mod p to mod P (P = p^{2^j}).
// f monic mod P (taken as exact integer polynomial reduced mod P).
void lift_tree(const ZPoly& f, const std::vector<PolyP>& parts, uint64_t p, const mpz_class& P,
               std::vector<ZPoly>& out) {
  if (parts.size() == 1) {
    ZPoly r = f;
    for (auto& x : r) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), P.get_mpz_t());
    norm_z(r);
    out.push_back(std::move(r));
    return;
  }
  size_t half = parts.size() / 2;
  PolyP gp{1}, hp{1};
  for (size_t i = 0; i < half; ++i) gp = mul_p(gp, parts[i], p);
  for (size_t i = half; i < parts.size(); ++i) hp = mul_p(hp, parts[i], p);
  PolyP g0, s0, t0;
  xgcd_p(gp, hp, p, g0, s0, t0);  // gcd is 1 since f squarefree mod p
  ZPoly g = lift_from_p(gp), h = lift_from_p(hp);
  ZPoly s = lift_from_p(s0), t = lift_from_p(t0);
  mpz_class m = static_cast<unsigned long>(p);
  while (m < P) {
    hensel_step(f, g, h, s, t, m);
    m = m * m;
  }
  for (auto& x : g) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), P.get_mpz_t());
  for (auto& x : h) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), P.get_mpz_t());
  norm_z(g);
  norm_z(h);
  lift_tree(g, std::vector<PolyP>(parts.begin(), parts.begin() + half), p, P, out);
  lift_tree(h, std::vector<PolyP>(parts.begin() + half, parts.end()), p, P, out);
}

// ---------------------------------------------------------------------------
// Zassenhaus over Z (monic squarefree input)
// ---------------------------------------------------------------------------

void center_mod(ZPoly& a, const mpz_class& P) {
  mpz_class half = P / 2;
  for (auto& x : a) {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), P.get_mpz_t());
    if (x > half) x -= P;
  }
  norm_z(a);
}

IntPoly from_z(ZPoly a) {
  norm_z(a);
  return IntPoly(std::move(a));
}

// exact division over Z by a monic divisor; empty optional if not divisible
std::optional<IntPoly> divide_exact_monic(const IntPoly& a, const IntPoly& b) {
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> rem(a.coeffs());
  std::vector<mpz_class> quo(a.degree() - b.degree() + 1, mpz_class(0));
  int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    mpz_class f = rem[i];
    if (f == 0) continue;
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return IntPoly(std::move(quo));
}

const uint64_t kPrimes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,
                            43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,
                            101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157};

// factor a monic squarefree primitive polynomial of degree >= 2
std::vector<IntPoly> factor_monic_squarefree(const IntPoly& f, const FactorOptions& opt) {
  const int n = f.degree();

  // pick the prime (among a few good ones) with the fewest modular factors
  uint64_t best_p = 0;
  std::vector<PolyP> best_parts;
  int good_seen = 0;
  for (uint64_t p : kPrimes) {
    PolyP fp(f.coeffs().size());
    for (size_t i = 0; i < fp.size(); ++i)
      fp[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), static_cast<unsigned long>(p));
    norm_p(fp);
    if (deg_p(fp) != n) continue;  // lc vanished (cannot happen, monic)
    if (deg_p(gcd_p(fp, deriv_p(fp, p), p)) != 0) continue;  // not squarefree mod p
    std::vector<PolyP> parts = factor_mod_p(fp, p);
    if (best_p == 0 || parts.size() < best_parts.size()) {
      best_p = p;
      best_parts = std::move(parts);
    }
    if (++good_seen >= 4 || best_parts.size() == 1) break;
  }
  if (best_p == 0) throw budget_exceeded("factorization: no usable small prime found");
  if (best_parts.size() == 1) return {f};

  // Mignotte-style bound on factor coefficients: 2^n * ||f||_2
  mpz_class norm2 = 0;
  for (const auto& a : f.coeffs()) norm2 += a * a;
  mpz_class bound = sqrt(norm2) + 1;
  bound <<= n;
  mpz_class P = static_cast<unsigned long>(best_p);
  while (P <= 2 * bound) P = P * P;

  std::vector<ZPoly> lifted;
  lift_tree(to_z(f), best_parts, best_p, P, lifted);

  // subset recombination
  std::vector<int> alive(lifted.size());
  std::iota(alive.begin(), alive.end(), 0);
  IntPoly rest = f;
  std::vector<IntPoly> out;
  unsigned long tried = 0;

  auto subset_candidate = [&](const std::vector<int>& idx) {
    ZPoly prod{1};
    for (int i : idx) prod = mulmod_z(prod, lifted[i], P);
    center_mod(prod, P);
    return from_z(std::move(prod));
  };

  for (size_t card = 1; card <= alive.size() / 2;) {
    bool found = false;
    // enumerate cardinality-`card` subsets of alive
    std::vector<size_t> pos(card);
    std::iota(pos.begin(), pos.end(), size_t{0});
    for (;;) {
      if (++tried > opt.subset_budget) throw budget_exceeded("factorization budget exceeded");
      std::vector<int> idx;
      idx.reserve(card);
      for (size_t q : pos) idx.push_back(alive[q]);
      IntPoly cand = subset_candidate(idx);
      if (!cand.is_zero() && cand.degree() >= 1) {
        auto quo = divide_exact_monic(rest, cand);
        if (quo) {
          out.push_back(cand);
          rest = *quo;
          std::vector<int> next_alive;
          for (int a : alive)
            if (std::find(idx.begin(), idx.end(), a) == idx.end()) next_alive.push_back(a);
          alive = std::move(next_alive);
          found = true;
          break;
        }
      }
      // next combination
      size_t k = card;
      while (k > 0 && pos[k - 1] == alive.size() - card + (k - 1)) --k;
      if (k == 0) break;
      ++pos[k - 1];
      for (size_t j = k; j < card; ++j) pos[j] = pos[j - 1] + 1;
    }
    if (!found) ++card;
  }
  if (rest.degree() >= 1) out.push_back(rest);
  return out;
}

// map a squarefree primitive (possibly non-monic) polynomial to its monic
// associate, factor, and map back
std::vector<IntPoly> factor_squarefree(const IntPoly& s, const FactorOptions& opt) {
  if (s.degree() == 1) return {s};
  const mpz_class& lc = s.lc();
  if (lc == 1) return factor_monic_squarefree(s, opt);
  // ft(X) = lc^{n-1} * s(X/lc), monic: coeff of X^i picks up lc^{n-1-i}
  std::vector<mpz_class> c(s.coeffs());
  c[s.degree()] = 1;
  mpz_class pw = 1;
  for (int i = s.degree() - 1; i >= 0; --i) {
    c[i] *= pw;
    pw *= lc;
  }
  IntPoly ft{std::vector<mpz_class>(c)};
  std::vector<IntPoly> monic_factors = factor_monic_squarefree(ft, opt);
  std::vector<IntPoly> out;
  out.reserve(monic_factors.size());
  for (const auto& g : monic_factors) out.push_back(g.dilate(lc).primitive_part());
  return out;
}

}  // namespace

IntPoly Factorization::product() const {
  IntPoly acc{1};
  for (const auto& [f, e] : factors)
    for (int i = 0; i < e; ++i) acc = acc * f;
  // factors are primitive with positive lc, so the unit is an integer
  if (unit.get_den() != 1) throw domain_error("Factorization: non-integral unit");
  return acc * unit.get_num();
}

Factorization factor_over_q(const IntPoly& p, const FactorOptions& opt) {
  if (p.is_zero()) throw domain_error("factor_over_q: zero polynomial");
  if (p.degree() > opt.max_degree)
    throw budget_exceeded("factor_over_q: degree exceeds desk-scale budget");
  Factorization result;
  if (p.degree() == 0) {
    result.unit = mpq_class(p[0]);
    return result;
  }
  mpz_class cont = p.content();
  IntPoly pp = p.primitive_part();
  result.unit = mpq_class(cont);

  // Yun squarefree decomposition of the primitive part
  RatPoly a(pp);
  RatPoly d = a.derivative();
  RatPoly g = RatPoly::gcd(a, d);
  RatPoly b = RatPoly::divrem(a, g).first;
  RatPoly c = RatPoly::divrem(d, g).first - b.derivative();
  int mult = 0;
  std::vector<std::pair<IntPoly, int>> squarefree_parts;
  while (b.degree() >= 1) {
    ++mult;
    RatPoly h = RatPoly::gcd(b, c);
    if (h.degree() >= 1) {
      auto [z, den] = h.clear_denominators();
      IntPoly prim = z.primitive_part();
      if (prim.lc() < 0) prim = -prim;
      squarefree_parts.emplace_back(prim, mult);
    }
    b = RatPoly::divrem(b, h).first;
    c = RatPoly::divrem(c, h).first - b.derivative();
  }

  for (auto& [sf, e] : squarefree_parts) {
    for (IntPoly f : factor_squarefree(sf, opt)) {
      if (f.lc() < 0) f = -f;
      result.factors.emplace_back(std::move(f), e);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& x, const auto& y) {
              if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
              return x.first.coeffs() < y.first.coeffs();
            });
  // fix the unit so unit * prod(factors^mult) == p exactly
  result.unit = 1;
  IntPoly prod = result.product();
  mpq_class ratio(p.lc(), prod.lc());
  ratio.canonicalize();
  result.unit = ratio;
  return result;
}

bool is_irreducible_q(const IntPoly& p, const FactorOptions& opt) {
  if (p.degree() < 1) return false;
  Factorization f = factor_over_q(p, opt);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace algx
