#include "algx/sturm.hpp"

#include <vector>

#include "algx/errors.hpp"
#include "algx/ratpoly.hpp"

namespace algx {

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw domain_error("squarefree_part: zero polynomial");
  if (p.degree() == 0) return IntPoly{1};
  RatPoly pq(p);
  RatPoly g = RatPoly::gcd(pq, pq.derivative());
  RatPoly sf = RatPoly::divrem(pq, g).first;
  auto [z, den] = sf.clear_denominators();
  IntPoly prim = z.primitive_part();
  // keep the original leading sign
  if (sgn(prim.lc()) != sgn(p.lc())) prim = -prim;
  return prim;
}

namespace {

std::vector<IntPoly> sturm_chain(const IntPoly& p0) {
  std::vector<IntPoly> chain;
  chain.push_back(p0);
  if (p0.degree() >= 1) chain.push_back(p0.derivative().primitive_part());
  while (chain.back().degree() >= 1) {
    RatPoly r = RatPoly::divrem(RatPoly(chain[chain.size() - 2]), RatPoly(chain.back())).second;
    if (r.is_zero()) break;  // cannot happen for squarefree input
    auto [z, den] = r.clear_denominators();
    chain.push_back(-z.primitive_part());
  }
  return chain;
}

int sign_at(const IntPoly& p, const mpq_class& x) { return sgn(p.eval(x)); }

int sign_at_inf(const IntPoly& p, bool plus) {
  int s = sgn(p.lc());
  if (!plus && p.degree() % 2 == 1) s = -s;
  return s;
}

// Sign variation count in the chain just to the right of x (or at +/-inf).
// At a root of the first element the sign just right of x equals the sign
// of the derivative there; other zeros are skipped (Sturm property).
long variations(const std::vector<IntPoly>& chain, const std::optional<mpq_class>& x, bool plus_inf) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain)
    signs.push_back(x ? sign_at(q, *x) : sign_at_inf(q, plus_inf));
  if (signs[0] == 0 && signs.size() > 1) signs[0] = signs[1];
  long v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

long sturm_count(const IntPoly& p, const std::optional<mpq_class>& lo,
                 const std::optional<mpq_class>& hi) {
  IntPoly sf = squarefree_part(p);
  if (sf.degree() < 1) return 0;
  std::vector<IntPoly> chain = sturm_chain(sf);
  long va = variations(chain, lo, false);
  long vb = variations(chain, hi, true);
  return va - vb;
}

}  // namespace algx
