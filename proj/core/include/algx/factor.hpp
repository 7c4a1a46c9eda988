#ifndef ALGX_FACTOR_HPP
#define ALGX_FACTOR_HPP

#include <utility>
#include <vector>

#include "algx/intpoly.hpp"

namespace algx {

struct FactorOptions {
  int max_degree = 64;
  // cap on recombination subsets tried per squarefree piece; exceeding it
  // raises budget_exceeded ("factorization budget exceeded"), never a
  // wrong answer
  unsigned long subset_budget = 1ul << 20;
};

struct Factorization {
  // p = unit * prod factors[i].first ^ factors[i].second
  mpq_class unit;
  std::vector<std::pair<IntPoly, int>> factors;  // irreducible, primitive, lc > 0

  IntPoly product() const;
};

Factorization factor_over_q(const IntPoly& p, const FactorOptions& opt = {});

bool is_irreducible_q(const IntPoly& p, const FactorOptions& opt = {});

}  // namespace algx

#endif
