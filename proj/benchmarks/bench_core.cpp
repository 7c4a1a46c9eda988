#include <benchmark/benchmark.h>

#include "algx/algnum.hpp"
#include "algx/intpoly.hpp"
#include "algx/normform.hpp"
#include "algx/roots.hpp"

namespace {

algx::IntPoly paper_sextic() {
  std::vector<mpz_class> c = {1, -3, 5, -5, 5, -3, 1};
  return algx::IntPoly(std::move(c));
}

void bm_resultant_sextic(benchmark::State& state) {
  auto f = paper_sextic();
  auto fp = f.derivative();
  for (auto _ : state) {
    auto r = algx::resultant(f, fp);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(bm_resultant_sextic);

void bm_root_isolation_sextic(benchmark::State& state) {
  auto f = paper_sextic();
  const algx::prec_t prec = static_cast<algx::prec_t>(state.range(0));
  for (auto _ : state) {
    auto roots = algx::certified_roots(f, prec);
    benchmark::DoNotOptimize(roots);
  }
}
BENCHMARK(bm_root_isolation_sextic)->Arg(64)->Arg(256)->Arg(1024);

void bm_norm_evaluation(benchmark::State& state) {
  algx::NumberField K(paper_sextic());
  std::vector<mpz_class> x = {3, -7, 2, 9, -4, 1};
  for (auto _ : state) {
    auto n = algx::norm_of_vector(K, x);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(bm_norm_evaluation);

void bm_element_minpoly(benchmark::State& state) {
  algx::NumberField K(paper_sextic());
  std::vector<mpq_class> c = {3, -7, 2, 9, -4, 1};
  auto e = K.element(algx::RatPoly(c));
  for (auto _ : state) {
    auto m = e.minpoly();
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(bm_element_minpoly);

}  // namespace

BENCHMARK_MAIN();
