#ifndef ALGX_HARNESS_HPP
#define ALGX_HARNESS_HPP

#include <string>
#include <vector>

#include "algx/intpoly.hpp"

namespace algx {

struct FieldCatalogEntry {
  std::string label;
  IntPoly poly;          // monic, irreducible
  std::string provenance;  // "builtin" | "builtin-surd" | "user-file"
};

// Catalog JSON: [{"label": "...", "poly": [c0, c1, ...]}, ...].  Each
// polynomial is certified monic irreducible on load; duplicate labels are
// rejected.
std::vector<FieldCatalogEntry> load_catalog(const std::string& path);

// The two paper sextics plus, for each requested degree 2^k >= 4, the
// surd-sum fields over the first coprime squarefree tuples (every rotation
// of each base tuple, so each surd takes a turn as the imaginary one).
std::vector<FieldCatalogEntry> builtin_catalog(const std::vector<int>& degrees);

struct SampleFailure {
  int sample_index = 0;
  size_t pair_index = 0;                // embedding index of the pair
  std::vector<mpz_class> coeffs;        // the sampled element
  std::vector<mpz_class> relation;      // certified dependence (c0, c1, c2)
};

struct ExperimentFieldStats {
  std::string label;
  int samples = 0;
  int satisfied = 0;
  int failed = 0;
  int degenerate = 0;
  std::vector<SampleFailure> failures;  // auditable
};

struct ExperimentReport {
  unsigned long seed = 0;
  long R = 0;
  int per_field = 0;
  std::vector<ExperimentFieldStats> fields;
  std::vector<std::string> skipped;  // fields not totally complex Galois
  int total_samples = 0;
  int total_satisfied = 0;
  int total_failed = 0;
  int total_degenerate = 0;
};

// The sampling experiment: per field, `per_field` elements with integer
// coordinates uniform on [-R, R] (mt19937_64 streams derived from the seed
// and the field label), tested for full degree and then for the
// all-conjugate-pairs independence criterion.
ExperimentReport sample_experiment(const std::vector<FieldCatalogEntry>& catalog,
                                   int per_field, long R, unsigned long seed);

std::string experiment_to_json(const ExperimentReport& r);

struct GoldenCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct GoldenReport {
  std::vector<GoldenCheck> checks;
  bool all_pass = false;
};

// Fixed expectations for the paper's worked examples and constructions.
GoldenReport golden_suite();

}  // namespace algx

#endif
