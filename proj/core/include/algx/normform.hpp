#ifndef ALGX_NORMFORM_HPP
#define ALGX_NORMFORM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "algx/algnum.hpp"
#include "algx/intpoly.hpp"

namespace algx {

// Exact Norm_{K/Q}(x_0 + x_1 theta + ... + x_n theta^n) via the resultant
// Res(f, x_0 + x_1 X + ... + x_n X^n), f the monic defining polynomial.
mpz_class norm_of_vector(const NumberField& K, const std::vector<mpz_class>& x);

struct NormFormSolution {
  std::vector<mpz_class> coords;  // x_0 .. x_n
  mpz_class norm_value;           // exact signed norm
  mpz_class X;                    // max |x_i|
  bool canonical = false;         // representative of its +-x pair
};

struct EnumerateOptions {
  bool match_sign = false;        // require norm == m instead of |norm| == |m|
  unsigned long budget_ms = 0;    // 0 means unlimited
};

struct EnumerationResult {
  std::vector<NormFormSolution> solutions;  // closed under x -> -x
  bool partial = false;
};

// All x != 0 with max |x_i| <= X_max and norm +-m; every solution is
// re-verified against the certified product of its embedding images.
EnumerationResult enumerate_solutions(const NumberField& K, int n,
                                      const mpz_class& m, const mpz_class& X_max,
                                      const EnumerateOptions& opt = {});

struct MinNormProfile {
  // (X, min nonzero |norm| over vectors with max coordinate exactly X)
  std::vector<std::pair<mpz_class, mpz_class>> shells;
  double fitted_exponent = 0;  // least-squares slope of log min vs log X
  double fit_residual = 0;     // rms residual of the fit
  bool partial = false;
};

struct ProfileOptions {
  long fit_min_shell = 4;       // shells below this are kept out of the fit
  unsigned long budget_ms = 0;
};

MinNormProfile min_norm_profile(const NumberField& K, int n,
                                const mpz_class& X_max,
                                const ProfileOptions& opt = {});

// The d-n-1 exact linear relations satisfied by the embedding images of
// any x_0 + x_1 theta + ... + x_n theta^n, reduced so the left
// (d-n-1) x (d-n-1) block is diagonal.  Requires K Galois: the entries
// live in K itself.  The matrix keeps a pointer to K; K must outlive it.
struct RelationMatrix {
  const NumberField* K = nullptr;
  int n = 0;
  std::vector<FieldElement> sigma;             // sigma_i(theta) in K, canonical order
  std::vector<std::vector<FieldElement>> A;    // (d-n-1) x d, A.V = 0 exactly
  std::vector<size_t> conj_partner;            // conjugate embedding of column i
  // certified complex mirror of the entries under the distinguished embedding
  std::vector<std::vector<CBall>> numeric(prec_t prec) const;
};

RelationMatrix relation_matrix(const NumberField& K, int n,
                               const ExpressOptions& opt = {});

struct FullRankResult {
  bool full_rank = false;
  std::vector<size_t> witness;  // first singular column subset when not
};

// Checks every (d-n-1)-column subset of A for exact invertibility.
FullRankResult full_rank_condition(const RelationMatrix& A);

struct SubsumHit {
  std::vector<size_t> support;  // column subset with vanishing subsum
  bool conjugate_pair = false;  // exactly one conjugate pair of embeddings
};

// All nonempty subsets S of the support of A.A[row] with
// sum_{i in S} A[row][i] * sigma_i(x) = 0 exactly.
std::vector<SubsumHit> vanishing_subsum_detect(const RelationMatrix& A,
                                               size_t row,
                                               const NormFormSolution& x);

// Permutation p sorting the embeddings for one solution as in the proofs:
// conjugate pairs adjacent, pairs ordered by descending |sigma_i(x)|.
std::vector<size_t> solution_embedding_order(const NumberField& K,
                                             const NormFormSolution& x,
                                             prec_t prec = 256);

}  // namespace algx

#endif
