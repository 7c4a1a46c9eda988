#ifndef ALGX_APPROX_HPP
#define ALGX_APPROX_HPP

#include <optional>
#include <vector>

#include "algx/algnum.hpp"
#include "algx/intpoly.hpp"

namespace algx {

struct PellSolution {
  mpz_class r;
  mpz_class a, b;  // a^2 - r b^2 = 1
};

// First `count` solutions of a^2 - r b^2 = 1 in increasing a.  The
// fundamental solution comes from the continued fraction of sqrt(r), the
// rest from the standard recurrence.
std::vector<PellSolution> pell_solve(const mpz_class& r, int count);

struct ApproximationRecord {
  AlgebraicNumber alpha;
  mpz_class height;  // naive height of alpha's minimal polynomial
  RIv distance;      // certified |xi - alpha|, bounded away from zero
  RIv exponent;      // -log distance / log height (zero when height <= 1)
};

struct PellApproximant {
  PellSolution sol;
  IntPoly P;                // b X^2 - 2 a X + (r+s) b
  mpz_class height_P;       // naive height of P as written
  mpz_class height_P_prim;  // naive height of its primitive part
  bool reducible = false;   // P splits over Q
  AlgebraicNumber xi;       // sqrt(r) + i sqrt(s)
  ApproximationRecord record;
};

// The quadratic approximant to xi = sqrt(r) + i sqrt(s) attached to a
// Pell solution (a, b).  Both classical bounds
//   |P(xi)| <= 2 sqrt(r+s) / (a + b sqrt(r)) <= 2 s (r+s) / H(P)
//   |xi - alpha| <= 2 (r+s)^2 / H(alpha)^2
// are verified (the first pair exactly in Q(sqrt r), the last with
// certified interval arithmetic); a verification failure throws.
PellApproximant pell_approximant(const mpz_class& r, const mpz_class& s,
                                 const PellSolution& sol, prec_t prec = 256);

// xi = sqrt(d_1) + ... + sqrt(d_{k-1}) + i sqrt(d_k) for pairwise coprime
// squarefree positive d_i, with its exact minimal polynomial obtained from
// iterated resultants plus factor selection.
AlgebraicNumber surd_family(const std::vector<mpz_class>& d_list,
                            prec_t prec = 256);

struct ExponentRow {
  mpz_class H;         // height shell
  RIv min_poly_value;  // running min |P(xi)| over nonzero P, H(P) <= H
  RIv min_distance;    // running min |xi - alpha| over roots of those P
  RIv w_running;       // -log min_poly_value / log H
  RIv wstar_running;   // -log min_distance / log H - 1
};

struct ExponentReport {
  std::vector<ExponentRow> rows;  // one row per shell H = 2..H_max
  std::optional<ApproximationRecord> best;  // largest running exponent
  RIv liouville_floor;  // min |xi - alpha| * H(alpha)^{d/2} over records
  bool partial = false;          // budget ran out before H_max
  bool degree_warning = false;   // n > deg(xi) - 2
};

struct EstimateOptions {
  prec_t prec = 192;
  prec_t prec_cap = 1 << 13;
  unsigned long budget_ms = 0;  // 0 means unlimited
};

// Brute-force scan over integer polynomials P != 0 of degree <= n and
// naive height <= H_max (one representative per sign pair), tracking the
// running minima that define the empirical w_n and w_n^*.
ExponentReport estimate_exponents(const AlgebraicNumber& xi, int n,
                                  const mpz_class& H_max,
                                  const EstimateOptions& opt = {});

struct TransferenceRow {
  ApproximationRecord record;
  RIv poly_value;  // |P_alpha(xi)| for P_alpha the minimal polynomial
  RIv ratio;       // |P_alpha(xi)| / (H(P_alpha) |xi - alpha|)
};

struct TransferenceReport {
  std::vector<TransferenceRow> rows;
  RIv c2_empirical;  // largest observed ratio
};

// Certifies the transference ratio |P_alpha(xi)| / (H(P_alpha)|xi-alpha|)
// for each sample and reports the empirical constant bounding it.
TransferenceReport transference_check(const AlgebraicNumber& xi,
                                      const std::vector<AlgebraicNumber>& samples,
                                      prec_t prec = 256);

}  // namespace algx

#endif
