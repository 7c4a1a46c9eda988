#ifndef ALGX_CRITERIA_HPP
#define ALGX_CRITERIA_HPP

#include <array>
#include <optional>
#include <string>

#include "algx/algnum.hpp"
#include "algx/intpoly.hpp"

namespace algx {

// No real roots (exact, via Sturm).
bool is_totally_complex(const IntPoly& f);

// Does the complex conjugate of the distinguished generator lie in K?
Cert conj_in_field(const NumberField& K, const ExpressOptions& opt = {});

// Is K/Q Galois?  Checks that every root of the defining polynomial lies
// in K.
Cert is_galois(const NumberField& K, const ExpressOptions& opt = {});

// Automorphism table for a Galois field: the image of theta under every
// embedding, expressed inside K, plus the conjugate pairing of the
// embedding indices.
struct GaloisTable {
  Cert status = Cert::unknown;
  std::vector<FieldElement> sigma;   // filled iff status == yes
  std::vector<size_t> conj_partner;  // conjugate embedding of index i
};
GaloisTable galois_table(const NumberField& K, const ExpressOptions& opt = {});

// Q-linear independence of 1, xi + conj(xi), xi * conj(xi) for the
// distinguished root xi.
struct IndependenceTriple {
  Cert independent = Cert::unknown;
  // c0 * 1 + c1 * (xi+conj) + c2 * (xi*conj) = 0 when dependent
  std::optional<std::array<mpq_class, 3>> relation;
  IntPoly minpoly_sum;   // minimal polynomial of xi + conj(xi)
  IntPoly minpoly_prod;  // minimal polynomial of xi * conj(xi)
};
IndependenceTriple independence_triple(const NumberField& K,
                                       const ExpressOptions& opt = {});

// Independence of the triple for every conjugate pair of roots of f.
Cert all_pairs_independent(const IntPoly& f, const ExpressOptions& opt = {});

// Degree of the maximal real subfield K cap R under the distinguished
// embedding.  certified == yes means the value is proven; unknown means
// the reported value is the best budget-bounded answer.
struct RealSubfieldResult {
  int degree = 1;
  Cert certified = Cert::unknown;
};
RealSubfieldResult real_subfield_degree(const NumberField& K,
                                        const ExpressOptions& opt = {});

// Inputs for the classification rules, gathered from the criteria above.
struct FieldCriteria {
  int degree = 0;
  bool totally_complex = false;
  Cert galois = Cert::unknown;
  Cert conj_in_field = Cert::unknown;  // equivalently [K : K cap R] == 2
  Cert independent = Cert::unknown;    // distinguished-pair triple
  Cert all_independent = Cert::unknown;
};
FieldCriteria analyze_field(const NumberField& K, const ExpressOptions& opt = {});

struct WstarResult {
  enum class Kind { value, undetermined, out_of_scope } kind;
  mpq_class w;  // meaningful when kind == value
  std::string reason;
};
// Value of w_n^* for a root of the analyzed field, where the rules apply.
WstarResult classify_wstar(const FieldCriteria& c, int n);

struct GateResult {
  bool applies = false;
  std::string reason;
};
// Do the effective-approximation hypotheses hold for degree n?
GateResult theorem_gate(const FieldCriteria& c, int n);

}  // namespace algx

#endif
