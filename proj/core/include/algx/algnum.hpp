#ifndef ALGX_ALGNUM_HPP
#define ALGX_ALGNUM_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algx/ball.hpp"
#include "algx/intpoly.hpp"
#include "algx/ratpoly.hpp"
#include "algx/roots.hpp"

namespace algx {

class NumberField;
class FieldElement;

// Three-valued certificate.
enum class Cert { yes, no, unknown };

// A specific algebraic number: primitive irreducible minimal polynomial
// plus a certified disk isolating one of its roots.
class AlgebraicNumber {
 public:
  // `minpoly` must be irreducible over Q; `disk` must isolate exactly one
  // of its roots (as produced by certified_roots / refine_root).
  AlgebraicNumber(IntPoly minpoly, CBall disk);

  static AlgebraicNumber rational(const mpq_class& q);
  // the `index`-th root of `irreducible` in the canonical root order
  // (descending |root|, then descending imaginary part)
  static AlgebraicNumber root_of(const IntPoly& irreducible, size_t index,
                                 prec_t prec = 256);

  const IntPoly& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  const CBall& disk() const { return disk_; }
  // certified enclosure with radius below 2^-prec (relative)
  CBall enclosure(prec_t prec) const;

  AlgebraicNumber conj() const;
  bool is_rational() const { return degree() == 1; }
  mpq_class as_rational() const;  // requires degree 1

 private:
  IntPoly minpoly_;
  CBall disk_;
};

// Height of the algebraic numbers with this primitive minimal polynomial.
mpz_class naive_height(const IntPoly& minpoly);
// Certified enclosure of the absolute logarithmic Weil height via the
// Mahler measure.
RIv weil_height(const IntPoly& minpoly, prec_t prec = 256);

// The field Q[X]/(f), f monic irreducible.  The field carries a
// distinguished embedding: its generator theta denotes the root of f with
// canonical index `gen_index` (default 0).
class NumberField {
 public:
  explicit NumberField(IntPoly f, std::string label = "",
                       size_t gen_index = 0);

  int degree() const { return poly_.degree(); }
  const IntPoly& poly() const { return poly_; }
  const std::string& label() const { return label_; }
  size_t gen_index() const { return gen_index_; }

  FieldElement element(RatPoly rep) const;  // reduced mod f
  FieldElement gen() const;
  FieldElement from_rational(const mpq_class& q) const;

  // certified disks for the d roots of f in canonical order, radius below
  // 2^-prec; index gen_index() is the distinguished embedding
  std::vector<CBall> embeddings(prec_t prec) const;
  // M[i][j] = sigma_i(theta)^j
  std::vector<std::vector<CBall>> embedding_matrix(prec_t prec) const;
  // the distinguished generator as an algebraic number
  AlgebraicNumber gen_value(prec_t prec = 256) const;

 private:
  IntPoly poly_;
  std::string label_;
  size_t gen_index_;
  std::vector<CBall> base_roots_;  // canonical order, moderate precision
};

// Element of a NumberField, represented as a polynomial in the generator
// of degree < deg(f).
class FieldElement {
 public:
  FieldElement() = default;

  const NumberField& field() const { return *field_; }
  const RatPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.degree() <= 0; }
  mpq_class as_rational() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(unsigned long e) const;
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  // characteristic polynomial of multiplication by this element (monic,
  // degree d); its distinct irreducible factor is the minimal polynomial
  RatPoly charpoly() const;
  IntPoly minpoly() const;  // primitive, irreducible
  mpq_class norm() const;
  mpq_class trace() const;

  // image under the i-th embedding of the field
  CBall embed(size_t i, prec_t prec) const;
  // image under the distinguished embedding
  CBall value(prec_t prec) const { return embed(field_->gen_index(), prec); }

 private:
  friend class NumberField;
  FieldElement(const NumberField* f, RatPoly rep)
      : field_(f), rep_(std::move(rep)) {}
  const NumberField* field_ = nullptr;
  RatPoly rep_;
};

struct ExpressOptions {
  prec_t prec = 256;
  prec_t prec_cap = 1 << 14;
};

struct ExpressResult {
  Cert status = Cert::unknown;
  std::optional<FieldElement> element;  // set iff status == yes
};

// Decide whether beta lies in K (under the distinguished embedding of K).
// yes: element holds g with g(theta) = beta, certified exactly.
// no: certified absence via the LLL shortest-vector bound.
// unknown: undecided within the precision budget.
ExpressResult express_in_field(const NumberField& K, const AlgebraicNumber& beta,
                               const ExpressOptions& opt = {});

}  // namespace algx

#endif
