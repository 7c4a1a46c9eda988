#ifndef ALGX_SERIALIZE_HPP
#define ALGX_SERIALIZE_HPP

#include <string>
#include <vector>

#include "algx/algnum.hpp"
#include "algx/approx.hpp"
#include "algx/criteria.hpp"
#include "algx/intpoly.hpp"
#include "algx/normform.hpp"

namespace algx {

// polynomials are JSON integer arrays, constant term first
std::string poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const std::string& text);

// {re, im, radius} with exact decimal strings, no binary floats
std::string disk_to_json(const CBall& b);

// {label, poly, galois}; galois is the automorphism table (one rational
// coefficient vector per automorphism image of theta) or null
std::string field_to_json(const NumberField& K,
                          const std::vector<FieldElement>* automorphisms = nullptr);
NumberField field_from_json(const std::string& text);
NumberField field_from_file(const std::string& path);

std::string pell_report_to_json(const std::vector<PellApproximant>& runs);
std::string pell_report_to_csv(const std::vector<PellApproximant>& runs);

std::string exponent_report_to_json(const ExponentReport& r);
// columns: H, min_poly_value, min_distance, w_running, wstar_running
std::string exponent_report_to_csv(const ExponentReport& r);

std::string solutions_to_json(const EnumerationResult& r);
std::string solutions_to_csv(const EnumerationResult& r);

std::string profile_to_json(const MinNormProfile& p);
std::string profile_to_csv(const MinNormProfile& p);

std::string relation_matrix_to_json(const RelationMatrix& A, prec_t prec = 128);

struct ClassificationReport {
  std::string label;
  FieldCriteria criteria;
  RealSubfieldResult real_subfield;
  std::vector<int> ns;
  std::vector<WstarResult> wstar;   // parallel to ns
  std::vector<GateResult> gates;    // parallel to ns
};
std::string classification_to_json(const ClassificationReport& r);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace algx

#endif
