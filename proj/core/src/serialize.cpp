#include "algx/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "algx/errors.hpp"
#include "algx/factor.hpp"

namespace algx {

namespace {

using json = nlohmann::ordered_json;
using ordered_json = nlohmann::ordered_json;

json poly_json(const IntPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) {
    if (c.fits_slong_p())
      arr.push_back(c.get_si());
    else
      arr.push_back(c.get_str());
  }
  return arr;
}

IntPoly poly_from(const json& arr) {
  if (!arr.is_array()) throw domain_error("poly: expected a JSON array");
  std::vector<mpz_class> c;
  for (const auto& x : arr) {
    if (x.is_number_integer())
      c.emplace_back(static_cast<long>(x.get<long long>()));
    else if (x.is_string())
      c.emplace_back(x.get<std::string>());
    else
      throw domain_error("poly: coefficients must be integers or strings");
  }
  return IntPoly(std::move(c));
}

std::string q_str(const mpq_class& q) { return q.get_str(); }

// decimal enclosure of an interval, midpoint plus certified endpoints
json riv_json(const RIv& v) {
  json o;
  o["lo"] = v.lo().str(20);
  o["hi"] = v.hi().str(20);
  return o;
}

std::string riv_csv(const RIv& v) { return v.mid().str(17); }

}  // namespace

std::string poly_to_json(const IntPoly& p) { return poly_json(p).dump(); }

IntPoly poly_from_json(const std::string& text) {
  return poly_from(json::parse(text));
}

std::string disk_to_json(const CBall& b) {
  ordered_json o;
  o["re"] = b.mid().re.exact_decimal();
  o["im"] = b.mid().im.exact_decimal();
  o["radius"] = b.rad().exact_decimal();
  return o.dump();
}

std::string field_to_json(const NumberField& K,
                          const std::vector<FieldElement>* automorphisms) {
  ordered_json o;
  o["label"] = K.label();
  o["poly"] = poly_json(K.poly());
  if (automorphisms) {
    json table = json::array();
    for (const FieldElement& a : *automorphisms) {
      json row = json::array();
      for (int i = 0; i < K.degree(); ++i) row.push_back(q_str(a.rep()[i]));
      table.push_back(std::move(row));
    }
    o["galois"] = std::move(table);
  } else {
    o["galois"] = nullptr;
  }
  return o.dump();
}

NumberField field_from_json(const std::string& text) {
  json o = json::parse(text);
  if (!o.is_object() || !o.contains("poly"))
    throw domain_error("field: expected {label, poly}");
  IntPoly p = poly_from(o["poly"]);
  std::string label = o.value("label", std::string());
  return NumberField(std::move(p), std::move(label));
}

NumberField field_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("field: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return field_from_json(ss.str());
}

std::string pell_report_to_json(const std::vector<PellApproximant>& runs) {
  json arr = json::array();
  for (const auto& ap : runs) {
    ordered_json o;
    o["r"] = ap.sol.r.get_str();
    o["a"] = ap.sol.a.get_str();
    o["b"] = ap.sol.b.get_str();
    o["P"] = poly_json(ap.P);
    o["H_P"] = ap.height_P.get_str();
    o["H_P_primitive"] = ap.height_P_prim.get_str();
    o["reducible"] = ap.reducible;
    o["alpha_minpoly"] = poly_json(ap.record.alpha.minpoly());
    o["H_alpha"] = ap.record.height.get_str();
    o["distance"] = riv_json(ap.record.distance);
    o["exponent"] = riv_json(ap.record.exponent);
    arr.push_back(std::move(o));
  }
  return arr.dump(2);
}

std::string pell_report_to_csv(const std::vector<PellApproximant>& runs) {
  std::ostringstream out;
  out << "a,b,H_P,H_alpha,distance,exponent\n";
  for (const auto& ap : runs)
    out << ap.sol.a << ',' << ap.sol.b << ',' << ap.height_P << ','
        << ap.record.height << ',' << riv_csv(ap.record.distance) << ','
        << riv_csv(ap.record.exponent) << '\n';
  return out.str();
}

std::string exponent_report_to_json(const ExponentReport& r) {
  ordered_json o;
  json rows = json::array();
  for (const auto& row : r.rows) {
    ordered_json j;
    j["H"] = row.H.get_str();
    j["min_poly_value"] = riv_json(row.min_poly_value);
    j["min_distance"] = riv_json(row.min_distance);
    j["w_running"] = riv_json(row.w_running);
    j["wstar_running"] = riv_json(row.wstar_running);
    rows.push_back(std::move(j));
  }
  o["rows"] = std::move(rows);
  if (r.best) {
    ordered_json b;
    b["alpha_minpoly"] = poly_json(r.best->alpha.minpoly());
    b["H"] = r.best->height.get_str();
    b["distance"] = riv_json(r.best->distance);
    b["exponent"] = riv_json(r.best->exponent);
    o["best"] = std::move(b);
  } else {
    o["best"] = nullptr;
  }
  o["liouville_floor"] = riv_json(r.liouville_floor);
  o["partial"] = r.partial;
  o["degree_warning"] = r.degree_warning;
  return o.dump(2);
}

std::string exponent_report_to_csv(const ExponentReport& r) {
  std::ostringstream out;
  out << "H,min_poly_value,min_distance,w_running,wstar_running\n";
  for (const auto& row : r.rows)
    out << row.H << ',' << riv_csv(row.min_poly_value) << ','
        << riv_csv(row.min_distance) << ',' << riv_csv(row.w_running) << ','
        << riv_csv(row.wstar_running) << '\n';
  return out.str();
}

std::string solutions_to_json(const EnumerationResult& r) {
  ordered_json o;
  json arr = json::array();
  for (const auto& s : r.solutions) {
    ordered_json j;
    json coords = json::array();
    for (const auto& c : s.coords) coords.push_back(c.get_str());
    j["coords"] = std::move(coords);
    j["norm"] = s.norm_value.get_str();
    j["X"] = s.X.get_str();
    j["canonical"] = s.canonical;
    arr.push_back(std::move(j));
  }
  o["solutions"] = std::move(arr);
  o["count"] = r.solutions.size();
  o["partial"] = r.partial;
  return o.dump(2);
}

std::string solutions_to_csv(const EnumerationResult& r) {
  std::ostringstream out;
  size_t width = r.solutions.empty() ? 0 : r.solutions.front().coords.size();
  for (size_t i = 0; i < width; ++i) out << 'x' << i << ',';
  out << "norm,X,canonical\n";
  for (const auto& s : r.solutions) {
    for (const auto& c : s.coords) out << c << ',';
    out << s.norm_value << ',' << s.X << ',' << (s.canonical ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string profile_to_json(const MinNormProfile& p) {
  ordered_json o;
  json shells = json::array();
  for (const auto& [X, v] : p.shells) {
    ordered_json j;
    j["X"] = X.get_str();
    j["min_norm"] = v.get_str();
    shells.push_back(std::move(j));
  }
  o["shells"] = std::move(shells);
  o["fitted_exponent"] = p.fitted_exponent;
  o["fit_residual"] = p.fit_residual;
  o["partial"] = p.partial;
  return o.dump(2);
}

std::string profile_to_csv(const MinNormProfile& p) {
  std::ostringstream out;
  out << "X,min_norm\n";
  for (const auto& [X, v] : p.shells) out << X << ',' << v << '\n';
  return out.str();
}

std::string relation_matrix_to_json(const RelationMatrix& A, prec_t prec) {
  ordered_json o;
  o["n"] = A.n;
  o["degree"] = A.K->degree();
  json rows = json::array();
  for (const auto& row : A.A) {
    json r = json::array();
    for (const auto& e : row) {
      json coeffs = json::array();
      for (int i = 0; i < A.K->degree(); ++i) coeffs.push_back(q_str(e.rep()[i]));
      r.push_back(std::move(coeffs));
    }
    rows.push_back(std::move(r));
  }
  o["entries"] = std::move(rows);
  json mirror = json::array();
  for (const auto& row : A.numeric(prec)) {
    json r = json::array();
    for (const auto& b : row) r.push_back(json::parse(disk_to_json(b)));
    mirror.push_back(std::move(r));
  }
  o["numeric"] = std::move(mirror);
  json partner = json::array();
  for (size_t p : A.conj_partner) partner.push_back(p);
  o["conj_partner"] = std::move(partner);
  return o.dump(2);
}

namespace {

const char* cert_str(Cert c) {
  switch (c) {
    case Cert::yes: return "yes";
    case Cert::no: return "no";
    default: return "unknown";
  }
}

}  // namespace

std::string classification_to_json(const ClassificationReport& r) {
  ordered_json o;
  o["label"] = r.label;
  o["degree"] = r.criteria.degree;
  o["totally_complex"] = r.criteria.totally_complex;
  o["galois"] = cert_str(r.criteria.galois);
  o["conj_in_field"] = cert_str(r.criteria.conj_in_field);
  o["independent"] = cert_str(r.criteria.independent);
  o["all_independent"] = cert_str(r.criteria.all_independent);
  o["real_subfield_degree"] = r.real_subfield.degree;
  o["real_subfield_certified"] = cert_str(r.real_subfield.certified);
  json ws = json::array();
  for (size_t i = 0; i < r.ns.size(); ++i) {
    ordered_json j;
    j["n"] = r.ns[i];
    switch (r.wstar[i].kind) {
      case WstarResult::Kind::value:
        j["wstar"] = r.wstar[i].w.get_str();
        break;
      case WstarResult::Kind::undetermined:
        j["wstar"] = "undetermined";
        break;
      default:
        j["wstar"] = "out_of_scope";
    }
    j["reason"] = r.wstar[i].reason;
    j["theorem_applies"] = r.gates[i].applies;
    j["gate_reason"] = r.gates[i].reason;
    ws.push_back(std::move(j));
  }
  o["classification"] = std::move(ws);
  return o.dump(2);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw domain_error("cannot write " + path);
  out << content;
}

}  // namespace algx
