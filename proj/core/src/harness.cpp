#include "algx/harness.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "algx/approx.hpp"
#include "algx/criteria.hpp"
#include "algx/errors.hpp"
#include "algx/factor.hpp"
#include "algx/linalg.hpp"
#include "algx/normform.hpp"

namespace algx {

namespace {

using json = nlohmann::ordered_json;
using ordered_json = nlohmann::ordered_json;

IntPoly paper_f() { return IntPoly{1, -3, 5, -5, 5, -3, 1}; }
IntPoly paper_g() { return IntPoly{1, -1, 0, 2, 0, -1, 1}; }

bool squarefree_int(long v) {
  for (long f = 2; f * f <= v; ++f)
    if (v % (f * f) == 0) return false;
  return true;
}

// first `count` sorted pairwise coprime squarefree k-tuples, lex order
std::vector<std::vector<long>> base_tuples(int k, int count) {
  std::vector<long> cand;
  for (long v = 2; v <= 60; ++v)
    if (squarefree_int(v)) cand.push_back(v);
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  std::function<void(size_t)> rec = [&](size_t from) {
    if (static_cast<int>(out.size()) >= count) return;
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (size_t i = from; i < cand.size(); ++i) {
      bool ok = true;
      for (long c : cur)
        if (std::gcd(c, cand[i]) != 1) ok = false;
      if (!ok) continue;
      cur.push_back(cand[i]);
      rec(i + 1);
      cur.pop_back();
      if (static_cast<int>(out.size()) >= count) return;
    }
  };
  rec(0);
  return out;
}

std::string tuple_label(const std::vector<long>& t) {
  std::string s = "surd";
  for (long v : t) s += "-" + std::to_string(v);
  return s;
}

// stream seed derived from the experiment seed and the field label, so
// per-field streams are independent of processing order
std::uint64_t stream_seed(unsigned long seed, const std::string& label) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h ^ (0x9e3779b97f4a7c15ull * (seed + 1));
}

long draw_uniform(std::mt19937_64& g, long R) {
  const std::uint64_t span = static_cast<std::uint64_t>(2 * R + 1);
  const std::uint64_t lim =
      std::numeric_limits<std::uint64_t>::max() / span * span;
  std::uint64_t v;
  do {
    v = g();
  } while (v >= lim);
  return static_cast<long>(v % span) - R;
}

std::vector<mpq_class> coords(const FieldElement& e, int d) {
  std::vector<mpq_class> c;
  for (int i = 0; i < d; ++i) c.push_back(e.rep()[i]);
  return c;
}

std::vector<mpz_class> normalized_relation(const std::array<mpq_class, 3>& rel) {
  return primitive_integer_vector({rel[0], rel[1], rel[2]});
}

bool relation_is(const std::vector<mpz_class>& rel, long a, long b, long c) {
  return rel.size() == 3 && rel[0] == a && rel[1] == b && rel[2] == c;
}

}  // namespace

std::vector<FieldCatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("load_catalog: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  json doc;
  try {
    doc = json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw domain_error("load_catalog: " + path + ": " + e.what());
  }
  if (!doc.is_array())
    throw domain_error("load_catalog: " + path + ": expected a JSON array");

  std::vector<FieldCatalogEntry> out;
  for (size_t idx = 0; idx < doc.size(); ++idx) {
    const json& e = doc[idx];
    if (!e.is_object() || !e.contains("label") || !e.contains("poly"))
      throw domain_error("load_catalog: " + path + ": entry " +
                         std::to_string(idx) + " needs {label, poly}");
    std::string label = e["label"].get<std::string>();
    std::vector<mpz_class> c;
    for (const auto& x : e["poly"]) {
      if (x.is_number_integer())
        c.emplace_back(static_cast<long>(x.get<long long>()));
      else if (x.is_string())
        c.emplace_back(x.get<std::string>());
      else
        throw domain_error("load_catalog: " + path + ": entry " + label +
                           ": bad coefficient");
    }
    IntPoly p(std::move(c));
    if (!p.is_monic())
      throw domain_error("load_catalog: " + path + ": entry " + label +
                         ": polynomial must be monic");
    if (!is_irreducible_q(p))
      throw domain_error("load_catalog: " + path + ": entry " + label +
                         ": polynomial is reducible");
    for (const auto& prev : out)
      if (prev.label == label)
        throw domain_error("load_catalog: " + path + ": duplicate label " + label);
    out.push_back({std::move(label), std::move(p), "user-file"});
  }
  return out;
}

std::vector<FieldCatalogEntry> builtin_catalog(const std::vector<int>& degrees) {
  std::vector<FieldCatalogEntry> out;
  out.push_back({"paper-f", paper_f(), "builtin"});
  out.push_back({"paper-g", paper_g(), "builtin"});
  for (int deg : degrees) {
    int k = 0;
    for (int d = deg; d > 1; d /= 2) {
      if (d % 2 != 0)
        throw domain_error("builtin_catalog: degrees must be powers of two >= 4");
      ++k;
    }
    if (deg < 4) throw domain_error("builtin_catalog: degrees must be >= 4");
    for (const auto& base : base_tuples(k, 2)) {
      // every rotation: each surd takes a turn as the imaginary one
      for (int last = k - 1; last >= 0; --last) {
        std::vector<long> t;
        for (int i = 0; i < k; ++i)
          if (i != last) t.push_back(base[i]);
        t.push_back(base[last]);
        std::vector<mpz_class> dz(t.begin(), t.end());
        out.push_back({tuple_label(t), surd_family(dz).minpoly(), "builtin-surd"});
      }
    }
  }
  return out;
}

ExperimentReport sample_experiment(const std::vector<FieldCatalogEntry>& catalog,
                                   int per_field, long R, unsigned long seed) {
  if (per_field < 0 || R < 0)
    throw domain_error("sample_experiment: bad parameters");
  ExperimentReport rep;
  rep.seed = seed;
  rep.R = R;
  rep.per_field = per_field;

  for (const FieldCatalogEntry& entry : catalog) {
    if (!is_totally_complex(entry.poly)) {
      rep.skipped.push_back(entry.label + ": not totally complex");
      continue;
    }
    NumberField K(entry.poly, entry.label);
    GaloisTable gt = galois_table(K);
    if (gt.status != Cert::yes) {
      rep.skipped.push_back(entry.label + ": not certified Galois");
      continue;
    }
    const int d = K.degree();
    std::vector<std::vector<FieldElement>> pw(d);
    for (int i = 0; i < d; ++i) {
      pw[i].push_back(K.from_rational(1));
      for (int j = 1; j < d; ++j) pw[i].push_back(pw[i].back() * gt.sigma[i]);
    }

    ExperimentFieldStats st;
    st.label = entry.label;
    std::mt19937_64 rng(stream_seed(seed, entry.label));
    for (int smp = 0; smp < per_field; ++smp) {
      std::vector<long> c(d);
      for (int j = 0; j < d; ++j) c[j] = draw_uniform(rng, R);
      ++st.samples;

      std::vector<mpq_class> qc(c.begin(), c.end());
      FieldElement xi = K.element(RatPoly(qc));
      if (xi.minpoly().degree() < d) {
        ++st.degenerate;
        continue;
      }

      bool any_dependent = false;
      for (int i = 0; i < d; ++i) {
        size_t p = gt.conj_partner[i];
        if (p < static_cast<size_t>(i)) continue;  // one test per pair
        FieldElement si = K.from_rational(0), sp = K.from_rational(0);
        for (int j = 0; j < d; ++j) {
          if (c[j] == 0) continue;
          FieldElement cj = K.from_rational(mpq_class(c[j]));
          si = si + cj * pw[i][j];
          sp = sp + cj * pw[p][j];
        }
        FieldElement b1 = si + sp, b2 = si * sp;
        QMat M(d, std::vector<mpq_class>(3, 0));
        M[0][0] = 1;
        auto c1 = coords(b1, d), c2 = coords(b2, d);
        for (int row = 0; row < d; ++row) {
          M[row][1] = c1[row];
          M[row][2] = c2[row];
        }
        QMat ker = kernel_q(M);
        if (!ker.empty()) {
          any_dependent = true;
          SampleFailure fail;
          fail.sample_index = smp;
          fail.pair_index = static_cast<size_t>(i);
          fail.coeffs.assign(c.begin(), c.end());
          fail.relation = primitive_integer_vector(ker[0]);
          st.failures.push_back(std::move(fail));
        }
      }
      if (any_dependent)
        ++st.failed;
      else
        ++st.satisfied;
    }
    rep.total_samples += st.samples;
    rep.total_satisfied += st.satisfied;
    rep.total_failed += st.failed;
    rep.total_degenerate += st.degenerate;
    rep.fields.push_back(std::move(st));
  }
  return rep;
}

std::string experiment_to_json(const ExperimentReport& r) {
  ordered_json o;
  o["generator"] = "mt19937_64";
  o["seed"] = r.seed;
  o["R"] = r.R;
  o["per_field"] = r.per_field;
  json fields = json::array();
  for (const auto& st : r.fields) {
    ordered_json f;
    f["label"] = st.label;
    f["samples"] = st.samples;
    f["satisfied"] = st.satisfied;
    f["failed"] = st.failed;
    f["degenerate"] = st.degenerate;
    json fails = json::array();
    for (const auto& fl : st.failures) {
      ordered_json j;
      j["sample"] = fl.sample_index;
      j["pair"] = fl.pair_index;
      json cc = json::array();
      for (const auto& z : fl.coeffs) cc.push_back(z.get_str());
      j["coeffs"] = std::move(cc);
      json rr = json::array();
      for (const auto& z : fl.relation) rr.push_back(z.get_str());
      j["relation"] = std::move(rr);
      fails.push_back(std::move(j));
    }
    f["failures"] = std::move(fails);
    fields.push_back(std::move(f));
  }
  o["fields"] = std::move(fields);
  o["skipped"] = r.skipped;
  o["total_samples"] = r.total_samples;
  o["total_satisfied"] = r.total_satisfied;
  o["total_failed"] = r.total_failed;
  o["total_degenerate"] = r.total_degenerate;
  return o.dump(2);
}

GoldenReport golden_suite() {
  GoldenReport rep;
  auto check = [&](const std::string& name, bool pass, std::string detail = "") {
    rep.checks.push_back({name, pass, std::move(detail)});
  };

  IntPoly f = paper_f(), g = paper_g();

  // sextic f
  check("f totally complex", is_totally_complex(f));
  check("f discriminant", abs(discriminant(f)) == 12167,
        "|disc| = " + mpz_class(abs(discriminant(f))).get_str());
  {
    NumberField Kf(f, "6.0.12167.1");
    GaloisTable gt = galois_table(Kf);
    check("f galois with 6 automorphisms",
          gt.status == Cert::yes && gt.sigma.size() == 6);
    auto rf = real_subfield_degree(Kf);
    check("f real subfield degree 3",
          rf.degree == 3 && rf.certified == Cert::yes);

    std::vector<std::vector<mpz_class>> rels;
    bool all_dep = true;
    mpq_class two(2);
    bool all_w2 = true;
    for (size_t idx : {size_t(0), size_t(2), size_t(4)}) {
      NumberField Ki(f, "", idx);
      auto t = independence_triple(Ki);
      if (t.independent != Cert::no || !t.relation) {
        all_dep = false;
        continue;
      }
      rels.push_back(normalized_relation(*t.relation));
      FieldCriteria c;
      c.degree = 6;
      c.totally_complex = true;
      c.galois = Cert::yes;
      c.conj_in_field = conj_in_field(Ki);
      c.independent = Cert::no;
      c.all_independent = Cert::no;
      auto w = classify_wstar(c, 4);
      all_w2 = all_w2 && w.kind == WstarResult::Kind::value && w.w == two;
    }
    check("f all pairs dependent", all_dep);
    bool lab = false;
    if (rels.size() == 3) {
      auto has = [&](long a, long b, long c) {
        for (const auto& r : rels)
          if (relation_is(r, a, b, c)) return true;
        return false;
      };
      // xi conj(xi) = 1, xi + conj(xi) = 1, xi + conj(xi) = xi conj(xi)
      lab = has(1, 0, -1) && has(1, -1, 0) && has(0, 1, -1);
    }
    check("f pair relations labeled", lab);
    check("f w4* = 2 for every root", all_w2);
  }

  // sextic g
  check("g discriminant", abs(discriminant(g)) == 27556,
        "|disc| = " + mpz_class(abs(discriminant(g))).get_str());
  {
    NumberField Kg(g, "6.0.27556.1");
    check("g not galois", is_galois(Kg) == Cert::no);

    std::vector<mpq_class> wvals;
    int dep_count = 0, indep_count = 0;
    bool unit_rel = false;
    bool real_triv = true;
    for (size_t idx : {size_t(0), size_t(2), size_t(4)}) {
      NumberField Ki(g, "", idx);
      auto t = independence_triple(Ki);
      FieldCriteria c;
      c.degree = 6;
      c.totally_complex = true;
      c.galois = Cert::no;
      c.conj_in_field = conj_in_field(Ki);
      c.independent = t.independent;
      c.all_independent = Cert::no;
      if (t.independent == Cert::no) {
        ++dep_count;
        if (t.relation) unit_rel = relation_is(normalized_relation(*t.relation), 1, 0, -1);
      } else if (t.independent == Cert::yes) {
        ++indep_count;
        real_triv = real_triv && real_subfield_degree(Ki).degree == 1;
      }
      auto w = classify_wstar(c, 4);
      if (w.kind == WstarResult::Kind::value) wvals.push_back(w.w);
    }
    check("g one dependent pair with relation (-1, 0, 1)",
          dep_count == 1 && unit_rel);
    check("g two independent pairs", indep_count == 2);
    check("g independent pairs have trivial real subfield", real_triv);
    std::sort(wvals.begin(), wvals.end());
    check("g w4* classification {3/2, 3/2, 2}",
          wvals.size() == 3 && wvals[0] == mpq_class(3, 2) &&
              wvals[1] == mpq_class(3, 2) && wvals[2] == 2);
  }

  // pell construction for (r, s) = (2, 3)
  {
    bool ok = true;
    double last = 0;
    std::string detail;
    try {
      for (const auto& s : pell_solve(2, 6)) {
        auto ap = pell_approximant(2, 3, s);
        last = (ap.record.exponent.lo().to_double() +
                ap.record.exponent.hi().to_double()) /
               2;
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    check("pell bounds verified for (2, 3)", ok, detail);
    check("pell exponent in [1.8, 2.0] by the 6th solution",
          ok && last >= 1.8 && last <= 2.0,
          "exponent = " + std::to_string(last));
  }

  // surd family and the n = 4 gate
  {
    AlgebraicNumber s = surd_family({2, 3, 5});
    bool deg8 = s.degree() == 8;
    bool tc = is_totally_complex(s.minpoly());
    NumberField K(s.minpoly(), "surd-2-3-5");
    FieldCriteria c = analyze_field(K);
    auto gate = theorem_gate(c, 4);
    check("surd(2,3,5) degree 8 totally complex", deg8 && tc);
    check("surd(2,3,5) galois", c.galois == Cert::yes);
    check("surd(2,3,5) passes the n = 4 gate", gate.applies, gate.reason);
  }

  // norm-form context for f: minima flat at 1
  {
    NumberField Kf(f);
    auto prof = min_norm_profile(Kf, 4, 6);
    bool flat = prof.shells.size() == 6;
    for (const auto& [X, v] : prof.shells) flat = flat && v == 1;
    check("f min-norm profile flat at 1", flat);
  }

  // height comparability for a root of f
  {
    prec_t wp = 256;
    RIv h = weil_height(f, wp);
    RIv logH = log(RIv::exact(mpq_class(naive_height(f)), wp));
    RIv d6 = RIv::of_int(6);
    RIv lhs = -log(RIv::exact(7, wp)) / RIv::of_int(2) + d6 * h;
    RIv rhs = d6 * (h + log(RIv::exact(2, wp)));
    check("height comparability for f",
          RIv::certainly_leq(lhs, logH) && RIv::certainly_leq(logH, rhs));
  }

  rep.all_pass = true;
  for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

}  // namespace algx
