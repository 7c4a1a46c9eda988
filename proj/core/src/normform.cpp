#include "algx/normform.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>

#include "algx/errors.hpp"

namespace algx {

namespace {

using Clock = std::chrono::steady_clock;

bool out_of_budget(const Clock::time_point& t0, unsigned long budget_ms) {
  if (budget_ms == 0) return false;
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
                .count();
  return ms > static_cast<long long>(budget_ms);
}

// sigma_i(theta)^j as machine complex numbers for screening
std::vector<std::vector<std::complex<double>>> embed_powers_d(
    const NumberField& K, int n) {
  std::vector<std::vector<std::complex<double>>> s;
  for (const CBall& e : K.embeddings(128)) {
    std::complex<double> z(e.mid().re.to_double(), e.mid().im.to_double());
    std::vector<std::complex<double>> row{1.0};
    for (int j = 1; j <= n; ++j) row.push_back(row.back() * z);
    s.push_back(std::move(row));
  }
  return s;
}

std::vector<std::vector<CBall>> embed_powers_ball(const NumberField& K, int n,
                                                  prec_t prec) {
  std::vector<std::vector<CBall>> s;
  for (const CBall& e : K.embeddings(prec)) {
    std::vector<CBall> row{CBall::exact(1, 0, prec)};
    for (int j = 1; j <= n; ++j) row.push_back(row.back() * e);
    s.push_back(std::move(row));
  }
  return s;
}

// visits one representative of each +-x pair (highest nonzero coordinate
// positive) with |x_i| <= X, and max |x_i| == X when exact_shell is set;
// visit(coords, estimated |norm|) -> false aborts the scan
bool scan_vectors(int n, long X, bool exact_shell,
                  const std::vector<std::vector<std::complex<double>>>& s,
                  const std::function<bool(const std::vector<long>&, double)>& visit) {
  const int d = static_cast<int>(s.size());
  std::vector<long> c(n + 1, 0);
  // partial[level * d + i] accumulates sum_{j >= level} c_j sigma_i^j
  std::vector<std::complex<double>> partial((n + 2) * d, 0.0);
  std::function<bool(int, bool, bool)> rec = [&](int j, bool lead_zero,
                                                 bool hit) -> bool {
    if (j < 0) {
      if (lead_zero) return true;          // zero vector
      if (exact_shell && !hit) return true;
      double est = 1.0;
      for (int i = 0; i < d; ++i) est *= std::abs(partial[i]);
      return visit(c, est);
    }
    long lo = lead_zero ? 0 : -X;
    for (long v = lo; v <= X; ++v) {
      c[j] = v;
      for (int i = 0; i < d; ++i)
        partial[j * d + i] = partial[(j + 1) * d + i] + double(v) * s[i][j];
      if (!rec(j - 1, lead_zero && v == 0, hit || v == X || v == -X))
        return false;
      c[j] = 0;
    }
    return true;
  };
  return rec(n, true, false);
}

double fit_slope(const std::vector<std::pair<double, double>>& pts,
                 double* residual) {
  double n = double(pts.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double den = n * sxx - sx * sx;
  if (pts.size() < 2 || den == 0) {
    *residual = 0;
    return 0;
  }
  double slope = (n * sxy - sx * sy) / den;
  double icept = (sy - slope * sx) / n;
  double rss = 0;
  for (auto& [x, y] : pts) {
    double e = y - (slope * x + icept);
    rss += e * e;
  }
  *residual = std::sqrt(rss / n);
  return slope;
}

// Gauss-Jordan elimination over K; returns pivot columns
std::vector<size_t> rref_K(std::vector<std::vector<FieldElement>>& M,
                           const NumberField& K) {
  std::vector<size_t> pivots;
  size_t rows = M.size(), cols = rows ? M[0].size() : 0, r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t p = r;
    while (p < rows && M[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(M[p], M[r]);
    FieldElement inv = M[r][col].inverse();
    for (size_t j = col; j < cols; ++j) M[r][j] = M[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][col].is_zero()) continue;
      FieldElement f = M[i][col];
      for (size_t j = col; j < cols; ++j) M[i][j] = M[i][j] - f * M[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  (void)K;
  return pivots;
}

FieldElement eval_vector(const std::vector<FieldElement>& sigma_pows,
                         const std::vector<mpz_class>& x,
                         const NumberField& K) {
  FieldElement acc = K.from_rational(0);
  for (size_t j = 0; j < x.size(); ++j)
    if (x[j] != 0) acc = acc + sigma_pows[j] * K.element(RatPoly::constant(mpq_class(x[j])));
  return acc;
}

}  // namespace

mpz_class norm_of_vector(const NumberField& K, const std::vector<mpz_class>& x) {
  IntPoly P((std::vector<mpz_class>(x)));
  if (P.is_zero()) return 0;
  if (P.degree() == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), P[0].get_mpz_t(), K.degree());
    return r;
  }
  return resultant(K.poly(), P);
}

EnumerationResult enumerate_solutions(const NumberField& K, int n,
                                      const mpz_class& m, const mpz_class& X_max,
                                      const EnumerateOptions& opt) {
  const int d = K.degree();
  if (n < 0 || n > d - 2)
    throw domain_error("enumerate_solutions: need 0 <= n <= d-2");
  if (m == 0) throw domain_error("enumerate_solutions: m must be nonzero");
  if (X_max < 1 || !X_max.fits_slong_p())
    throw domain_error("enumerate_solutions: bad X_max");

  auto s = embed_powers_d(K, n);
  auto sb = embed_powers_ball(K, n, 256);
  const double thr = 2.0 * std::abs(m.get_d()) + 2.0;
  auto t0 = Clock::now();

  EnumerationResult res;
  long checked = 0;
  bool done = scan_vectors(
      n, X_max.get_si(), false, s, [&](const std::vector<long>& c, double est) {
        if ((++checked & 0xffff) == 0 && out_of_budget(t0, opt.budget_ms))
          return false;
        if (est > thr) return true;
        std::vector<mpz_class> x(c.begin(), c.end());
        mpz_class norm = norm_of_vector(K, x);
        bool match = opt.match_sign ? (norm == m) : (abs(norm) == abs(m));
        if (!match) return true;
        // independent re-verification: the certified product of the
        // embedding images must contain the claimed integer
        CBall prod = CBall::exact(1, 0, 256);
        for (int i = 0; i < d; ++i) {
          CBall v = CBall::exact(0, 0, 256);
          for (int j = 0; j <= n; ++j)
            if (c[j] != 0) v = v + sb[i][j] * CBall::exact_int(c[j], 256);
          prod = prod * v;
        }
        if (!(prod - CBall::exact_int(norm, 256)).contains_zero())
          throw domain_error("enumerate_solutions: norm re-verification failed");
        mpz_class X = 0;
        for (const auto& xi : x) X = std::max(X, mpz_class(abs(xi)));
        res.solutions.push_back({x, norm, X, true});
        std::vector<mpz_class> nx;
        for (const auto& xi : x) nx.push_back(-xi);
        mpz_class nnorm = (d % 2 == 0) ? norm : -norm;
        res.solutions.push_back({std::move(nx), nnorm, X, false});
        return true;
      });
  res.partial = !done;
  return res;
}

MinNormProfile min_norm_profile(const NumberField& K, int n,
                                const mpz_class& X_max,
                                const ProfileOptions& opt) {
  const int d = K.degree();
  if (n < 0 || n > d - 2)
    throw domain_error("min_norm_profile: need 0 <= n <= d-2");
  if (X_max < 1 || !X_max.fits_slong_p())
    throw domain_error("min_norm_profile: bad X_max");

  auto s = embed_powers_d(K, n);
  auto t0 = Clock::now();
  MinNormProfile prof;
  long checked = 0;
  for (long X = 1; X <= X_max.get_si(); ++X) {
    std::optional<mpz_class> best;
    bool done = scan_vectors(
        n, X, true, s, [&](const std::vector<long>& c, double est) {
          if ((++checked & 0xffff) == 0 && out_of_budget(t0, opt.budget_ms))
            return false;
          if (best && est > 1.9 * best->get_d()) return true;
          std::vector<mpz_class> x(c.begin(), c.end());
          mpz_class norm = abs(norm_of_vector(K, x));
          if (!best || norm < *best) best = norm;
          return true;
        });
    if (!done) {
      prof.partial = true;
      break;
    }
    prof.shells.emplace_back(X, *best);
  }
  std::vector<std::pair<double, double>> pts;
  for (const auto& [X, v] : prof.shells)
    if (X >= opt.fit_min_shell)
      pts.emplace_back(std::log(X.get_d()), std::log(std::max(v.get_d(), 1.0)));
  prof.fitted_exponent = fit_slope(pts, &prof.fit_residual);
  return prof;
}

RelationMatrix relation_matrix(const NumberField& K, int n,
                               const ExpressOptions& opt) {
  const int d = K.degree();
  if (n < 0 || n > d - 2)
    throw domain_error("relation_matrix: need 0 <= n <= d-2");
  const int k = d - n - 1;

  RelationMatrix R;
  R.K = &K;
  R.n = n;

  std::vector<CBall> emb = K.embeddings(opt.prec);
  for (const CBall& disk : emb) {
    ExpressResult er = express_in_field(K, AlgebraicNumber(K.poly(), disk), opt);
    if (er.status != Cert::yes)
      throw domain_error("relation_matrix: field is not certified Galois");
    R.sigma.push_back(*er.element);
  }

  // conjugate pairing of the embedding columns
  R.conj_partner.assign(d, d);
  for (prec_t wp = opt.prec; ; wp *= 2) {
    if (wp > opt.prec_cap)
      throw precision_cap_reached("relation_matrix: conjugate pairing undecided");
    std::vector<CBall> e = wp == opt.prec ? emb : K.embeddings(wp);
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
      int found = -1;
      for (int j = 0; j < d; ++j)
        if (!CBall::disjoint(e[i].conj(), e[j])) {
          if (found >= 0) {
            ok = false;
            break;
          }
          found = j;
        }
      if (found < 0) ok = false;
      if (ok) R.conj_partner[i] = found;
    }
    if (ok) break;
  }

  // left kernel of V[i][j] = sigma_i^j: solve sum_i a_i sigma_i^j = 0
  std::vector<std::vector<FieldElement>> pw(d);
  for (int i = 0; i < d; ++i) {
    pw[i].push_back(K.from_rational(1));
    for (int j = 1; j <= n; ++j) pw[i].push_back(pw[i].back() * R.sigma[i]);
  }
  std::vector<std::vector<FieldElement>> M(n + 1);
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i < d; ++i) M[j].push_back(pw[i][j]);
  std::vector<size_t> pivots = rref_K(M, K);
  if (static_cast<int>(pivots.size()) != n + 1)
    throw domain_error("relation_matrix: embedding matrix is rank deficient");

  std::vector<char> is_pivot(d, 0);
  for (size_t p : pivots) is_pivot[p] = 1;
  for (int free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> row(d, K.from_rational(0));
    row[free] = K.from_rational(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      row[pivots[r]] = -M[r][free];
    R.A.push_back(std::move(row));
  }
  if (static_cast<int>(R.A.size()) != k)
    throw domain_error("relation_matrix: unexpected kernel dimension");

  // diagonalize the left k x k block
  for (int col = 0; col < k; ++col) {
    int p = col;
    while (p < k && R.A[p][col].is_zero()) ++p;
    if (p == k)
      throw domain_error("relation_matrix: leading columns are singular");
    std::swap(R.A[p], R.A[col]);
    for (int i = 0; i < k; ++i) {
      if (i == col || R.A[i][col].is_zero()) continue;
      FieldElement f = R.A[i][col] / R.A[col][col];
      for (int j = 0; j < d; ++j) R.A[i][j] = R.A[i][j] - f * R.A[col][j];
    }
  }

  // verify A.V = 0 exactly
  for (const auto& row : R.A)
    for (int j = 0; j <= n; ++j) {
      FieldElement acc = K.from_rational(0);
      for (int i = 0; i < d; ++i) acc = acc + row[i] * pw[i][j];
      if (!acc.is_zero())
        throw domain_error("relation_matrix: A.V = 0 verification failed");
    }
  return R;
}

std::vector<std::vector<CBall>> RelationMatrix::numeric(prec_t prec) const {
  std::vector<std::vector<CBall>> out;
  for (const auto& row : A) {
    std::vector<CBall> r;
    for (const auto& e : row) r.push_back(e.value(prec));
    out.push_back(std::move(r));
  }
  return out;
}

FullRankResult full_rank_condition(const RelationMatrix& Arm) {
  const int d = Arm.K->degree();
  const int k = static_cast<int>(Arm.A.size());
  std::vector<size_t> subset(k);
  FullRankResult res;
  res.full_rank = true;
  std::function<bool(int, int)> pick = [&](int idx, int from) -> bool {
    if (idx == k) {
      std::vector<std::vector<FieldElement>> Msub(k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) Msub[i].push_back(Arm.A[i][subset[j]]);
      std::vector<size_t> piv = rref_K(Msub, *Arm.K);
      if (static_cast<int>(piv.size()) < k) {
        res.full_rank = false;
        res.witness = subset;
        return false;
      }
      return true;
    }
    for (int c = from; c < d; ++c) {
      subset[idx] = c;
      if (!pick(idx + 1, c + 1)) return false;
    }
    return true;
  };
  pick(0, 0);
  return res;
}

std::vector<SubsumHit> vanishing_subsum_detect(const RelationMatrix& Arm,
                                               size_t row,
                                               const NormFormSolution& x) {
  if (row >= Arm.A.size())
    throw domain_error("vanishing_subsum_detect: row out of range");
  const NumberField& K = *Arm.K;
  const int d = K.degree();

  std::vector<std::vector<FieldElement>> pw(d);
  for (int i = 0; i < d; ++i) {
    pw[i].push_back(K.from_rational(1));
    for (size_t j = 1; j < x.coords.size(); ++j)
      pw[i].push_back(pw[i].back() * Arm.sigma[i]);
  }

  std::vector<size_t> support;
  std::vector<FieldElement> terms;
  for (int i = 0; i < d; ++i) {
    if (Arm.A[row][i].is_zero()) continue;
    support.push_back(i);
    terms.push_back(Arm.A[row][i] * eval_vector(pw[i], x.coords, K));
  }

  std::vector<SubsumHit> hits;
  const size_t sz = support.size();
  for (unsigned long mask = 1; mask < (1ul << sz); ++mask) {
    FieldElement acc = K.from_rational(0);
    for (size_t t = 0; t < sz; ++t)
      if (mask & (1ul << t)) acc = acc + terms[t];
    if (!acc.is_zero()) continue;
    SubsumHit hit;
    for (size_t t = 0; t < sz; ++t)
      if (mask & (1ul << t)) hit.support.push_back(support[t]);
    hit.conjugate_pair =
        hit.support.size() == 2 &&
        Arm.conj_partner[hit.support[0]] == hit.support[1];
    hits.push_back(std::move(hit));
  }
  return hits;
}

std::vector<size_t> solution_embedding_order(const NumberField& K,
                                             const NormFormSolution& x,
                                             prec_t prec) {
  const int d = K.degree();
  const int n = static_cast<int>(x.coords.size()) - 1;
  auto sb = embed_powers_ball(K, n, prec);
  std::vector<CBall> vals;
  for (int i = 0; i < d; ++i) {
    CBall v = CBall::exact(0, 0, prec);
    for (int j = 0; j <= n; ++j)
      if (x.coords[j] != 0) v = v + sb[i][j] * CBall::exact_int(x.coords[j], prec);
    vals.push_back(v);
  }
  // conjugate pairing at this precision
  std::vector<int> partner(d, -1);
  std::vector<CBall> emb = K.embeddings(prec);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!CBall::disjoint(emb[i].conj(), emb[j])) partner[i] = j;

  std::vector<std::pair<double, std::pair<int, int>>> pairs;
  std::vector<char> used(d, 0);
  for (int i = 0; i < d; ++i) {
    if (used[i]) continue;
    int j = partner[i] >= 0 ? partner[i] : i;
    used[i] = used[j] = 1;
    int first = i, second = j;
    if (!vals[j].im_iv().strictly_positive() &&
        vals[i].im_iv().strictly_positive()) {
      // keep the upper half plane value first
    } else if (vals[j].im_iv().strictly_positive()) {
      std::swap(first, second);
    }
    double mag = std::hypot(vals[first].mid().re.to_double(),
                            vals[first].mid().im.to_double());
    pairs.push_back({-mag, {first, second}});
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<size_t> order;
  for (const auto& [mag, pr] : pairs) {
    order.push_back(pr.first);
    if (pr.second != pr.first) order.push_back(pr.second);
  }
  return order;
}

}  // namespace algx
