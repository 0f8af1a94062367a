#include "logsplit/witness.hpp"

#include "logsplit/linalg.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

namespace logsplit {

namespace {

void check_witness_shape(const RatFun &f, const Witness &w) {
  if (f.order() != w.h.order())
    throw std::invalid_argument("witness: order mismatch");
  if (w.h.is_zero())
    throw std::invalid_argument("witness: h must be nonzero");
  if (w.k == 0)
    throw std::invalid_argument("witness: k must be nonzero");
}

RatFun shifted_x0(int m, long k, const BaseElem &e) {
  return RatFun::variable(m, 0) * RatFun::constant(m, BaseElem(k)) - RatFun::constant(m, e);
}

} // namespace

bool verify_witness(const RatFun &f, const Witness &w, FieldConfig cfg) {
  check_witness_shape(f, w);
  const int m = f.order();
  return (shifted_x0(m, w.k, w.e) * w.h - lie_derivative(w.h, f, cfg)).is_zero();
}

RatFun construct_f(const RatFun &h, const BaseElem &e, long k, FieldConfig cfg) {
  const int m = h.order();
  if (k == 0)
    throw std::invalid_argument("construct_f: k must be nonzero");
  const RatFun dh = partial(h, m - 1);
  if (dh.is_zero())
    throw DegenerateAnsatz("construct_f: h does not depend on x_{m-1}");
  RatFun num = shifted_x0(m, k, e) * h - delta_F(h, cfg);
  for (int i = 0; i + 1 < m; ++i)
    num -= partial(h, i) * RatFun::variable(m, i + 1);
  return num / dh;
}

std::optional<SearchReport> nonexistence_linear(const RatFun &f, FieldConfig cfg) {
  if (!cfg.has_t() && f.involves_t())
    throw std::invalid_argument("t occurs but the base field is Q");
  if (!f.is_polynomial() || f.num().total_degree() > 1)
    return std::nullopt;
  SearchReport r;
  r.outcome = Outcome::NoWitnessAnyDegree;
  r.reason = "valuation argument";
  return r;
}

std::optional<Witness> combine_cofactors(const std::vector<DarbouxPair> &pairs0, const MultiPoly &q_f,
                                         int kmax, FieldConfig cfg) {
  if (pairs0.empty() || q_f.is_zero())
    return std::nullopt;
  const int m = q_f.order();
  std::vector<DarbouxPair> pairs = pairs0;
  std::stable_sort(pairs.begin(), pairs.end(), [](const DarbouxPair &a, const DarbouxPair &b) {
    const int da = a.p.total_degree(), db = b.p.total_degree();
    if (da != db)
      return da < db;
    return GrlexGreater{}(b.p.lead_monomial(), a.p.lead_monomial());
  });
  const MultiPoly q = q_f.monic();
  const Monomial &lq = q.lead_monomial();
  // g - [g]_{LM(Q)} * Q removes the part absorbed by e*Q
  auto project = [&](const MultiPoly &g) { return g - q * g.coeff(lq); };
  const std::size_t np = pairs.size();
  std::vector<MultiPoly> cols;
  for (const auto &pr : pairs)
    cols.push_back(project(pr.cofactor));
  const MultiPoly target = project(MultiPoly::variable(m, 0) * q);

  // One Q-row per (monomial, t-power) after clearing t-denominators per monomial.
  std::map<Monomial, std::vector<BaseElem>, GrlexGreater> rows;
  auto put = [&](const MultiPoly &g, std::size_t col) {
    for (const auto &[mono, c] : g.terms()) {
      auto &row = rows[mono];
      row.resize(np + 1);
      row[col] = c;
    }
  };
  for (std::size_t j = 0; j < np; ++j)
    put(cols[j], j);
  put(target, np);
  std::vector<std::vector<mpq_class>> qrows;
  for (auto &[mono, row] : rows) {
    UPoly den(1);
    for (const auto &c : row)
      den = lcm(den, c.den());
    int maxdeg = 0;
    std::vector<UPoly> polys;
    for (const auto &c : row) {
      UPoly p = c.num() * den.exact_div(c.den());
      maxdeg = std::max(maxdeg, p.degree());
      polys.push_back(std::move(p));
    }
    for (int d = 0; d <= maxdeg; ++d) {
      std::vector<mpq_class> r;
      for (const auto &p : polys)
        r.push_back(p.coeff(d));
      qrows.push_back(std::move(r));
    }
  }
  internal::QMatrix a(static_cast<int>(qrows.size()), static_cast<int>(np));
  std::vector<mpq_class> rhs(qrows.size());
  for (std::size_t i = 0; i < qrows.size(); ++i) {
    for (std::size_t j = 0; j < np; ++j)
      a.at(static_cast<int>(i), static_cast<int>(j)) = qrows[i][j];
    rhs[i] = qrows[i][np];
  }
  std::vector<mpq_class> n;
  if (!internal::solve_particular(a, rhs, n))
    return std::nullopt;

  mpz_class lambda = 1;
  for (const auto &v : n)
    lambda = lcm(lambda, mpz_class(v.get_den()));
  if (lambda > kmax)
    return std::nullopt;
  const long lam = lambda.get_si();

  MultiPoly r = MultiPoly::variable(m, 0) * q * BaseElem(-1);
  RatFun h = RatFun::constant(m, BaseElem(1));
  for (std::size_t j = 0; j < np; ++j) {
    if (n[j] == 0)
      continue;
    r += pairs[j].cofactor * BaseElem(n[j]);
    const mpq_class ex = n[j] * lam;
    h *= RatFun(pairs[j].p).pow(static_cast<int>(ex.get_num().get_si()));
  }
  const BaseElem e = -r.coeff(lq) * BaseElem(lam);
  (void)cfg;
  return Witness{h, e, lam};
}

SearchReport search_witness(const RatFun &f, int deg, int kmax, FieldConfig cfg, const SearchOptions &opts) {
  if (deg < 1 || kmax < 1)
    throw std::invalid_argument("search_witness: bounds must be positive");
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
        .count();
  };
  SearchBounds bounds{deg, cofactor_degree_bound(f, cfg, opts), kmax, opts.e_tdeg};
  if (auto lin = nonexistence_linear(f, cfg)) {
    lin->bounds = bounds;
    lin->timing_ms = elapsed();
    return *lin;
  }
  SearchReport rep;
  rep.bounds = bounds;
  const auto q = clear_denominators(f).second;
  // Pencil cofactors first; the budgeted general search only when they do not combine.
  SearchOptions pencil = opts;
  pencil.general_max_pairs = 0;
  for (const SearchOptions *o : {static_cast<const SearchOptions *>(&pencil), &opts}) {
    rep.notes.clear();
    rep.darboux_pairs = find_darboux(f, deg, cfg, *o, &rep.notes);
    if (auto w = combine_cofactors(rep.darboux_pairs, q, kmax, cfg)) {
      if (verify_witness(f, *w, cfg)) {
        rep.outcome = Outcome::Found;
        rep.witness = std::move(w);
        break;
      }
      rep.notes.push_back("combined witness failed verification and was discarded");
    }
    if (opts.general_max_pairs == 0)
      break;
  }
  if (rep.outcome != Outcome::Found && cfg.has_t())
    rep.notes.push_back("t-degree of the polynomial ansatz bounded by " + std::to_string(opts.e_tdeg) +
                        "; witnesses needing larger t-degree were not searched");
  rep.timing_ms = elapsed();
  return rep;
}

} // namespace logsplit
