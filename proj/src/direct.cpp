#include "logsplit/bridge.hpp"
#include "logsplit/engine.hpp"
#include "logsplit/linalg.hpp"
#include "logsplit/polysystem.hpp"
#include "logsplit/qroots.hpp"
#include "logsplit/witness.hpp"

#include <algorithm>
#include <map>

namespace logsplit {

using internal::EngineField;
using internal::Mono;
using internal::QPoly;
using internal::key_of;

namespace {

struct Candidate {
  long k;
  MultiPoly h;
  BaseElem e;
};

// Order of preference: |k|, total degree of h, graded-lex order of h.
bool better(const Candidate &a, const Candidate &b) {
  if (std::labs(a.k) != std::labs(b.k))
    return std::labs(a.k) < std::labs(b.k);
  if (a.h.total_degree() != b.h.total_degree())
    return a.h.total_degree() < b.h.total_degree();
  if (a.h.lead_monomial() != b.h.lead_monomial())
    return GrlexGreater{}(b.h.lead_monomial(), a.h.lead_monomial());
  return a.k > b.k;
}

void add_note(std::vector<std::string> *notes, const std::string &s) {
  if (notes && std::find(notes->begin(), notes->end(), s) == notes->end())
    notes->push_back(s);
}

std::vector<long> k_order(int kmax) {
  std::vector<long> ks;
  for (long k = 1; k <= kmax; ++k) {
    ks.push_back(k);
    ks.push_back(-k);
  }
  return ks;
}

// Over Q: the pencil (A_k - e B) c = 0 with h = sum c_j mono_j.
std::optional<Candidate> direct_rationals(const EngineField &x, const std::vector<Mono> &monos, long k,
                                          std::vector<std::string> *notes) {
  const int n = x.n;
  const int cols = static_cast<int>(monos.size());
  std::map<std::string, int> row_of;
  std::vector<std::vector<std::pair<int, mpq_class>>> a_entries, b_entries;
  auto row = [&](const Mono &mono) {
    auto [it, inserted] = row_of.emplace(key_of(mono, n), static_cast<int>(row_of.size()));
    if (inserted) {
      a_entries.emplace_back();
      b_entries.emplace_back();
    }
    return it->second;
  };
  const QPoly kx0q = x.qhat * QPoly::variable(n, 0) * mpq_class(k);
  for (int j = 0; j < cols; ++j) {
    const QPoly mono = QPoly::term(n, monos[j], 1);
    const QPoly a = kx0q * mono - internal::apply_engine(x, mono);
    for (const auto &t : a.terms())
      a_entries[row(t.m)].emplace_back(j, t.c);
    const QPoly b = x.qhat * mono;
    for (const auto &t : b.terms())
      b_entries[row(t.m)].emplace_back(j, t.c);
  }
  const int rows = static_cast<int>(row_of.size());
  internal::PolyMatrix pm(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (const auto &[j, c] : a_entries[r])
      pm.at(r, j) = pm.at(r, j) + UPoly(c);
    for (const auto &[j, c] : b_entries[r])
      pm.at(r, j) = pm.at(r, j) - UPoly(std::vector<mpq_class>{0, c});
  }

  const auto br = internal::bareiss_rank(pm);
  // the rank drops exactly at roots of the minor; below full column rank
  // there is a kernel for every e, and e = 0 represents the generic case
  std::vector<mpq_class> es = rational_roots(br.minor);
  if (has_irrational_roots(br.minor))
    add_note(notes, "witness may exist over an algebraic extension");
  if (br.rank < cols && std::find(es.begin(), es.end(), mpq_class(0)) == es.end())
    es.push_back(0);
  std::optional<Candidate> best;
  for (const auto &e0 : es) {
    const auto ker = internal::kernel_basis(pm.evaluate(e0));
    if (ker.empty())
      continue;
    // smallest free column = least leading monomial
    const auto &v = ker.front();
    MultiPoly h(x.m);
    for (int j = 0; j < cols; ++j)
      if (v[j] != 0) {
        Monomial mono(static_cast<std::size_t>(x.m));
        for (int i = 0; i < x.m; ++i)
          mono[i] = monos[j].e[i];
        h.add_term(mono, BaseElem(v[j]));
      }
    Candidate c{k, h.monic(), BaseElem(e0)};
    if (!best || better(c, *best))
      best = std::move(c);
  }
  return best;
}

// Over Q(t): bilinear system in the coefficients of h and of b(t), with
// e = b(t) * Q1 / qhat (see pencil_basis), normalized per leading monomial.
std::optional<Candidate> direct_function_field(const EngineField &x, const std::vector<Mono> &monos, long k,
                                               const SearchOptions &opts, std::vector<std::string> *notes) {
  const int n = x.n, m = x.m;
  const QPoly kx0q = x.qhat * QPoly::variable(n, 0) * mpq_class(k);
  std::vector<QPoly> images;
  for (const auto &mono : monos) {
    const QPoly p = QPoly::term(n, mono, 1);
    images.push_back(internal::apply_engine(x, p) - kx0q * p);
  }
  const auto basis = internal::pencil_basis(x);
  internal::SolveOptions sopts;
  sopts.max_branches = opts.max_branches;
  for (std::size_t lead = 0; lead < monos.size(); ++lead) {
    if (internal::x_degree(QPoly::term(n, monos[lead], 1), m) < 1)
      continue;
    const int nv = static_cast<int>(lead + basis.size());
    if (nv > internal::kMaxVars) {
      add_note(notes, "direct ansatz exceeded the variable limit");
      break;
    }
    const auto res = internal::solve_rational(internal::lead_system(images, monos, lead, basis, n), nv, sopts);
    if (res.irrational)
      add_note(notes, "witness may exist over an algebraic extension");
    if (res.cap_hit || res.gb_aborted || res.singular)
      add_note(notes, "direct search budget exhausted; some witnesses may be missing");
    std::optional<Candidate> best;
    for (const auto &sol : res.solutions) {
      std::vector<internal::Term> ht{{monos[lead], mpq_class(1)}};
      for (std::size_t j = 0; j < lead; ++j)
        if (sol[j] != 0)
          ht.push_back({monos[j], sol[j]});
      QPoly eq(n);
      for (std::size_t v = 0; v < basis.size(); ++v)
        eq += basis[v] * mpq_class(sol[lead + v]);
      // e = eq / qhat, a function of t alone
      const MultiPoly num = internal::from_qpoly(eq, m, true);
      const MultiPoly den = internal::from_qpoly(x.qhat, m, true);
      const RatFun er(num, den);
      if (!er.is_zero() && (!er.num().is_constant() || !er.den().is_constant()))
        continue;
      const BaseElem e = er.is_zero() ? BaseElem() : er.num().lead_coeff() / er.den().lead_coeff();
      Candidate c{k, internal::from_qpoly(QPoly::from_terms(n, std::move(ht)), m, true).monic(), e};
      if (!best || better(c, *best))
        best = std::move(c);
    }
    if (best)
      return best;
  }
  return std::nullopt;
}

} // namespace

std::optional<Witness> search_witness_direct(const RatFun &f, int deg_h, int kmax, FieldConfig cfg,
                                             const SearchOptions &opts, std::vector<std::string> *notes) {
  if (deg_h < 0 || kmax < 1)
    throw std::invalid_argument("search_witness_direct: invalid bounds");
  const EngineField x = internal::make_engine_field(f, cfg);
  const auto monos = internal::monomials_upto(x.m, x.with_t, deg_h, x.with_t ? opts.e_tdeg : 0);
  std::optional<Candidate> best;
  for (long k : k_order(kmax)) {
    if (best && std::labs(k) > std::labs(best->k))
      break;
    auto c = x.with_t ? direct_function_field(x, monos, k, opts, notes) : direct_rationals(x, monos, k, notes);
    if (!c)
      continue;
    // normalizing h by a function of t shifts e by its logarithmic derivative
    const RatFun h(c->h);
    const RatFun er = (RatFun::variable(x.m, 0) * RatFun::constant(x.m, BaseElem(c->k)) * h -
                       lie_derivative(h, f, cfg)) /
                      h;
    if (!er.num().is_constant() || !er.den().is_constant()) {
      add_note(notes, "direct candidate failed verification and was discarded");
      continue;
    }
    c->e = er.is_zero() ? BaseElem() : er.num().lead_coeff() / er.den().lead_coeff();
    Witness w{h, c->e, c->k};
    if (!verify_witness(f, w, cfg)) {
      add_note(notes, "direct candidate failed verification and was discarded");
      continue;
    }
    if (!best || better(*c, *best))
      best = std::move(c);
  }
  if (!best)
    return std::nullopt;
  return Witness{RatFun(best->h), best->e, best->k};
}

} // namespace logsplit
