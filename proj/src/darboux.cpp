#include "logsplit/bridge.hpp"
#include "logsplit/engine.hpp"
#include "logsplit/polysystem.hpp"
#include "logsplit/witness.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace logsplit {

using internal::EngineField;
using internal::Mono;
using internal::QPoly;
using internal::Term;
using internal::key_of;
using internal::monomials_upto;

namespace {

struct Bounds {
  int cof_x;
  int cof_t;
};

Bounds cofactor_bounds(const EngineField &x, int slack) {
  int dx = 0, dt = 0;
  for (int i = 0; i < x.m; ++i) {
    dx = std::max(dx, internal::x_degree(x.comp[i], x.m) - 1);
    dt = std::max(dt, internal::t_degree(x.comp[i], x.m));
  }
  if (x.with_t) {
    dx = std::max(dx, internal::x_degree(x.qhat, x.m));
    dt = std::max(dt, internal::t_degree(x.qhat, x.m) - 1);
  }
  // the x-degree bound is exact; slack only widens the t-degree
  return {dx, x.with_t ? dt + slack : 0};
}

bool squarefree_in_x(const QPoly &p, int m) {
  QPoly g = p;
  for (int i = 0; i < m && internal::x_degree(g, m) > 0; ++i) {
    QPoly d = p.derivative(i);
    if (!d.is_zero())
      g = internal::gcd(g, d);
  }
  return internal::x_degree(g, m) <= 0;
}

void add_note(std::vector<std::string> *notes, const std::string &s) {
  if (notes && std::find(notes->begin(), notes->end(), s) == notes->end())
    notes->push_back(s);
}

} // namespace

int cofactor_degree_bound(const RatFun &f, FieldConfig cfg, const SearchOptions &opts) {
  return cofactor_bounds(internal::make_engine_field(f, cfg), opts.cofactor_slack).cof_x;
}

std::vector<DarbouxPair> find_darboux(const RatFun &f, int deg_p, FieldConfig cfg, const SearchOptions &opts,
                                      std::vector<std::string> *notes) {
  if (deg_p < 1)
    throw std::invalid_argument("find_darboux: degree must be positive");
  const EngineField x = internal::make_engine_field(f, cfg);
  const int m = x.m, n = x.n;
  const Bounds b = cofactor_bounds(x, opts.cofactor_slack);
  const int tp = x.with_t ? opts.e_tdeg : 0;
  const std::vector<Mono> pmonos = monomials_upto(m, x.with_t, deg_p, tp);
  std::vector<QPoly> images;
  for (const auto &mono : pmonos)
    images.push_back(internal::apply_engine(x, QPoly::term(n, mono, 1)));

  const VectorField vf = polynomial_vector_field(f, cfg);
  std::vector<DarbouxPair> out;

  auto accept = [&](const std::vector<mpq_class> &sol, std::size_t lead) {
    std::vector<Term> pt{{pmonos[lead], mpq_class(1)}};
    for (std::size_t j = 0; j < lead; ++j)
      if (sol[j] != 0)
        pt.push_back({pmonos[j], sol[j]});
    const QPoly ph = QPoly::from_terms(n, std::move(pt));
    if (!squarefree_in_x(ph, m))
      return;
    MultiPoly p = internal::from_qpoly(ph, m, x.with_t).monic();
    if (std::any_of(out.begin(), out.end(), [&](const DarbouxPair &d) { return d.p == p; }))
      return;
    const MultiPoly xp = apply_vector_field(vf, p, cfg);
    MultiPoly alpha;
    try {
      alpha = xp.exact_div(p);
    } catch (const std::logic_error &) {
      return;
    }
    if (alpha * p != xp)
      return;
    out.push_back({std::move(p), std::move(alpha)});
  };

  auto run_phase = [&](const std::vector<QPoly> &basis, const internal::SolveOptions &sopts, bool general) {
    for (std::size_t lead = 0; lead < pmonos.size(); ++lead) {
      if (internal::x_degree(QPoly::term(n, pmonos[lead], 1), m) < 1)
        continue;
      const int nvars = static_cast<int>(lead + basis.size());
      if (nvars > (general ? opts.general_max_vars : internal::kMaxVars)) {
        add_note(notes, "Darboux ansatz exceeded the variable limit and was skipped");
        continue;
      }
      const auto system = internal::lead_system(images, pmonos, lead, basis, n);
      const auto res = internal::solve_rational(system, nvars, sopts);
      if (res.cap_hit)
        add_note(notes, "Darboux branch cap reached; some factors may be missing");
      if (res.gb_aborted)
        add_note(notes, "Groebner budget exhausted; some factors may be missing");
      if (res.singular)
        add_note(notes, "a multiple solution could not be lifted; some factors may be missing");
      if (res.irrational)
        add_note(notes, "some Darboux factors need an algebraic extension and were skipped");
      if (res.positive_dim)
        add_note(notes, "infinite Darboux families were sampled");
      for (const auto &sol : res.solutions)
        accept(sol, lead);
    }
  };

  // Phase 1: cofactors a*x0*Q + b(t)*Q/c with a in Q, where c is the
  // x-content of Q. These are the factors a witness can consist of alone.
  {
    std::vector<QPoly> basis{x.qhat * QPoly::variable(n, 0)};
    for (auto &q : internal::pencil_basis(x))
      basis.push_back(std::move(q));
    internal::SolveOptions sopts;
    sopts.max_branches = opts.max_branches;
    run_phase(basis, sopts, false);
  }

  // Phase 2: arbitrary cofactors within the degree bounds, under a budget.
  if (opts.general_max_pairs > 0) {
    std::vector<QPoly> basis;
    for (const auto &mono : monomials_upto(m, x.with_t, b.cof_x, b.cof_t))
      basis.push_back(QPoly::term(n, mono, 1));
    internal::SolveOptions sopts;
    sopts.max_branches = opts.max_branches;
    sopts.max_gb_pairs = opts.general_max_pairs;
    sopts.max_gb_work = opts.general_max_work;
    run_phase(basis, sopts, true);
  }

  std::stable_sort(out.begin(), out.end(), [](const DarbouxPair &a, const DarbouxPair &b) {
    const int da = a.p.total_degree(), db = b.p.total_degree();
    if (da != db)
      return da < db;
    return GrlexGreater{}(b.p.lead_monomial(), a.p.lead_monomial());
  });
  return out;
}

} // namespace logsplit
