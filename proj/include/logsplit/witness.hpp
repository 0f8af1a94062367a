#pragma once

#include "logsplit/ratfun.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace logsplit {

/// (h, e, k) with (k*x0 - e)*h = Lie(h), h != 0, k != 0.
struct Witness {
  RatFun h;
  BaseElem e;
  long k = 1;
};

/// X(p) = cofactor * p for the cleared vector field X.
struct DarbouxPair {
  MultiPoly p;
  MultiPoly cofactor;
};

enum class Outcome { Found, ExhaustedBounds, NoWitnessAnyDegree };

struct SearchBounds {
  int deg_h = 0;
  int deg_cofactor = 0;
  int kmax = 0;
  int e_tdeg = 0;
};

struct SearchReport {
  Outcome outcome = Outcome::ExhaustedBounds;
  std::optional<Witness> witness;
  SearchBounds bounds;
  /// Set for NoWitnessAnyDegree.
  std::string reason;
  std::vector<DarbouxPair> darboux_pairs;
  long long timing_ms = 0;
  /// Caveats about completeness, e.g. a branch cap that was reached.
  std::vector<std::string> notes;
};

/// Raised by construct_f when dh/dx_{m-1} vanishes.
class DegenerateAnsatz : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct SearchOptions {
  /// Added to the t-degree bound of cofactors over Q(t).
  int cofactor_slack = 1;
  /// Over Q(t): t-degree bound of the polynomial ansatze (Darboux factors
  /// and direct-oracle h).
  int e_tdeg = 2;
  std::size_t max_branches = 10000;
  /// Budget of the search for factors with arbitrary cofactors: Groebner
  /// pairs and term operations per system (0 pairs disables it), and number
  /// of unknowns.
  std::size_t general_max_pairs = 2000;
  std::size_t general_max_work = 20000000;
  int general_max_vars = 64;
};

/// The denominator-cleared derivation: X(x_i) = Q_f*x_{i+1} (i < m-1),
/// X(x_{m-1}) = P_f, with coefficient action Q_f*delta.
struct VectorField {
  std::vector<MultiPoly> components;
  MultiPoly q;
};

VectorField polynomial_vector_field(const RatFun &f, FieldConfig cfg);
/// X(h) for a polynomial h; equals Q_f * lie_derivative(h, f).
MultiPoly apply_vector_field(const VectorField &x, const MultiPoly &h, FieldConfig cfg);

bool verify_witness(const RatFun &f, const Witness &w, FieldConfig cfg);

/// The unique f making (h, e, k) a witness; throws DegenerateAnsatz.
RatFun construct_f(const RatFun &h, const BaseElem &e, long k, FieldConfig cfg);

/// Monic square-free Darboux polynomials of total degree <= deg_p.
std::vector<DarbouxPair> find_darboux(const RatFun &f, int deg_p, FieldConfig cfg,
                                      const SearchOptions &opts = {},
                                      std::vector<std::string> *notes = nullptr);

/// Cofactor degree bound used by find_darboux.
int cofactor_degree_bound(const RatFun &f, FieldConfig cfg, const SearchOptions &opts = {});

/// h = prod p_j^{n_j} whose cofactor is Q_f*(k*x0 - e), scaled to integers.
std::optional<Witness> combine_cofactors(const std::vector<DarbouxPair> &pairs, const MultiPoly &q_f,
                                         int kmax, FieldConfig cfg);

/// Linear-ansatz oracle for polynomial h of total degree <= deg_h.
std::optional<Witness> search_witness_direct(const RatFun &f, int deg_h, int kmax, FieldConfig cfg,
                                             const SearchOptions &opts = {},
                                             std::vector<std::string> *notes = nullptr);

/// NoWitnessAnyDegree for affine-linear f, otherwise nothing.
std::optional<SearchReport> nonexistence_linear(const RatFun &f, FieldConfig cfg);

SearchReport search_witness(const RatFun &f, int deg, int kmax, FieldConfig cfg,
                            const SearchOptions &opts = {});

} // namespace logsplit
