#include "logsplit/numcheck.hpp"

#include <cmath>
#include <functional>
#include <random>

namespace logsplit {

namespace {

constexpr double kTinyDen = 1e-9;
constexpr double kHuge = 1e9;
constexpr int kMaxRejections = 100;

double horner(const UPoly &p, double t) {
  double acc = 0.0;
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * t + p.coeff(i).get_d();
  return acc;
}

double eval_base(const BaseElem &c, double t) { return horner(c.num(), t) / horner(c.den(), t); }

// A polynomial with F-coefficients, flattened for repeated evaluation.
struct NumPoly {
  std::vector<std::vector<int>> exps;
  std::vector<BaseElem> coeffs;

  explicit NumPoly(const MultiPoly &p) {
    for (const auto &[mono, c] : p.terms()) {
      exps.push_back(mono);
      coeffs.push_back(c);
    }
  }
  double operator()(const double *x, double t) const {
    double acc = 0.0;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      double v = eval_base(coeffs[k], t);
      for (std::size_t i = 0; i < exps[k].size(); ++i)
        for (int j = 0; j < exps[k][i]; ++j)
          v *= x[i];
      acc += v;
    }
    return acc;
  }
};

struct NumRatFun {
  NumPoly num, den;
  explicit NumRatFun(const RatFun &r) : num(r.num()), den(r.den()) {}
  /// False when the denominator is within kTinyDen of zero.
  bool operator()(const double *x, double t, double &out) const {
    const double d = den(x, t);
    if (!(std::fabs(d) >= kTinyDen))
      return false;
    out = num(x, t) / d;
    return true;
  }
};

using Rhs = std::function<bool(double t, const std::vector<double> &s, std::vector<double> &ds)>;

bool finite_and_bounded(const std::vector<double> &s) {
  for (double v : s)
    if (!std::isfinite(v) || std::fabs(v) > kHuge)
      return false;
  return true;
}

// Returns false if the step could not be taken.
bool rk4_step(const Rhs &rhs, double t, double h, std::vector<double> &s) {
  const std::size_t n = s.size();
  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
  if (!rhs(t, s, k1))
    return false;
  for (std::size_t i = 0; i < n; ++i)
    tmp[i] = s[i] + 0.5 * h * k1[i];
  if (!rhs(t + 0.5 * h, tmp, k2))
    return false;
  for (std::size_t i = 0; i < n; ++i)
    tmp[i] = s[i] + 0.5 * h * k2[i];
  if (!rhs(t + 0.5 * h, tmp, k3))
    return false;
  for (std::size_t i = 0; i < n; ++i)
    tmp[i] = s[i] + h * k3[i];
  if (!rhs(t + h, tmp, k4))
    return false;
  for (std::size_t i = 0; i < n; ++i)
    tmp[i] = s[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  if (!finite_and_bounded(tmp))
    return false;
  s = std::move(tmp);
  return true;
}

// Step-doubling estimate: the full step agrees with two half steps.
bool resolved(const std::vector<double> &full, const std::vector<double> &half, double tol) {
  for (std::size_t i = 0; i < full.size(); ++i)
    if (std::fabs(full[i] - half[i]) > tol * (1.0 + std::fabs(half[i])))
      return false;
  return true;
}

// y^(m) = f, x' = y x, and optionally z' = e(t) z as the last component.
Rhs pullback_rhs(const NumRatFun &f, int m, const BaseElem *e) {
  return [&f, m, e](double t, const std::vector<double> &s, std::vector<double> &ds) {
    for (int i = 0; i + 1 < m; ++i)
      ds[i] = s[i + 1];
    double fy = 0;
    if (!f(s.data(), t, fy))
      return false;
    ds[m - 1] = fy;
    ds[m] = s[0] * s[m];
    if (e)
      ds[m + 1] = eval_base(*e, t) * s[m + 1];
    return true;
  };
}

void check_field(const RatFun &f, FieldConfig cfg) {
  if (!cfg.has_t() && f.involves_t())
    throw std::invalid_argument("t occurs but the base field is Q");
}

} // namespace

Trajectory integrate_system(const RatFun &f, const std::vector<double> &init, double step, double horizon,
                            FieldConfig cfg, double t0) {
  check_field(f, cfg);
  const int m = f.order();
  if (static_cast<int>(init.size()) != m + 1)
    throw std::invalid_argument("integrate_system: expected m + 1 initial values");
  if (!(step > 0) || !(horizon >= step))
    throw std::invalid_argument("integrate_system: need step > 0 and horizon >= step");
  if (init[m] == 0.0)
    throw std::invalid_argument("integrate_system: x(0) must be nonzero");
  const NumRatFun nf(f);
  double probe = 0;
  if (!nf(init.data(), t0, probe))
    throw std::invalid_argument("integrate_system: denominator of f vanishes at the initial point");

  Trajectory tr;
  tr.step = step;
  tr.horizon = horizon;
  const Rhs rhs = pullback_rhs(nf, m, nullptr);
  std::vector<double> s = init;
  auto record = [&](double t) {
    tr.t_grid.push_back(t);
    tr.y_states.emplace_back(s.begin(), s.begin() + m);
    tr.x_values.push_back(s[m]);
  };
  record(t0);
  const long steps = std::lround(horizon / step);
  for (long i = 0; i < steps; ++i) {
    const double t = t0 + static_cast<double>(i) * step;
    if (!rk4_step(rhs, t, step, s) || s[m] == 0.0) {
      tr.aborted = true;
      break;
    }
    record(t0 + static_cast<double>(i + 1) * step);
  }
  return tr;
}

NumericReport check_witness_numeric(const RatFun &f, const Witness &w, int trials, FieldConfig cfg,
                                    const NumericOptions &opts) {
  check_field(f, cfg);
  if (f.order() != w.h.order())
    throw std::invalid_argument("check_witness_numeric: order mismatch");
  if (w.h.is_zero() || w.k == 0)
    throw std::invalid_argument("check_witness_numeric: need h != 0 and k != 0");
  if (trials < 1)
    throw std::invalid_argument("check_witness_numeric: trials must be positive");
  const int m = f.order();
  const double t0 = cfg.has_t() ? opts.t0_function_field : opts.t0_rationals;
  const NumRatFun nf(f), nh(w.h);
  const Rhs rhs = pullback_rhs(nf, m, &w.e);
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> draw(1.0, 2.0);

  // log|G| = k log|x| - log|h|, kept in logs to avoid overflow of x^k
  auto log_g = [&](const std::vector<double> &s, double t, double &out, double &sign) {
    double hv = 0;
    if (!nh(s.data(), t, hv) || std::fabs(hv) < kTinyDen)
      return false;
    out = static_cast<double>(w.k) * std::log(std::fabs(s[m])) - std::log(std::fabs(hv));
    sign = ((w.k % 2 != 0 && s[m] < 0) != (hv < 0)) ? -1.0 : 1.0;
    return true;
  };

  NumericReport rep;
  const long steps = std::lround(opts.horizon / opts.step);
  while (rep.trials < trials) {
    std::vector<double> s(static_cast<std::size_t>(m + 2));
    for (int i = 0; i < m; ++i)
      s[i] = draw(rng);
    s[m] = 1.0;
    s[m + 1] = 1.0;
    double fv = 0, g0 = 0, sign0 = 1;
    if (!nf(s.data(), t0, fv) || !log_g(s, t0, g0, sign0)) {
      if (++rep.rejected > kMaxRejections)
        throw SingularInstance("check_witness_numeric: every initial draw was singular");
      continue;
    }
    double drift = 0;
    double reached = t0;
    bool cut = false;
    for (long i = 0; i < steps; ++i) {
      const double t = t0 + static_cast<double>(i) * opts.step;
      std::vector<double> half = s;
      double g = 0, sign = 1;
      if (!rk4_step(rhs, t, opts.step, s) || s[m] == 0.0 || !rk4_step(rhs, t, opts.step / 2, half) ||
          !rk4_step(rhs, t + opts.step / 2, opts.step / 2, half) || !resolved(s, half, opts.resolution) ||
          !log_g(s, t + opts.step, g, sign)) {
        cut = true;
        break;
      }
      const double ratio = sign * sign0 * std::exp(g - g0);
      const double z = s[m + 1];
      drift = std::max(drift, std::fabs(ratio - z) / std::fabs(z));
      reached = t + opts.step;
    }
    if (cut && reached - t0 < opts.min_span) {
      if (++rep.rejected > kMaxRejections)
        throw SingularInstance("check_witness_numeric: every trajectory ran into a singularity");
      continue;
    }
    ++rep.trials;
    rep.truncated += cut ? 1 : 0;
    rep.max_drift = std::max(rep.max_drift, drift);
  }
  rep.pass = rep.max_drift < opts.tolerance;
  return rep;
}

} // namespace logsplit
