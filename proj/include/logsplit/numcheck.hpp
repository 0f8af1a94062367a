#pragma once

// Floating-point layer: integrates y^(m) = f, x' = y x and checks that
// x^k / h has logarithmic derivative e along trajectories. Nothing in the
// exact core depends on this header.

#include "logsplit/witness.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace logsplit {

struct Trajectory {
  std::vector<double> t_grid;
  /// y, y', ..., y^(m-1) at each grid point
  std::vector<std::vector<double>> y_states;
  std::vector<double> x_values;
  double step = 0;
  double horizon = 0;
  /// Set when a denominator came within 1e-9 of zero or a state exceeded
  /// 1e9; the grid then stops at the last good point.
  bool aborted = false;
};

class SingularInstance : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Classical fixed-step RK4 from time t0. init holds y, ..., y^(m-1), then x.
Trajectory integrate_system(const RatFun &f, const std::vector<double> &init, double step, double horizon,
                            FieldConfig cfg, double t0 = 0.0);

struct NumericOptions {
  double step = 1e-3;
  double horizon = 0.5;
  double tolerance = 1e-5;
  std::uint64_t seed = 20240917;
  /// Initial time; over Q(t) the default 1 avoids the pole of 1/t at 0.
  double t0_rationals = 0.0;
  double t0_function_field = 1.0;
  /// A step is unresolved when it differs from two half steps by more than
  /// this, relative to 1 + |state|. The trial is then scored up to that point.
  double resolution = 1e-9;
  /// Trials resolved for less than this span are redrawn.
  double min_span = 0.01;
};

struct NumericReport {
  double max_drift = 0;
  bool pass = false;
  int trials = 0;
  int rejected = 0;
  /// trials scored on a prefix because the trajectory approached a singularity
  int truncated = 0;
};

/// Falsifier for witnesses: drift = max |G(t)/G(t0) - z(t)| / |z(t)| with
/// G = x^k / h(state) and z' = e(t) z, z(t0) = 1. Draws that are singular at
/// t0 or unresolved before min_span are rejected; more than 100 rejections
/// throw SingularInstance.
NumericReport check_witness_numeric(const RatFun &f, const Witness &w, int trials, FieldConfig cfg,
                                    const NumericOptions &opts = {});

} // namespace logsplit
