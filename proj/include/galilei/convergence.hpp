#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "galilei/contraction.hpp"
#include "galilei/execution.hpp"

namespace galilei {

/// A quantity with a known c -> infinity limit. `measured` and `zeta` are
/// evaluated in quad precision: the signals of interest are O(1/c^2) next to
/// O(c^2) intermediate terms, which double precision cannot resolve at the
/// top of the default grid.
struct LimitExperiment {
  std::string name;
  double target = 0.0;
  std::function<Quad(const Quad& c)> measured;
  /// Trivializing function of the cocycle; empty when not applicable.
  std::function<Quad(const Quad& c)> zeta;
};

struct ConvergenceReport {
  std::string experiment;
  std::vector<double> c_grid;
  std::vector<double> errors;           ///< |measured(c) - target|
  std::vector<double> zeta_magnitudes;  ///< |zeta(c)|, empty without zeta
  double fitted_slope = 0.0;            ///< d log(error) / d log(c)
  double zeta_slope = 0.0;              ///< d log|zeta| / d log(c), NaN without zeta
  double target = 0.0;
  double final_measured = 0.0;          ///< measured value at the largest c
};

/// c^2 delta_theta of L(v) L(R(theta) w) against (v x R(theta) w) / 2;
/// zeta = c^2 theta for the left factor L(v) R(theta).
LimitExperiment thomas_experiment(const Vec2<double>& v, const Vec2<double>& w, double theta);

/// c^2 (theta(Lambda Lambda') - theta(Lambda) - theta(Lambda')) for
/// Lambda = L(v) R(theta), Lambda' = L(w) R(theta2); same target and zeta.
LimitExperiment rotation_cocycle_experiment(const Vec2<double>& v, double theta, const Vec2<double>& w,
                                            double theta2);

/// delta zeta with zeta = c a^0 for g = {L(v) R(theta), (c tau, u)} and
/// h = {L(w) R(theta2), (c tau', u')}; target v^2 tau'/2 + v . R(theta) u',
/// zeta = c a^0 of g = c^2 tau.
LimitExperiment mass_experiment(const GroupElement& g, const GroupElement& h);

/// |contract(g h) - compose(contract(g), contract(h))| for the Poincare
/// lifts of two Galilei elements (phases ignored); target 0.
LimitExperiment diagram_experiment(const GroupElement& g, const GroupElement& h);

/// Least-squares slope of log(y) against log(x). Throws std::invalid_argument
/// with fewer than 3 points or mismatched sizes; NaN if any value is not
/// strictly positive.
double fit_loglog_slope(std::span<const double> x, std::span<const double> y);

/// Evaluates the experiment over c_grid (grid points in parallel when
/// requested, bit-identical to serial). Throws std::invalid_argument when the
/// grid has fewer than 3 points or is not strictly increasing and positive.
ConvergenceReport convergence_study(const LimitExperiment& experiment, std::span<const double> c_grid,
                                    Execution exec = Execution::parallel);

/// {1e2, 1e3, 1e4, 1e5, 1e6}
std::vector<double> default_c_grid();

/// "lo:hi:logxN" (lo, lo N, lo N^2, ... up to hi), or a comma-separated list
/// of values. Throws std::invalid_argument.
std::vector<double> parse_c_grid(std::string_view text);

}  // namespace galilei
