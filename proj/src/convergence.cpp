#include "galilei/convergence.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace galilei {

namespace {

Vec2<Quad> to_quad(const Vec2<double>& x) { return {Quad(x[0]), Quad(x[1])}; }

BasicPoincareElement<Quad> lift(const GroupElement& g, const Quad& c) {
  return make_poincare(Quad(g.tau), to_quad(g.u), to_quad(g.v), Quad(g.theta), c);
}

double parse_double(std::string_view s) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("c-grid: malformed number '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

LimitExperiment thomas_experiment(const Vec2<double>& v, const Vec2<double>& w, double theta) {
  const Vec2<double> rw = rotate2(theta, w);
  LimitExperiment e;
  e.name = "thomas";
  e.target = thomas_target(v, rw);
  e.measured = [v, rw](const Quad& c) { return c * c * compose_boosts(to_quad(v), to_quad(rw), c).delta_theta; };
  e.zeta = [theta](const Quad& c) { return c * c * Quad(theta); };
  return e;
}

LimitExperiment rotation_cocycle_experiment(const Vec2<double>& v, double theta, const Vec2<double>& w,
                                            double theta2) {
  LimitExperiment e;
  e.name = "rotation-cocycle";
  e.target = thomas_target(v, rotate2(theta, w));
  e.measured = [=](const Quad& c) {
    const Mat3<Quad> lam1 = boost_matrix(to_quad(v), c) * rotation_matrix(Quad(theta));
    const Mat3<Quad> lam2 = boost_matrix(to_quad(w), c) * rotation_matrix(Quad(theta2));
    return rotation_cocycle_exponent(lam1, lam2, c);
  };
  e.zeta = [theta](const Quad& c) { return c * c * Quad(theta); };
  return e;
}

LimitExperiment mass_experiment(const GroupElement& g, const GroupElement& h) {
  const Vec2<double> ru = rotate2(g.theta, h.u);
  LimitExperiment e;
  e.name = "mass";
  e.target = 0.5 * (g.v[0] * g.v[0] + g.v[1] * g.v[1]) * h.tau + g.v[0] * ru[0] + g.v[1] * ru[1];
  e.measured = [g, h](const Quad& c) { return mass_cocycle_exponent(lift(g, c), lift(h, c)); };
  e.zeta = [g](const Quad& c) { return c * lift(g, c).a[0]; };
  return e;
}

LimitExperiment diagram_experiment(const GroupElement& g, const GroupElement& h) {
  LimitExperiment e;
  e.name = "diagram";
  e.target = 0.0;
  e.measured = [g, h](const Quad& c) {
    const auto pg = lift(g, c);
    const auto ph = lift(h, c);
    const ExtensionParams none{};
    const GroupElement direct = contract_element(compose(pg, ph));
    const GroupElement via_galilei =
        galilei::compose(GroupKind::covering, none, contract_element(pg), contract_element(ph));
    return Quad(element_distance(GroupKind::extended, direct, via_galilei));
  };
  return e;
}

double fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit: size mismatch");
  if (x.size() < 3) throw std::invalid_argument("fit: fewer than 3 grid points, slope fit impossible");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("fit: grid points coincide");
  return (n * sxy - sx * sy) / denom;
}

ConvergenceReport convergence_study(const LimitExperiment& experiment, std::span<const double> c_grid,
                                    Execution exec) {
  if (c_grid.size() < 3) throw std::invalid_argument("convergence_study: fewer than 3 grid points, fit impossible");
  for (std::size_t i = 0; i < c_grid.size(); ++i) {
    if (!(c_grid[i] > 0.0) || (i > 0 && !(c_grid[i] > c_grid[i - 1]))) {
      throw std::invalid_argument("convergence_study: c grid must be positive and strictly increasing");
    }
  }

  struct Point {
    double measured = 0.0;
    double error = 0.0;
    double zeta = 0.0;
  };
  const Quad target(experiment.target);
  const auto points = map_indices<Point>(c_grid.size(), exec, [&](std::size_t i) {
    const Quad c(c_grid[i]);
    const Quad m = experiment.measured(c);
    Point p;
    p.measured = static_cast<double>(m);
    p.error = static_cast<double>(abs(m - target));
    if (experiment.zeta) p.zeta = static_cast<double>(abs(experiment.zeta(c)));
    return p;
  });

  ConvergenceReport report;
  report.experiment = experiment.name;
  report.target = experiment.target;
  report.c_grid.assign(c_grid.begin(), c_grid.end());
  for (const auto& p : points) {
    report.errors.push_back(p.error);
    if (experiment.zeta) report.zeta_magnitudes.push_back(p.zeta);
  }
  report.final_measured = points.back().measured;
  report.fitted_slope = fit_loglog_slope(report.c_grid, report.errors);
  report.zeta_slope = experiment.zeta ? fit_loglog_slope(report.c_grid, report.zeta_magnitudes)
                                      : std::numeric_limits<double>::quiet_NaN();
  return report;
}

std::vector<double> default_c_grid() { return {1e2, 1e3, 1e4, 1e5, 1e6}; }

std::vector<double> parse_c_grid(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("c-grid: empty");
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto comma = text.find(',', pos);
      const auto part = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      out.push_back(parse_double(part));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return out;
  }

  const auto second = text.find(':', colon + 1);
  if (second == std::string_view::npos) throw std::invalid_argument("c-grid: expected lo:hi:logxN");
  const double lo = parse_double(text.substr(0, colon));
  const double hi = parse_double(text.substr(colon + 1, second - colon - 1));
  const auto step = text.substr(second + 1);
  if (step.substr(0, 4) != "logx") throw std::invalid_argument("c-grid: step must be logxN");
  const double factor = parse_double(step.substr(4));
  if (!(lo > 0.0) || !(hi >= lo) || !(factor > 1.0)) {
    throw std::invalid_argument("c-grid: need 0 < lo <= hi and factor > 1");
  }
  std::vector<double> out;
  // Multiply by integer powers so 1e2:1e6:logx10 lands on exact decades.
  for (int i = 0;; ++i) {
    const double value = lo * std::pow(factor, i);
    if (value > hi * (1.0 + 1e-12)) break;
    out.push_back(value);
    if (out.size() > 1000) throw std::invalid_argument("c-grid: too many points");
  }
  return out;
}

}  // namespace galilei
