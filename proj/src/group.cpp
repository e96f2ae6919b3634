#include "galilei/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace galilei {

const char* to_string(GroupKind kind) { return kind == GroupKind::extended ? "extended" : "covering"; }

void require_consistent(GroupKind kind, const ExtensionParams& params) {
  if (kind == GroupKind::extended && !params.l.is_zero()) {
    throw std::invalid_argument("extended Galilei group requires l = 0; use the covering group for l != 0");
  }
}

double wrap_angle(double angle) {
  double r = std::remainder(angle, 2.0 * std::numbers::pi);
  if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
  return r;
}

namespace {

template <class S>
struct Field;

template <>
struct Field<double> {
  static double from(const Rational& r) { return r.to_double(); }
  static std::pair<double, double> cos_sin(double t) { return {std::cos(t), std::sin(t)}; }
  static double reduce(double t) { return wrap_angle(t); }
};

template <>
struct Field<Rational> {
  static Rational from(const Rational& r) { return r; }
  static std::pair<Rational, Rational> cos_sin(const Rational& t) {
    if (!t.is_zero()) throw std::domain_error("exact group law is defined only for theta = 0");
    return {Rational(1), Rational(0)};
  }
  static Rational reduce(const Rational& t) { return t; }
};

template <class S>
using Vec = std::array<S, 2>;

// R(theta) = [[cos, sin], [-sin, cos]]
template <class S>
Vec<S> rotate(const S& theta, const Vec<S>& x) {
  const auto [c, s] = Field<S>::cos_sin(theta);
  return {c * x[0] + s * x[1], c * x[1] - s * x[0]};
}

template <class S>
S dot(const Vec<S>& a, const Vec<S>& b) {
  return a[0] * b[0] + a[1] * b[1];
}

template <class S>
S cross(const Vec<S>& a, const Vec<S>& b) {
  return a[0] * b[1] - a[1] * b[0];
}

template <class S>
S cocycle_impl(GroupKind kind, const ExtensionParams& params, const BasicGroupElement<S>& g,
               const BasicGroupElement<S>& h) {
  require_consistent(kind, params);
  const S k = Field<S>::from(params.k);
  const S m = Field<S>::from(params.m);
  const S half = Field<S>::from(Rational(1, 2));
  const Vec<S> ru = rotate(g.theta, h.u);
  const Vec<S> rv = rotate(g.theta, h.v);
  S xi = S(-1) * m * (half * dot(g.v, g.v) * h.tau + dot(g.v, ru)) - half * k * cross(g.v, rv);
  if (kind == GroupKind::covering) xi += Field<S>::from(params.l) * g.theta * h.tau;
  return xi;
}

// Product without the phase increment.
template <class S>
BasicGroupElement<S> plain_product(GroupKind kind, const BasicGroupElement<S>& g, const BasicGroupElement<S>& h) {
  BasicGroupElement<S> out;
  const Vec<S> ru = rotate(g.theta, h.u);
  const Vec<S> rv = rotate(g.theta, h.v);
  out.phase = g.phase + h.phase;
  out.tau = g.tau + h.tau;
  for (std::size_t i = 0; i < 2; ++i) {
    out.u[i] = ru[i] + g.v[i] * h.tau + g.u[i];
    out.v[i] = rv[i] + g.v[i];
  }
  out.theta = g.theta + h.theta;
  if (kind == GroupKind::extended) out.theta = Field<S>::reduce(out.theta);
  return out;
}

template <class S>
BasicGroupElement<S> compose_impl(GroupKind kind, const ExtensionParams& params, const BasicGroupElement<S>& g,
                                  const BasicGroupElement<S>& h) {
  BasicGroupElement<S> out = plain_product(kind, g, h);
  out.phase += cocycle_impl(kind, params, g, h);
  return out;
}

template <class S>
BasicGroupElement<S> inverse_impl(GroupKind kind, const ExtensionParams& params, const BasicGroupElement<S>& g) {
  BasicGroupElement<S> inv;
  const S minus_theta = S(-1) * g.theta;
  const Vec<S> rv = rotate(minus_theta, g.v);
  const Vec<S> shifted{g.v[0] * g.tau - g.u[0], g.v[1] * g.tau - g.u[1]};
  const Vec<S> ru = rotate(minus_theta, shifted);
  inv.tau = S(-1) * g.tau;
  inv.v = {S(-1) * rv[0], S(-1) * rv[1]};
  inv.u = ru;
  inv.theta = kind == GroupKind::extended ? Field<S>::reduce(minus_theta) : minus_theta;
  inv.phase = S(-1) * g.phase - cocycle_impl(kind, params, g, inv);
  return inv;
}

template <class S>
BasicGroupElement<S> shift_impl(const ExtensionParams& params, const BasicGroupElement<S>& g, int sign) {
  if (params.m.is_zero()) throw std::domain_error("translation shift: requires m != 0");
  const S shift = Field<S>::from(Rational(sign) * params.k / (Rational(2) * params.m));
  BasicGroupElement<S> out = g;
  // (eps v)_i = eps_ij v_j = (v_2, -v_1)
  out.u[0] += shift * g.v[1];
  out.u[1] -= shift * g.v[0];
  return out;
}

}  // namespace

double cocycle_exponent(GroupKind kind, const ExtensionParams& params, const GroupElement& g, const GroupElement& h) {
  return cocycle_impl(kind, params, g, h);
}

Rational cocycle_exponent(GroupKind kind, const ExtensionParams& params, const ExactGroupElement& g,
                          const ExactGroupElement& h) {
  return cocycle_impl(kind, params, g, h);
}

GroupElement compose(GroupKind kind, const ExtensionParams& params, const GroupElement& g, const GroupElement& h) {
  return compose_impl(kind, params, g, h);
}

ExactGroupElement compose(GroupKind kind, const ExtensionParams& params, const ExactGroupElement& g,
                          const ExactGroupElement& h) {
  return compose_impl(kind, params, g, h);
}

GroupElement inverse(GroupKind kind, const ExtensionParams& params, const GroupElement& g) {
  return inverse_impl(kind, params, g);
}

ExactGroupElement inverse(GroupKind kind, const ExtensionParams& params, const ExactGroupElement& g) {
  return inverse_impl(kind, params, g);
}

double element_distance(GroupKind kind, const GroupElement& a, const GroupElement& b) {
  double d = std::abs(wrap_angle(a.phase - b.phase));
  d = std::max(d, std::abs(a.tau - b.tau));
  for (std::size_t i = 0; i < 2; ++i) {
    d = std::max({d, std::abs(a.u[i] - b.u[i]), std::abs(a.v[i] - b.v[i])});
  }
  const double dtheta = a.theta - b.theta;
  d = std::max(d, std::abs(kind == GroupKind::extended ? wrap_angle(dtheta) : dtheta));
  return d;
}

Rational element_distance(const ExactGroupElement& a, const ExactGroupElement& b) {
  Rational d = max_abs(a.phase - b.phase, a.tau - b.tau);
  for (std::size_t i = 0; i < 2; ++i) {
    d = max_abs(d, a.u[i] - b.u[i]);
    d = max_abs(d, a.v[i] - b.v[i]);
  }
  return max_abs(d, a.theta - b.theta);
}

double associativity_defect(GroupKind kind, const ExtensionParams& params, const GroupElement& g,
                            const GroupElement& h, const GroupElement& f) {
  return element_distance(kind, compose(kind, params, compose(kind, params, g, h), f),
                          compose(kind, params, g, compose(kind, params, h, f)));
}

Rational associativity_defect(GroupKind kind, const ExtensionParams& params, const ExactGroupElement& g,
                              const ExactGroupElement& h, const ExactGroupElement& f) {
  return element_distance(compose(kind, params, compose(kind, params, g, h), f),
                          compose(kind, params, g, compose(kind, params, h, f)));
}

PairFunction standard_cocycle(GroupKind kind, const ExtensionParams& params) {
  require_consistent(kind, params);
  return [kind, params](const GroupElement& g, const GroupElement& h) {
    return cocycle_exponent(kind, params, g, h);
  };
}

PairFunction apply_coboundary(GroupKind kind, PairFunction xi, ElementFunction zeta) {
  return [kind, xi = std::move(xi), zeta = std::move(zeta)](const GroupElement& g, const GroupElement& h) {
    return xi(g, h) + zeta(plain_product(kind, g, h)) - zeta(g) - zeta(h);
  };
}

GroupElement compose_with(GroupKind kind, const PairFunction& xi, const GroupElement& g, const GroupElement& h) {
  GroupElement out = plain_product(kind, g, h);
  out.phase += xi(g, h);
  return out;
}

double associativity_defect_with(GroupKind kind, const PairFunction& xi, const GroupElement& g,
                                 const GroupElement& h, const GroupElement& f) {
  return element_distance(kind, compose_with(kind, xi, compose_with(kind, xi, g, h), f),
                          compose_with(kind, xi, g, compose_with(kind, xi, h, f)));
}

GroupElement translation_shift(const ExtensionParams& params, const GroupElement& g, int sign) {
  return shift_impl(params, g, sign);
}

ExactGroupElement translation_shift(const ExtensionParams& params, const ExactGroupElement& g, int sign) {
  return shift_impl(params, g, sign);
}

GroupElement theorem2_map(const ExtensionParams& params, const GroupElement& g) {
  return translation_shift(params, g, kTheorem2ShiftSign);
}

ExactGroupElement theorem2_map(const ExtensionParams& params, const ExactGroupElement& g) {
  return translation_shift(params, g, kTheorem2ShiftSign);
}

double homomorphism_defect(GroupKind kind, const ExtensionParams& params_a, const ExtensionParams& params_b,
                           const ElementMap& map, const GroupElement& g, const GroupElement& h) {
  return element_distance(kind, compose(kind, params_b, map(g), map(h)), map(compose(kind, params_a, g, h)));
}

Rational homomorphism_defect(GroupKind kind, const ExtensionParams& params_a, const ExtensionParams& params_b,
                             const ExactElementMap& map, const ExactGroupElement& g, const ExactGroupElement& h) {
  return element_distance(compose(kind, params_b, map(g), map(h)), map(compose(kind, params_a, g, h)));
}

}  // namespace galilei
