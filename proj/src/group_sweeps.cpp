#include "galilei/group_sweeps.hpp"

#include <cmath>
#include <numbers>

namespace galilei {

namespace {

Rational random_fraction(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  const long p = num(rng);
  return Rational(p, den(rng));
}

Rational max_rational_over(std::size_t n, Execution exec, const std::function<Rational(std::size_t)>& f) {
  const auto values = map_indices<Rational>(n, exec, f);
  Rational worst;
  for (const auto& v : values) worst = max_abs(worst, v);
  return worst;
}

ExtensionParams without_k(const ExtensionParams& params) { return {Rational(0), params.m, params.l}; }

}  // namespace

GroupElement random_element(std::mt19937_64& rng, GroupKind kind) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const double pi = std::numbers::pi;
  GroupElement g;
  g.phase = pi * unit(rng);
  g.tau = unit(rng);
  g.u = {unit(rng), unit(rng)};
  g.v = {unit(rng), unit(rng)};
  g.theta = (kind == GroupKind::extended ? pi : 3.0 * pi) * unit(rng);
  return g;
}

ExactGroupElement random_exact_element(std::mt19937_64& rng) {
  ExactGroupElement g;
  g.phase = random_fraction(rng);
  g.tau = random_fraction(rng);
  g.u = {random_fraction(rng), random_fraction(rng)};
  g.v = {random_fraction(rng), random_fraction(rng)};
  return g;
}

double max_associativity_defect(GroupKind kind, const ExtensionParams& params, std::size_t samples,
                                std::uint64_t seed, Execution exec) {
  require_consistent(kind, params);
  return max_over_indices(samples, exec, [&](std::size_t i) {
    auto rng = sample_rng(seed, i);
    const GroupElement g = random_element(rng, kind);
    const GroupElement h = random_element(rng, kind);
    const GroupElement f = random_element(rng, kind);
    return associativity_defect(kind, params, g, h, f);
  });
}

Rational max_exact_associativity_defect(GroupKind kind, const ExtensionParams& params, std::size_t samples,
                                        std::uint64_t seed, Execution exec) {
  require_consistent(kind, params);
  return max_rational_over(samples, exec, [&](std::size_t i) {
    auto rng = sample_rng(seed, i);
    const ExactGroupElement g = random_exact_element(rng);
    const ExactGroupElement h = random_exact_element(rng);
    const ExactGroupElement f = random_exact_element(rng);
    return associativity_defect(kind, params, g, h, f);
  });
}

double max_inverse_defect(GroupKind kind, const ExtensionParams& params, std::size_t samples, std::uint64_t seed,
                          Execution exec) {
  require_consistent(kind, params);
  const GroupElement identity{};
  return max_over_indices(samples, exec, [&](std::size_t i) {
    auto rng = sample_rng(seed, i);
    const GroupElement g = random_element(rng, kind);
    const GroupElement inv = inverse(kind, params, g);
    return std::max(element_distance(kind, compose(kind, params, g, inv), identity),
                    element_distance(kind, compose(kind, params, inv, g), identity));
  });
}

double max_shift_homomorphism_defect(GroupKind kind, const ExtensionParams& params, int sign,
                                     std::size_t samples, std::uint64_t seed, Execution exec) {
  require_consistent(kind, params);
  const ElementMap map = [&params, sign](const GroupElement& g) { return translation_shift(params, g, sign); };
  const ExtensionParams target = without_k(params);
  return max_over_indices(samples, exec, [&](std::size_t i) {
    auto rng = sample_rng(seed, i);
    const GroupElement g = random_element(rng, kind);
    const GroupElement h = random_element(rng, kind);
    return homomorphism_defect(kind, params, target, map, g, h);
  });
}

Rational max_exact_shift_homomorphism_defect(GroupKind kind, const ExtensionParams& params, int sign,
                                             std::size_t samples, std::uint64_t seed, Execution exec) {
  require_consistent(kind, params);
  const ExactElementMap map = [&params, sign](const ExactGroupElement& g) {
    return translation_shift(params, g, sign);
  };
  const ExtensionParams target = without_k(params);
  return max_rational_over(samples, exec, [&](std::size_t i) {
    auto rng = sample_rng(seed, i);
    const ExactGroupElement g = random_exact_element(rng);
    const ExactGroupElement h = random_exact_element(rng);
    return homomorphism_defect(kind, params, target, map, g, h);
  });
}

double max_coboundary_associativity_defect(GroupKind kind, const ExtensionParams& params,
                                           const ElementFunction& zeta, std::size_t samples, std::uint64_t seed,
                                           Execution exec) {
  const PairFunction xi = apply_coboundary(kind, standard_cocycle(kind, params), zeta);
  return max_over_indices(samples, exec, [&](std::size_t i) {
    auto rng = sample_rng(seed, i);
    const GroupElement g = random_element(rng, kind);
    const GroupElement h = random_element(rng, kind);
    const GroupElement f = random_element(rng, kind);
    return associativity_defect_with(kind, xi, g, h, f);
  });
}

double max_covering_consistency_defect(const ExtensionParams& params, std::size_t samples, std::uint64_t seed,
                                       Execution exec) {
  require_consistent(GroupKind::extended, params);
  return max_over_indices(samples, exec, [&](std::size_t i) {
    auto rng = sample_rng(seed, i);
    const GroupElement g = random_element(rng, GroupKind::covering);
    const GroupElement h = random_element(rng, GroupKind::covering);
    GroupElement covering = compose(GroupKind::covering, params, g, h);
    covering.theta = wrap_angle(covering.theta);
    return element_distance(GroupKind::extended, covering, compose(GroupKind::extended, params, g, h));
  });
}

double max_normalization_defect(GroupKind kind, const ExtensionParams& params, std::size_t samples,
                                std::uint64_t seed, Execution exec) {
  require_consistent(kind, params);
  const GroupElement identity{};
  return max_over_indices(samples, exec, [&](std::size_t i) {
    auto rng = sample_rng(seed, i);
    const GroupElement g = random_element(rng, kind);
    return std::max(std::abs(cocycle_exponent(kind, params, g, identity)),
                    std::abs(cocycle_exponent(kind, params, identity, g)));
  });
}

}  // namespace galilei
