#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "galilei/execution.hpp"
#include "galilei/group.hpp"

namespace galilei {

/// tau, u, v uniform in [-1, 1]; phase in [-pi, pi]; theta in [-pi, pi] for
/// the extended kind and [-3pi, 3pi] on the covering.
GroupElement random_element(std::mt19937_64& rng, GroupKind kind);

/// theta = 0, every other component p/q with |p| <= 9, 1 <= q <= 9.
ExactGroupElement random_exact_element(std::mt19937_64& rng);

/// Random triple-based sweeps. Sample i draws from sample_rng(seed, i), so the
/// serial and parallel paths evaluate identical samples and return
/// bit-identical maxima.
double max_associativity_defect(GroupKind kind, const ExtensionParams& params, std::size_t samples,
                                std::uint64_t seed, Execution exec = Execution::parallel);
Rational max_exact_associativity_defect(GroupKind kind, const ExtensionParams& params, std::size_t samples,
                                        std::uint64_t seed, Execution exec = Execution::parallel);

/// max distance of g g^-1 and g^-1 g from the identity.
double max_inverse_defect(GroupKind kind, const ExtensionParams& params, std::size_t samples, std::uint64_t seed,
                          Execution exec = Execution::parallel);

/// Homomorphism defect of translation_shift(sign) from (k, m, l) to (0, m, l).
double max_shift_homomorphism_defect(GroupKind kind, const ExtensionParams& params, int sign,
                                     std::size_t samples, std::uint64_t seed, Execution exec = Execution::parallel);
Rational max_exact_shift_homomorphism_defect(GroupKind kind, const ExtensionParams& params, int sign,
                                             std::size_t samples, std::uint64_t seed,
                                             Execution exec = Execution::parallel);

/// Associativity of the law whose cocycle is modified by the coboundary of zeta.
double max_coboundary_associativity_defect(GroupKind kind, const ExtensionParams& params,
                                           const ElementFunction& zeta, std::size_t samples, std::uint64_t seed,
                                           Execution exec = Execution::parallel);

/// With l = 0: distance between the covering product (angle reduced
/// afterwards) and the extended product.
double max_covering_consistency_defect(const ExtensionParams& params, std::size_t samples, std::uint64_t seed,
                                       Execution exec = Execution::parallel);

/// max |xi(g, 1)| and |xi(1, g)|.
double max_normalization_defect(GroupKind kind, const ExtensionParams& params, std::size_t samples,
                                std::uint64_t seed, Execution exec = Execution::parallel);

}  // namespace galilei
