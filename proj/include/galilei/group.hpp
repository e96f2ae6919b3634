#pragma once

#include <array>
#include <functional>

#include "galilei/lie_algebra.hpp"
#include "galilei/rational.hpp"

namespace galilei {

/// extended: the central extension G_{km} of the Galilei group (l must be 0,
/// rotation angle reduced to (-pi, pi]). covering: the extension of the
/// universal covering group, angle unreduced, l arbitrary.
enum class GroupKind { extended, covering };

const char* to_string(GroupKind kind);

/// (zeta = exp(i phase), tau, u, v, R(theta)). Phases compose additively.
template <class S>
struct BasicGroupElement {
  S phase{};
  S tau{};
  std::array<S, 2> u{};
  std::array<S, 2> v{};
  S theta{};

  friend bool operator==(const BasicGroupElement&, const BasicGroupElement&) = default;
};

using GroupElement = BasicGroupElement<double>;
/// Exact elements live on the theta = 0 slice, where the law is rational.
using ExactGroupElement = BasicGroupElement<Rational>;

/// Throws std::invalid_argument for the extended kind with l != 0.
void require_consistent(GroupKind kind, const ExtensionParams& params);

/// Angle reduced to (-pi, pi].
double wrap_angle(double angle);

/// Phase increment xi(g, h) of the product beyond phase_g + phase_h:
///   -m (v^2/2 tau' + v . R u') - (k/2) (v x R v')  [+ l theta tau' on the covering].
double cocycle_exponent(GroupKind kind, const ExtensionParams& params, const GroupElement& g, const GroupElement& h);
/// Exact version; throws std::domain_error unless g.theta = 0.
Rational cocycle_exponent(GroupKind kind, const ExtensionParams& params, const ExactGroupElement& g,
                          const ExactGroupElement& h);

GroupElement compose(GroupKind kind, const ExtensionParams& params, const GroupElement& g, const GroupElement& h);
ExactGroupElement compose(GroupKind kind, const ExtensionParams& params, const ExactGroupElement& g,
                          const ExactGroupElement& h);

GroupElement inverse(GroupKind kind, const ExtensionParams& params, const GroupElement& g);
ExactGroupElement inverse(GroupKind kind, const ExtensionParams& params, const ExactGroupElement& g);

/// Component-wise max difference; phase compared mod 2pi, and theta too for
/// the extended kind.
double element_distance(GroupKind kind, const GroupElement& a, const GroupElement& b);
Rational element_distance(const ExactGroupElement& a, const ExactGroupElement& b);

double associativity_defect(GroupKind kind, const ExtensionParams& params, const GroupElement& g,
                            const GroupElement& h, const GroupElement& f);
Rational associativity_defect(GroupKind kind, const ExtensionParams& params, const ExactGroupElement& g,
                              const ExactGroupElement& h, const ExactGroupElement& f);

/// Phase functions on pairs and real functions on elements. Element functions
/// are expected to ignore the phase component.
using PairFunction = std::function<double(const GroupElement&, const GroupElement&)>;
using ElementFunction = std::function<double(const GroupElement&)>;

PairFunction standard_cocycle(GroupKind kind, const ExtensionParams& params);

/// xi'(g, h) = xi(g, h) + zeta(g h) - zeta(g) - zeta(h), with g h formed by the
/// plain (uncentrally extended) product of the given kind.
PairFunction apply_coboundary(GroupKind kind, PairFunction xi, ElementFunction zeta);

/// Product whose phase increment is xi(g, h) instead of the standard cocycle.
GroupElement compose_with(GroupKind kind, const PairFunction& xi, const GroupElement& g, const GroupElement& h);
double associativity_defect_with(GroupKind kind, const PairFunction& xi, const GroupElement& g,
                                 const GroupElement& h, const GroupElement& f);

/// Sign of the translation shift in theorem2_map, fixed by the homomorphism
/// check (tests assert that the opposite sign fails).
inline constexpr int kTheorem2ShiftSign = +1;

/// u_i -> u_i + s (k/2m) eps_ij v_j, other components unchanged. A
/// homomorphism from the (k, m) group onto the (0, m) group. Throws
/// std::domain_error when m = 0.
GroupElement theorem2_map(const ExtensionParams& params, const GroupElement& g);
ExactGroupElement theorem2_map(const ExtensionParams& params, const ExactGroupElement& g);

/// The same shift with an explicit sign.
GroupElement translation_shift(const ExtensionParams& params, const GroupElement& g, int sign);
ExactGroupElement translation_shift(const ExtensionParams& params, const ExactGroupElement& g, int sign);

using ElementMap = std::function<GroupElement(const GroupElement&)>;
using ExactElementMap = std::function<ExactGroupElement(const ExactGroupElement&)>;

/// distance(compose_b(map g, map h), map(compose_a(g, h))).
double homomorphism_defect(GroupKind kind, const ExtensionParams& params_a, const ExtensionParams& params_b,
                           const ElementMap& map, const GroupElement& g, const GroupElement& h);
Rational homomorphism_defect(GroupKind kind, const ExtensionParams& params_a, const ExtensionParams& params_b,
                             const ExactElementMap& map, const ExactGroupElement& g, const ExactGroupElement& h);

}  // namespace galilei
