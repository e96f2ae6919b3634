#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "galilei/group.hpp"
#include "galilei/group_sweeps.hpp"
#include "galilei/io.hpp"
#include "support.hpp"

using namespace galilei;

namespace {

constexpr double kTol = 1e-12;
constexpr double kPi = std::numbers::pi;

ExtensionParams params(long k, long m, long l) { return {Rational(k), Rational(m), Rational(l)}; }

ExtensionParams with_l(ExtensionParams p, GroupKind kind) {
  if (kind == GroupKind::extended) p.l = 0;
  return p;
}

constexpr GroupKind kKinds[] = {GroupKind::extended, GroupKind::covering};

// The cocycle with v . u' in place of v . R u'; not a cocycle for theta != 0.
PairFunction unrotated_cocycle(const ExtensionParams& p) {
  const double m = p.m.to_double(), k = p.k.to_double();
  return [m, k](const GroupElement& g, const GroupElement& h) {
    const double c = std::cos(g.theta), s = std::sin(g.theta);
    const double rv0 = c * h.v[0] + s * h.v[1], rv1 = -s * h.v[0] + c * h.v[1];
    const double v2 = g.v[0] * g.v[0] + g.v[1] * g.v[1];
    return -m * (v2 / 2 * h.tau + g.v[0] * h.u[0] + g.v[1] * h.u[1]) - k / 2 * (g.v[0] * rv1 - g.v[1] * rv0);
  };
}

}  // namespace

TEST_CASE("identity laws") {
  std::mt19937_64 rng(1);
  for (GroupKind kind : kKinds) {
    const ExtensionParams p = with_l(params(2, 3, 5), kind);
    for (int i = 0; i < 50; ++i) {
      const GroupElement g = random_element(rng, kind);
      CHECK(element_distance(kind, compose(kind, p, GroupElement{}, g), g) < kTol);
      CHECK(element_distance(kind, compose(kind, p, g, GroupElement{}), g) < kTol);
      CHECK(cocycle_exponent(kind, p, g, GroupElement{}) == 0.0);
      CHECK(cocycle_exponent(kind, p, GroupElement{}, g) == 0.0);
    }
  }
}

TEST_CASE("vanishing parameters give the plain product") {
  std::mt19937_64 rng(2);
  for (GroupKind kind : kKinds) {
    for (int i = 0; i < 50; ++i) {
      const GroupElement g = random_element(rng, kind), h = random_element(rng, kind);
      CHECK(cocycle_exponent(kind, params(0, 0, 0), g, h) == 0.0);
      CHECK(std::abs(wrap_angle(compose(kind, params(0, 0, 0), g, h).phase - g.phase - h.phase)) < kTol);
    }
  }
}

TEST_CASE("mass term example") {
  GroupElement g, h;
  g.v = {1, 0};
  h.tau = 1;
  const GroupElement gh = compose(GroupKind::extended, params(0, 1, 0), g, h);
  CHECK(gh.phase == doctest::Approx(-0.5));
  CHECK(gh.u[0] == doctest::Approx(1.0));
  CHECK(gh.u[1] == doctest::Approx(0.0));
  CHECK(gh.tau == doctest::Approx(1.0));
  CHECK(gh.v[0] == doctest::Approx(1.0));
}

TEST_CASE("k and l terms in isolation") {
  GroupElement g, h;
  g.v = {1, 0};
  h.v = {0, 1};
  CHECK(cocycle_exponent(GroupKind::extended, params(2, 0, 0), g, h) == doctest::Approx(-1.0));

  GroupElement r, t;
  r.theta = kPi;
  t.tau = 2;
  CHECK(cocycle_exponent(GroupKind::covering, params(0, 0, 3), r, t) == doctest::Approx(6 * kPi));
}

TEST_CASE("rotation convention of the boost action") {
  // R(pi/2) = [[0, 1], [-1, 0]] sends (1, 0) to (0, -1).
  GroupElement g, h;
  g.theta = kPi / 2;
  h.v = {1, 0};
  const GroupElement gh = compose(GroupKind::extended, params(0, 0, 0), g, h);
  CHECK(gh.v[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(gh.v[1] == doctest::Approx(-1.0));
}

TEST_CASE("extended kind rejects l != 0 and wraps theta") {
  CHECK_THROWS_AS(require_consistent(GroupKind::extended, params(0, 1, 1)), std::invalid_argument);
  CHECK_NOTHROW(require_consistent(GroupKind::covering, params(0, 1, 1)));
  CHECK_THROWS_AS(compose(GroupKind::extended, params(0, 1, 1), GroupElement{}, GroupElement{}), std::invalid_argument);
  GroupElement a, b;
  a.theta = 3;
  b.theta = 3;
  CHECK(compose(GroupKind::extended, params(0, 0, 0), a, b).theta == doctest::Approx(6 - 2 * kPi));
  CHECK(compose(GroupKind::covering, params(0, 0, 0), a, b).theta == doctest::Approx(6.0));
  CHECK(wrap_angle(kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(-kPi) == doctest::Approx(kPi));
}

TEST_CASE("inverse") {
  for (GroupKind kind : kKinds) {
    const ExtensionParams p = with_l(params(1, 2, 3), kind);
    CHECK(element_distance(kind, inverse(kind, p, GroupElement{}), GroupElement{}) == 0.0);
    GroupElement rot;
    rot.theta = 0.7;
    GroupElement expected;
    expected.theta = -0.7;
    CHECK(element_distance(kind, inverse(kind, p, rot), expected) < kTol);
    CHECK(max_inverse_defect(kind, p, 1000, 7) < kTol);
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const ExactGroupElement g = random_exact_element(rng);
    const ExtensionParams p = testing::random_params(rng, {testing::ParamShape::any, testing::ParamShape::any,
                                                           testing::ParamShape::zero});
    CHECK(compose(GroupKind::extended, p, g, inverse(GroupKind::extended, p, g)) == ExactGroupElement{});
  }
}

TEST_CASE("associativity over random parameters, float and exact") {
  std::mt19937_64 rng(4);
  for (GroupKind kind : kKinds) {
    for (int i = 0; i < 5; ++i) {
      const ExtensionParams p = with_l(testing::random_params(rng), kind);
      CHECK(max_associativity_defect(kind, p, 1000, 100 + i) < kTol);
      CHECK(max_exact_associativity_defect(kind, p, 100, 200 + i).is_zero());
    }
  }
}

TEST_CASE("exact mode rejects rotated elements") {
  ExactGroupElement g;
  g.theta = 1;
  CHECK_THROWS_AS(cocycle_exponent(GroupKind::covering, params(1, 1, 1), g, ExactGroupElement{}), std::domain_error);
}

TEST_CASE("dropping R from v . R u' breaks associativity") {
  std::mt19937_64 rng(5);
  const ExtensionParams p = params(0, 1, 0);
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const GroupElement g = random_element(rng, GroupKind::extended), h = random_element(rng, GroupKind::extended),
                       f = random_element(rng, GroupKind::extended);
    worst = std::max(worst, associativity_defect_with(GroupKind::extended, unrotated_cocycle(p), g, h, f));
    CHECK(associativity_defect_with(GroupKind::extended, standard_cocycle(GroupKind::extended, p), g, h, f) < kTol);
  }
  CHECK(worst > 0.1);
}

TEST_CASE("coboundaries") {
  std::mt19937_64 rng(6);
  const ExtensionParams p = params(1, 2, 0);
  const auto xi = standard_cocycle(GroupKind::extended, p);
  const auto unchanged = apply_coboundary(GroupKind::extended, xi, [](const GroupElement&) { return 0.0; });
  const auto tau_shift = apply_coboundary(GroupKind::extended, xi, [](const GroupElement& g) { return 3.5 * g.tau; });
  for (int i = 0; i < 50; ++i) {
    const GroupElement g = random_element(rng, GroupKind::extended), h = random_element(rng, GroupKind::extended);
    CHECK(unchanged(g, h) == xi(g, h));
    CHECK(std::abs(tau_shift(g, h) - xi(g, h)) < kTol);
  }

  const ElementFunction zetas[] = {
      [](const GroupElement& g) { return g.u[0] * g.v[1] + std::sin(g.theta) * g.tau; },
      [](const GroupElement& g) { return g.v[0] * g.v[0] - 2 * g.u[1]; },
  };
  for (const auto& zeta : zetas) {
    for (GroupKind kind : kKinds) {
      CHECK(max_coboundary_associativity_defect(kind, params(0, 0, 0), zeta, 1000, 8) < kTol);
      CHECK(max_coboundary_associativity_defect(kind, with_l(params(1, 2, 3), kind), zeta, 1000, 9) < kTol);
    }
  }
}

TEST_CASE("covering and extended agree when l = 0") {
  CHECK(max_covering_consistency_defect(params(3, -2, 0), 1000, 10) < kTol);
}

TEST_CASE("normalization") {
  for (GroupKind kind : kKinds) CHECK(max_normalization_defect(kind, with_l(params(2, 5, 7), kind), 1000, 11) == 0.0);
}

TEST_CASE("theorem2_map: trivial cases") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 20; ++i) {
    const GroupElement g = random_element(rng, GroupKind::extended);
    CHECK(theorem2_map(params(0, 3, 0), g) == g);
    GroupElement still = g;
    still.v = {0, 0};
    CHECK(theorem2_map(params(4, 3, 0), still) == still);
  }
  CHECK_THROWS_AS(theorem2_map(params(1, 0, 0), GroupElement{}), std::domain_error);
  GroupElement g;
  g.v = {2, 0};
  // u -> u + (k/2m)(v2, -v1)
  CHECK(theorem2_map(params(1, 2, 0), g).u[1] == doctest::Approx(-0.5));
}

TEST_CASE("theorem2_map is a homomorphism; the opposite sign is not") {
  CHECK(kTheorem2ShiftSign == +1);
  const ExtensionParams p = params(1, 2, 0);
  const ExtensionParams target = params(0, 2, 0);
  const ElementMap map = [&p](const GroupElement& g) { return theorem2_map(p, g); };
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const GroupElement g = random_element(rng, GroupKind::extended), h = random_element(rng, GroupKind::extended);
    CHECK(homomorphism_defect(GroupKind::extended, p, target, map, g, h) < kTol);
  }
  CHECK(max_shift_homomorphism_defect(GroupKind::extended, p, +1, 1000, 14) < kTol);
  CHECK(max_shift_homomorphism_defect(GroupKind::extended, p, -1, 1000, 14) > 0.1);
  CHECK(max_exact_shift_homomorphism_defect(GroupKind::extended, p, +1, 200, 15).is_zero());
  CHECK_FALSE(max_exact_shift_homomorphism_defect(GroupKind::extended, p, -1, 200, 15).is_zero());

  // The wrong sign leaves exactly k (v x v') in the phase at theta = 0.
  ExactGroupElement g, h;
  g.v = {1, 0};
  h.v = {0, 1};
  const ExactElementMap wrong = [&p](const ExactGroupElement& x) { return translation_shift(p, x, -1); };
  CHECK(homomorphism_defect(GroupKind::extended, p, target, wrong, g, h) == Rational(1));
}

TEST_CASE("theorem2 on random parameters and on the covering") {
  std::mt19937_64 rng(16);
  using S = testing::ParamShape;
  for (int i = 0; i < 10; ++i) {
    ExtensionParams p = testing::random_params(rng, S{S::any, S::nonzero, S::any});
    CHECK(max_shift_homomorphism_defect(GroupKind::covering, p, +1, 500, 17 + i) < kTol);
    CHECK(max_exact_shift_homomorphism_defect(GroupKind::covering, p, +1, 50, 17 + i).is_zero());
    p.l = 0;
    CHECK(max_shift_homomorphism_defect(GroupKind::extended, p, +1, 500, 17 + i) < kTol);
  }
}

TEST_CASE("sweeps: serial and parallel are bit-identical") {
  const ExtensionParams p = params(1, 2, 3);
  CHECK(max_associativity_defect(GroupKind::covering, p, 500, 21, Execution::serial) ==
        max_associativity_defect(GroupKind::covering, p, 500, 21, Execution::parallel));
  CHECK(max_exact_associativity_defect(GroupKind::covering, p, 50, 21, Execution::serial) ==
        max_exact_associativity_defect(GroupKind::covering, p, 50, 21, Execution::parallel));
  CHECK(max_shift_homomorphism_defect(GroupKind::covering, p, -1, 500, 22, Execution::serial) ==
        max_shift_homomorphism_defect(GroupKind::covering, p, -1, 500, 22, Execution::parallel));
}

TEST_CASE("element json round trip and defaults") {
  std::mt19937_64 rng(23);
  const GroupElement g = random_element(rng, GroupKind::covering);
  CHECK(element_from_json(element_to_json(g)) == g);
  CHECK(element_from_json(nlohmann::json::object()) == GroupElement{});
  CHECK_THROWS_AS(element_from_json(nlohmann::json{{"u", {1}}}), std::invalid_argument);
  CHECK_THROWS_AS(element_from_json(nlohmann::json{{"tau", "x"}}), std::invalid_argument);
}
