#include <doctest.h>

#include <random>

#include "galilei/lie_algebra.hpp"
#include "support.hpp"

using namespace galilei;

namespace {

ExtensionParams params(long k, long m, long l) { return {Rational(k), Rational(m), Rational(l)}; }

AlgebraElement basis(std::size_t i) { return AlgebraElement::basis(gal::dimension, i); }

// Jacobi cyclic sum via nested brackets of basis elements; independent of the
// index contraction inside jacobi_defect.
Rational jacobi_oracle(const LieAlgebra& alg) {
  const std::size_t n = alg.dimension();
  Rational worst;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto x = AlgebraElement::basis(n, i), y = AlgebraElement::basis(n, j), z = AlgebraElement::basis(n, k);
        const AlgebraElement sum =
            bracket(alg, bracket(alg, x, y), z) + bracket(alg, bracket(alg, y, z), x) + bracket(alg, bracket(alg, z, x), y);
        for (std::size_t c = 0; c < n; ++c) worst = max_abs(worst, sum[c]);
      }
    }
  }
  return worst;
}

AlgebraElement random_element(std::mt19937_64& rng) {
  AlgebraElement x(gal::dimension);
  for (std::size_t i = 0; i < gal::dimension; ++i) x[i] = testing::random_rational(rng);
  return x;
}

BasisChange random_invertible(std::mt19937_64& rng) {
  for (;;) {
    BasisChange t{RationalMatrix(gal::dimension, gal::dimension)};
    for (std::size_t i = 0; i < gal::dimension; ++i) {
      for (std::size_t j = 0; j < gal::dimension; ++j) {
        if (rng() % 3 == 0 || i == j) t.matrix(i, j) = testing::random_rational(rng, 4, 3);
      }
    }
    try {
      (void)t.matrix.inverse();
      return t;
    } catch (const std::domain_error&) {
    }
  }
}

}  // namespace

TEST_CASE("galilei algebra bracket table") {
  const LieAlgebra g = make_galilei_algebra(params(1, 2, 3));
  CHECK(bracket(g, basis(gal::N1), basis(gal::P1)) == Rational(2) * basis(gal::E));
  CHECK(bracket(g, basis(gal::N2), basis(gal::P2)) == Rational(2) * basis(gal::E));
  CHECK(bracket(g, basis(gal::N1), basis(gal::P2)).is_zero());
  CHECK(bracket(g, basis(gal::H), basis(gal::P1)).is_zero());
  CHECK(bracket(g, basis(gal::N1), basis(gal::N2)) == basis(gal::E));
  CHECK(bracket(g, basis(gal::M), basis(gal::H)) == Rational(3) * basis(gal::E));
  CHECK(bracket(g, basis(gal::M), basis(gal::P1)) == basis(gal::P2));
  CHECK(bracket(g, basis(gal::M), basis(gal::P2)) == Rational(-1) * basis(gal::P1));
  CHECK(bracket(g, basis(gal::M), basis(gal::N1)) == basis(gal::N2));
  CHECK(bracket(g, basis(gal::N1) + basis(gal::N2), basis(gal::H)) == basis(gal::P1) + basis(gal::P2));
  CHECK(central_defect(g, gal::E).is_zero());
}

TEST_CASE("zero parameters decouple the center") {
  const LieAlgebra g = make_galilei_algebra(params(0, 0, 0));
  for (std::size_t i = 0; i < gal::dimension; ++i) {
    for (std::size_t j = 0; j < gal::dimension; ++j) CHECK(g.structure(i, j, gal::E).is_zero());
  }
  CHECK(jacobi_defect(g).is_zero());
}

TEST_CASE("bracket errors and antisymmetry") {
  const LieAlgebra g = make_galilei_algebra(params(1, 2, 3));
  CHECK_THROWS_AS(bracket(g, AlgebraElement(3), basis(gal::H)), std::invalid_argument);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_element(rng), y = random_element(rng);
    CHECK(bracket(g, x, x).is_zero());
    CHECK(bracket(g, x, y) == Rational(-1) * bracket(g, y, x));
  }
}

TEST_CASE("jacobi defect matches the nested-bracket oracle") {
  const LieAlgebra g = make_galilei_algebra(params(1, 2, 3));
  CHECK(jacobi_oracle(g).is_zero());
  CHECK(jacobi_defect(g).is_zero());
  CHECK(antisymmetry_defect(g).is_zero());

  // One-sided flip of c[N1][N2][E]: E is central, so the entry never feeds
  // back into a bracket and the Jacobi sum stays 0; antisymmetry catches it.
  const LieAlgebra flipped_center = g.with_structure_entry(gal::N1, gal::N2, gal::E, Rational(-1));
  CHECK(jacobi_oracle(flipped_center) == Rational(0));
  CHECK(jacobi_defect(flipped_center) == Rational(0));
  CHECK(antisymmetry_defect(flipped_center) == Rational(2));

  // One-sided flip of c[N1][H][P1]: visible to Jacobi (oracle value 4).
  const LieAlgebra flipped_boost = g.with_structure_entry(gal::N1, gal::H, gal::P1, Rational(-1));
  CHECK(jacobi_oracle(flipped_boost) == Rational(4));
  CHECK(jacobi_defect(flipped_boost) == Rational(4));
}

TEST_CASE("jacobi holds for random and boundary parameter families") {
  std::mt19937_64 rng(2024);
  using S = testing::ParamShape;
  const std::vector<S> shapes = {S{}, S{S::zero, S::any, S::any}, S{S::any, S::zero, S::any},
                                 S{S::any, S::any, S::zero}, S{S::zero, S::zero, S::zero}};
  for (const auto& shape : shapes) {
    for (int i = 0; i < 20; ++i) {
      const LieAlgebra g = make_galilei_algebra(testing::random_params(rng, shape));
      CHECK(jacobi_defect(g).is_zero());
      CHECK(antisymmetry_defect(g).is_zero());
    }
  }
}

TEST_CASE("bracket bilinearity") {
  std::mt19937_64 rng(5);
  const LieAlgebra g = make_galilei_algebra(testing::random_params(rng));
  for (int i = 0; i < 50; ++i) {
    const auto x = random_element(rng), y = random_element(rng), z = random_element(rng);
    const Rational a = testing::random_rational(rng), b = testing::random_rational(rng);
    CHECK(bracket(g, a * x + b * y, z) == a * bracket(g, x, z) + b * bracket(g, y, z));
  }
}

TEST_CASE("basis change: identity, scaling, round trip, singular") {
  const LieAlgebra g = make_galilei_algebra(params(0, 3, 0));
  CHECK(algebras_equal(apply_basis_change(g, {RationalMatrix::identity(gal::dimension)}), g));

  BasisChange scale{RationalMatrix::identity(gal::dimension)};
  scale.matrix(gal::N1, gal::N1) = 2;
  scale.matrix(gal::N2, gal::N2) = 2;
  const LieAlgebra scaled = apply_basis_change(g, scale);
  CHECK(scaled.structure(gal::N1, gal::P1, gal::E) == Rational(6));
  CHECK(scaled.structure(gal::N2, gal::P2, gal::E) == Rational(6));
  // [2 N_i, H] = 2 P_i
  CHECK(scaled.structure(gal::N1, gal::H, gal::P1) == Rational(2));

  std::mt19937_64 rng(9);
  for (int i = 0; i < 10; ++i) {
    const LieAlgebra alg = make_galilei_algebra(testing::random_params(rng));
    const BasisChange t = random_invertible(rng);
    const LieAlgebra changed = apply_basis_change(alg, t);
    CHECK(jacobi_defect(changed).is_zero());
    CHECK(algebras_equal(apply_basis_change(changed, {t.matrix.inverse()}), alg));
  }

  BasisChange singular{RationalMatrix::identity(gal::dimension)};
  singular.matrix(gal::M, gal::M) = 0;
  CHECK_THROWS_AS(apply_basis_change(g, singular), std::domain_error);
  CHECK_THROWS_AS(apply_basis_change(g, {RationalMatrix::identity(3)}), std::invalid_argument);
}

TEST_CASE("theorem1_change maps g_kml onto g_0ml") {
  const BasisChange t = theorem1_change(params(1, 2, 0));
  // N1 -> N1 + (1/4) P2, N2 -> N2 - (1/4) P1
  CHECK(t.matrix(gal::N1, gal::P2) == Rational(1, 4));
  CHECK(t.matrix(gal::N2, gal::P1) == Rational(-1, 4));
  CHECK(algebras_equal(apply_basis_change(make_galilei_algebra(params(1, 2, 0)), t),
                       make_galilei_algebra(params(0, 2, 0))));
  CHECK_FALSE(algebras_equal(make_galilei_algebra(params(1, 2, 0)), make_galilei_algebra(params(0, 2, 0))));

  CHECK(theorem1_change(params(0, 5, 7)).matrix == RationalMatrix::identity(gal::dimension));
  CHECK_THROWS_AS(theorem1_change(params(1, 0, 1)), std::domain_error);
}

TEST_CASE("theorem1 sign regression: only s = +1 works") {
  CHECK(kTheorem1ShiftSign == +1);
  std::mt19937_64 rng(17);
  using S = testing::ParamShape;
  for (int i = 0; i < 30; ++i) {
    const ExtensionParams p = testing::random_params(rng, S{S::nonzero, S::nonzero, S::any});
    const ExtensionParams target{Rational(0), p.m, p.l};
    const LieAlgebra g = make_galilei_algebra(p);
    CHECK(algebras_equal(apply_basis_change(g, boost_shift_change(p, +1)), make_galilei_algebra(target)));
    CHECK_FALSE(algebras_equal(apply_basis_change(g, boost_shift_change(p, -1)), make_galilei_algebra(target)));
    // Second application is the identity once k = 0.
    CHECK(theorem1_change(target).matrix == RationalMatrix::identity(gal::dimension));
  }
}
