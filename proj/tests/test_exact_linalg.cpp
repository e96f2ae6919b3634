#include <doctest.h>

#include <random>

#include "galilei/exact_linalg.hpp"
#include "support.hpp"

using namespace galilei;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int zero_percent) {
  RationalMatrix a(rows, cols);
  std::uniform_int_distribution<int> percent(0, 99);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (percent(rng) >= zero_percent) a(i, j) = testing::random_rational(rng, 6, 4);
    }
  }
  return a;
}

bool in_kernel(const RationalMatrix& a, const std::vector<Rational>& x) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational s;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    if (!s.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("inverse round trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    RationalMatrix a = random_matrix(rng, 5, 5, 20);
    for (std::size_t i = 0; i < 5; ++i) a(i, i) += Rational(10);  // diagonally dominant
    CHECK(a * a.inverse() == RationalMatrix::identity(5));
    CHECK(a.inverse() * a == RationalMatrix::identity(5));
  }
}

TEST_CASE("singular and non-square inverse") {
  RationalMatrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 2;
  a(1, 1) = 4;
  CHECK_THROWS_AS(a.inverse(), std::domain_error);
  CHECK_THROWS_AS(RationalMatrix(2, 3).inverse(), std::invalid_argument);
}

TEST_CASE("nullspace of a known matrix") {
  // x + 2y + 3z = 0 and 2x + 4y + 6z = 0: two-dimensional kernel.
  RationalMatrix a(2, 3);
  a(0, 0) = 1, a(0, 1) = 2, a(0, 2) = 3;
  a(1, 0) = 2, a(1, 1) = 4, a(1, 2) = 6;
  const auto basis = nullspace(a);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == std::vector<Rational>{-2, 1, 0});
  CHECK(basis[1] == std::vector<Rational>{-3, 0, 1});
  CHECK(rank(a) == 1);
}

TEST_CASE("nullspace property: rank-nullity, kernel membership, serial == parallel") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 1 + rng() % 12;
    const std::size_t cols = 1 + rng() % 12;
    RationalMatrix a = random_matrix(rng, rows, cols, 60);
    if (rows > 2) {
      for (std::size_t j = 0; j < cols; ++j) a(rows - 1, j) = a(0, j) * Rational(3, 2) - a(1, j);
    }
    const auto serial = nullspace(a, Execution::serial);
    const auto parallel = nullspace(a, Execution::parallel);
    CHECK(serial == parallel);
    CHECK(serial.size() + rank(a) == cols);
    for (const auto& x : serial) CHECK(in_kernel(a, x));
  }
}

TEST_CASE("empty and zero matrices") {
  CHECK(nullspace(RationalMatrix(3, 4)).size() == 4);
  CHECK(rank(RationalMatrix(0, 0)) == 0);
}
