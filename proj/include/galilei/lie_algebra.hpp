#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galilei/exact_linalg.hpp"
#include "galilei/rational.hpp"

namespace galilei {

/// Central charges (k, m, l) of the extended 2+1 Galilei algebra:
/// k pairs the boosts, m pairs boosts with translations, l pairs the
/// rotation with time translation.
struct ExtensionParams {
  Rational k;
  Rational m;
  Rational l;

  friend bool operator==(const ExtensionParams&, const ExtensionParams&) = default;
};

/// Basis positions of the extended Galilei algebra, E being the central element.
namespace gal {
inline constexpr std::size_t E = 0;
inline constexpr std::size_t H = 1;
inline constexpr std::size_t P1 = 2;
inline constexpr std::size_t P2 = 3;
inline constexpr std::size_t N1 = 4;
inline constexpr std::size_t N2 = 5;
inline constexpr std::size_t M = 6;
inline constexpr std::size_t dimension = 7;
}  // namespace gal

std::vector<std::string> galilei_labels();

/// Levi-Civita symbol in two dimensions, eps(0,1) = +1.
inline int epsilon(std::size_t i, std::size_t j) { return i == j ? 0 : (i < j ? 1 : -1); }

/// Coefficient vector of a Lie algebra element in a fixed basis.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(std::size_t dimension) : coeffs_(dimension) {}
  explicit AlgebraElement(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  static AlgebraElement basis(std::size_t dimension, std::size_t index);

  std::size_t dimension() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement& operator*=(const Rational& s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Structure constants c[i][j][k] with [X_i, X_j] = sum_k c[i][j][k] X_k.
/// No invariant is enforced at construction, so malformed tensors can be
/// built and then diagnosed with antisymmetry_defect / jacobi_defect.
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> labels, std::vector<Rational> structure);
  /// All-zero (abelian) algebra on the given labels.
  explicit LieAlgebra(std::vector<std::string> labels);

  std::size_t dimension() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;
  /// Throws std::out_of_range for an unknown label.
  AlgebraElement element(std::string_view label) const;

  const Rational& structure(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * dimension() + j) * dimension() + k];
  }
  const std::vector<Rational>& structure_tensor() const { return structure_; }

  /// Copy with c[i][j][k] = value and c[j][i][k] = -value.
  LieAlgebra with_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& value) const;
  /// Copy with only c[i][j][k] overwritten (breaks antisymmetry on purpose).
  LieAlgebra with_structure_entry(std::size_t i, std::size_t j, std::size_t k, const Rational& value) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Rational> structure_;
};

/// Change of basis: row a holds the new basis vector X'_a in old coordinates.
struct BasisChange {
  RationalMatrix matrix;
};

LieAlgebra make_galilei_algebra(const ExtensionParams& params);

/// Bilinear extension of the bracket table. Throws std::invalid_argument on
/// dimension mismatch.
AlgebraElement bracket(const LieAlgebra& alg, const AlgebraElement& x, const AlgebraElement& y);

/// max |c[i][j][k] + c[j][i][k]|; zero iff the tensor is antisymmetric.
Rational antisymmetry_defect(const LieAlgebra& alg);

/// max over (i, j, k, n) of the absolute Jacobi sum; zero iff Jacobi holds.
Rational jacobi_defect(const LieAlgebra& alg);

/// max |c[E][j][k]| over the row of a designated central element.
Rational central_defect(const LieAlgebra& alg, std::size_t central_index);

/// Structure constants in the new basis:
///   c'[a][b][n] = sum T[a][i] T[b][j] c[i][j][k] (T^-1)[k][n].
/// Throws std::domain_error when T is singular, std::invalid_argument on a
/// dimension mismatch.
LieAlgebra apply_basis_change(const LieAlgebra& alg, const BasisChange& change);

/// Sign of the boost shift in theorem1_change. Fixed by the structural
/// equality check (tests assert that the opposite sign fails).
inline constexpr int kTheorem1ShiftSign = +1;

/// N_i -> N_i + s (k/2m) eps_ij P_j, every other generator fixed. Maps
/// g_{k,m,l} onto g_{0,m,l}. Throws std::domain_error when m = 0.
BasisChange theorem1_change(const ExtensionParams& params);

/// Same shift with an explicit sign; used to certify kTheorem1ShiftSign.
BasisChange boost_shift_change(const ExtensionParams& params, int sign);

/// Identical labels and identical structure tensors.
bool algebras_equal(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace galilei
