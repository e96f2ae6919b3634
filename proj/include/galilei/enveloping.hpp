#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "galilei/execution.hpp"
#include "galilei/lie_algebra.hpp"
#include "galilei/rational.hpp"

namespace galilei {

/// Generator slots of the enveloping algebra in normal order:
/// N1 < N2 < P1 < P2 < H < M.
namespace slot {
inline constexpr std::size_t N1 = 0;
inline constexpr std::size_t N2 = 1;
inline constexpr std::size_t P1 = 2;
inline constexpr std::size_t P2 = 3;
inline constexpr std::size_t H = 4;
inline constexpr std::size_t M = 5;
inline constexpr std::size_t count = 6;
}  // namespace slot

/// Labels of the slots, in normal order.
const std::array<std::string, slot::count>& slot_labels();

/// N1^a N2^b P1^c P2^d H^e M^f, stored as exponents (a, b, c, d, e, f).
struct Monomial {
  std::array<std::uint16_t, slot::count> exponents{};

  static Monomial generator(std::size_t s);
  unsigned degree() const;
  /// "a,b,c,d,e,f"
  std::string key() const;
  /// Inverse of key(); throws std::invalid_argument.
  static Monomial from_key(const std::string& key);

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Normal-ordered element of the enveloping algebra: a finite sparse sum of
/// monomials with nonzero rational coefficients.
class NOPoly {
 public:
  NOPoly() = default;
  static NOPoly constant(const Rational& c);
  static NOPoly generator(std::size_t s);
  static NOPoly monomial(const Monomial& m, const Rational& c = 1);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;
  /// Highest total degree; 0 for the zero polynomial.
  unsigned degree() const;

  void add_term(const Monomial& m, const Rational& c);

  NOPoly& operator+=(const NOPoly& rhs);
  NOPoly& operator-=(const NOPoly& rhs);
  NOPoly& operator*=(const Rational& s);
  friend NOPoly operator+(NOPoly a, const NOPoly& b) { return a += b; }
  friend NOPoly operator-(NOPoly a, const NOPoly& b) { return a -= b; }
  friend NOPoly operator*(const Rational& s, NOPoly a) { return a *= s; }
  NOPoly operator-() const;
  friend bool operator==(const NOPoly&, const NOPoly&) = default;

  std::string str() const;

 private:
  std::map<Monomial, Rational> terms_;
};

/// Enveloping algebra of an extended Galilei-type Lie algebra whose central
/// element is evaluated to the scalar 1.
///
/// The Lie algebra must carry the labels E, H, P1, P2, N1, N2, M. E must be
/// central; every other bracket may be an arbitrary combination of the
/// basis. Construction throws std::invalid_argument otherwise.
class EnvelopingAlgebra {
 public:
  explicit EnvelopingAlgebra(const LieAlgebra& alg);

  /// [slot a, slot b] as a degree <= 1 polynomial.
  const NOPoly& generator_bracket(std::size_t a, std::size_t b) const { return brackets_[a][b]; }

  /// Image of an algebra element with E -> 1.
  NOPoly embed(const AlgebraElement& x) const;

  /// Normal order of the word g_0 g_1 ... g_{n-1} (slots), by repeatedly
  /// rewriting the leftmost out-of-order pair XY -> YX + [X,Y].
  NOPoly normal_order(const std::vector<std::uint8_t>& word) const;

  /// Basis index in the underlying Lie algebra of a generator slot.
  std::size_t algebra_index(std::size_t s) const { return slot_to_index_.at(s); }

 private:
  std::array<std::size_t, slot::count> slot_to_index_{};
  std::vector<int> index_to_slot_;  // -1 marks the central element
  std::array<std::array<NOPoly, slot::count>, slot::count> brackets_;
};

NOPoly no_mul(const EnvelopingAlgebra& env, const NOPoly& p, const NOPoly& q);
NOPoly no_commutator(const EnvelopingAlgebra& env, const NOPoly& p, const NOPoly& q);
/// Commutes with every generator H, P1, P2, N1, N2, M.
bool is_central(const EnvelopingAlgebra& env, const NOPoly& p);

/// Replaces every generator slot s by images[s] and multiplies out in env.
NOPoly substitute(const EnvelopingAlgebra& env, const NOPoly& p, const std::array<NOPoly, slot::count>& images);

/// Images of the primed generators of a basis change (row a of the matrix is
/// X'_a in old coordinates), expressed in env's generators with E -> 1.
/// The matrix must act on the Galilei basis ordering.
std::array<NOPoly, slot::count> basis_change_images(const EnvelopingAlgebra& env, const BasisChange& change);

/// H - (1/2m)(P1^2 + P2^2). Throws std::domain_error when m = 0.
NOPoly casimir_c1(const ExtensionParams& params);
/// M - (1/m)(N1 P2 - N2 P1) - (k/m) H. Throws std::domain_error when m = 0.
NOPoly casimir_c2(const ExtensionParams& params);
/// P1^2 + P2^2
NOPoly casimir_c1_prime();
/// N1 P2 - N2 P1
NOPoly casimir_c2_prime();

struct CentralizerBasis {
  std::vector<NOPoly> basis;
  unsigned max_degree = 0;
};

/// All monomials of total degree <= max_degree, by degree then exponent order.
std::vector<Monomial> monomials_up_to(unsigned max_degree);

/// Basis of the space of normal-ordered polynomials of degree <= max_degree
/// commuting with every generator, from the exact kernel of p -> ([p, g])_g.
CentralizerBasis centralizer_basis(const EnvelopingAlgebra& env, unsigned max_degree,
                                   Execution exec = Execution::parallel);

/// Whether p lies in the linear span of the given polynomials.
bool span_contains(const std::vector<NOPoly>& span, const NOPoly& p);

}  // namespace galilei
