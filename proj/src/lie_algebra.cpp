#include "galilei/lie_algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace galilei {

std::vector<std::string> galilei_labels() { return {"E", "H", "P1", "P2", "N1", "N2", "M"}; }

AlgebraElement AlgebraElement::basis(std::size_t dimension, std::size_t index) {
  AlgebraElement e(dimension);
  e.coeffs_.at(index) = 1;
  return e;
}

bool AlgebraElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r.is_zero(); });
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  if (rhs.dimension() != dimension()) throw std::invalid_argument("AlgebraElement: dimension mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  if (rhs.dimension() != dimension()) throw std::invalid_argument("AlgebraElement: dimension mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::vector<Rational> structure)
    : labels_(std::move(labels)), structure_(std::move(structure)) {
  const std::size_t n = labels_.size();
  if (structure_.size() != n * n * n) {
    throw std::invalid_argument("LieAlgebra: structure tensor must have dimension^3 entries");
  }
}

LieAlgebra::LieAlgebra(std::vector<std::string> labels)
    : labels_(std::move(labels)), structure_(labels_.size() * labels_.size() * labels_.size()) {}

std::optional<std::size_t> LieAlgebra::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

AlgebraElement LieAlgebra::element(std::string_view label) const {
  const auto idx = index_of(label);
  if (!idx) throw std::out_of_range("LieAlgebra: unknown basis label '" + std::string(label) + "'");
  return AlgebraElement::basis(dimension(), *idx);
}

LieAlgebra LieAlgebra::with_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& value) const {
  LieAlgebra copy = *this;
  const std::size_t n = dimension();
  copy.structure_.at((i * n + j) * n + k) = value;
  copy.structure_.at((j * n + i) * n + k) = -value;
  return copy;
}

LieAlgebra LieAlgebra::with_structure_entry(std::size_t i, std::size_t j, std::size_t k,
                                            const Rational& value) const {
  LieAlgebra copy = *this;
  const std::size_t n = dimension();
  copy.structure_.at((i * n + j) * n + k) = value;
  return copy;
}

LieAlgebra make_galilei_algebra(const ExtensionParams& params) {
  using namespace gal;
  const std::size_t P[2] = {P1, P2};
  const std::size_t N[2] = {N1, N2};

  LieAlgebra alg(galilei_labels());
  for (std::size_t i = 0; i < 2; ++i) {
    alg = alg.with_bracket(N[i], H, P[i], 1);
    alg = alg.with_bracket(N[i], P[i], E, params.m);
    for (std::size_t j = 0; j < 2; ++j) {
      if (i == j) continue;
      alg = alg.with_bracket(M, P[i], P[j], epsilon(i, j));
      alg = alg.with_bracket(M, N[i], N[j], epsilon(i, j));
    }
  }
  alg = alg.with_bracket(N1, N2, E, params.k);
  alg = alg.with_bracket(M, H, E, params.l);
  return alg;
}

AlgebraElement bracket(const LieAlgebra& alg, const AlgebraElement& x, const AlgebraElement& y) {
  const std::size_t n = alg.dimension();
  if (x.dimension() != n || y.dimension() != n) {
    throw std::invalid_argument("bracket: element dimension does not match the algebra");
  }
  AlgebraElement out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = alg.structure(i, j, k);
        if (!c.is_zero()) out[k] += xy * c;
      }
    }
  }
  return out;
}

Rational antisymmetry_defect(const LieAlgebra& alg) {
  const std::size_t n = alg.dimension();
  Rational worst;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        worst = max_abs(worst, alg.structure(i, j, k) + alg.structure(j, i, k));
      }
    }
  }
  return worst;
}

Rational jacobi_defect(const LieAlgebra& alg) {
  const std::size_t n = alg.dimension();
  // nonzero[i * n + j] = {(m, c[i][j][m]) : c[i][j][m] != 0}
  std::vector<std::vector<std::pair<std::size_t, Rational>>> nonzero(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t m = 0; m < n; ++m) {
        if (!alg.structure(i, j, m).is_zero()) nonzero[i * n + j].emplace_back(m, alg.structure(i, j, m));
      }
    }
  }
  // [[X_a, X_b], X_c] accumulated into acc
  std::vector<Rational> acc(n);
  auto add_nested = [&](std::size_t a, std::size_t b, std::size_t c) {
    for (const auto& [m, x] : nonzero[a * n + b]) {
      for (const auto& [out, y] : nonzero[m * n + c]) acc[out] += x * y;
    }
  };
  Rational worst;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::fill(acc.begin(), acc.end(), Rational());
        add_nested(i, j, k);
        add_nested(j, k, i);
        add_nested(k, i, j);
        for (const auto& v : acc) {
          if (!v.is_zero()) worst = max_abs(worst, v);
        }
      }
    }
  }
  return worst;
}

Rational central_defect(const LieAlgebra& alg, std::size_t central_index) {
  const std::size_t n = alg.dimension();
  Rational worst;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) worst = max_abs(worst, alg.structure(central_index, j, k));
  }
  return worst;
}

LieAlgebra apply_basis_change(const LieAlgebra& alg, const BasisChange& change) {
  const std::size_t n = alg.dimension();
  const RationalMatrix& t = change.matrix;
  if (t.rows() != n || t.cols() != n) {
    throw std::invalid_argument("apply_basis_change: matrix size does not match the algebra");
  }
  const RationalMatrix t_inv = t.inverse();

  std::vector<Rational> out(n * n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // [X'_a, X'_b] in old coordinates.
      std::vector<Rational> old(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (t(a, i).is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (t(b, j).is_zero()) continue;
          const Rational w = t(a, i) * t(b, j);
          for (std::size_t k = 0; k < n; ++k) {
            const Rational& c = alg.structure(i, j, k);
            if (!c.is_zero()) old[k] += w * c;
          }
        }
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (old[k].is_zero()) continue;
        for (std::size_t m = 0; m < n; ++m) {
          if (!t_inv(k, m).is_zero()) out[(a * n + b) * n + m] += old[k] * t_inv(k, m);
        }
      }
    }
  }
  return LieAlgebra(alg.labels(), std::move(out));
}

BasisChange boost_shift_change(const ExtensionParams& params, int sign) {
  if (params.m.is_zero()) throw std::domain_error("boost shift: requires m != 0");
  const Rational shift = Rational(sign) * params.k / (Rational(2) * params.m);
  BasisChange change{RationalMatrix::identity(gal::dimension)};
  change.matrix(gal::N1, gal::P2) = shift * epsilon(0, 1);
  change.matrix(gal::N2, gal::P1) = shift * epsilon(1, 0);
  return change;
}

BasisChange theorem1_change(const ExtensionParams& params) {
  if (params.m.is_zero()) {
    throw std::domain_error("theorem1_change: m = 0, isomorphism hypothesis violated");
  }
  return boost_shift_change(params, kTheorem1ShiftSign);
}

bool algebras_equal(const LieAlgebra& a, const LieAlgebra& b) {
  return a.labels() == b.labels() && a.structure_tensor() == b.structure_tensor();
}

}  // namespace galilei
