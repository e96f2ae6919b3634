#pragma once

#include <cstddef>
#include <vector>

#include "galilei/execution.hpp"
#include "galilei/rational.hpp"

namespace galilei {

/// Dense row-major matrix over Rational.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Exact Gauss-Jordan inverse. Throws std::domain_error when singular and
  /// std::invalid_argument when not square.
  RationalMatrix inverse() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Basis of the right kernel {x : A x = 0}.
///
/// Rows are cleared to integers and reduced by fraction-free Gauss-Jordan
/// elimination (row_r <- pivot * row_r - entry * row_p, then divided by its
/// content), so no rational arithmetic happens inside the elimination. Each
/// returned vector has a 1 in its free column and 0 in every other free
/// column, which makes the basis canonical for a given column order.
///
/// The parallel path distributes row updates for each pivot over OpenMP
/// threads; its output is identical to the serial path.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a, Execution exec = Execution::parallel);

/// Rank over Q, using the same elimination.
std::size_t rank(const RationalMatrix& a, Execution exec = Execution::parallel);

}  // namespace galilei
