#include "galilei/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace galilei {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("RationalMatrix: shape mismatch in product");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("RationalMatrix: inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix work = *this;
  RationalMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("RationalMatrix: singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rational scale = work(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      const Rational factor = work(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) -= factor * work(col, j);
        inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

namespace {

using IntRow = std::vector<mpz_class>;

struct Echelon {
  std::vector<IntRow> rows;
  // (row index, pivot column) in elimination order.
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

IntRow clear_denominators(const RationalMatrix& a, std::size_t r) {
  mpz_class lcm = 1;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const mpq_class& q = a(r, c).mpq();
    if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  IntRow row(a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const mpq_class& q = a(r, c).mpq();
    if (q != 0) row[c] = q.get_num() * (lcm / q.get_den());
  }
  return row;
}

void divide_content(IntRow& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : row) {
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }
}

// row <- pivot_value * row - row[col] * pivot_row, then content-reduced.
void eliminate(IntRow& row, const IntRow& pivot_row, std::size_t col) {
  if (row[col] == 0) return;
  const mpz_class a = pivot_row[col];
  const mpz_class b = row[col];
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (pivot_row[j] == 0) {
      if (row[j] != 0) row[j] *= a;
    } else {
      row[j] = a * row[j] - b * pivot_row[j];
    }
  }
  divide_content(row);
}

Echelon reduce(const RationalMatrix& a, Execution exec) {
  Echelon e;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    IntRow row = clear_denominators(a, r);
    bool nonzero = false;
    for (const auto& x : row) nonzero = nonzero || x != 0;
    if (!nonzero) continue;
    divide_content(row);
    e.rows.push_back(std::move(row));
  }

  const std::size_t nrows = e.rows.size();
  std::size_t next = 0;  // rows [0, next) hold pivots
  for (std::size_t col = 0; col < a.cols() && next < nrows; ++col) {
    std::size_t p = next;
    while (p < nrows && e.rows[p][col] == 0) ++p;
    if (p == nrows) continue;
    std::swap(e.rows[p], e.rows[next]);
    const IntRow& pivot_row = e.rows[next];

    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
      for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(nrows); ++r) {
        if (static_cast<std::size_t>(r) != next) eliminate(e.rows[static_cast<std::size_t>(r)], pivot_row, col);
      }
    } else {
      for (std::size_t r = 0; r < nrows; ++r) {
        if (r != next) eliminate(e.rows[r], pivot_row, col);
      }
    }
    e.pivots.emplace_back(next, col);
    ++next;
  }
  e.rows.resize(next);
  return e;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a, Execution exec) {
  const Echelon e = reduce(a, exec);
  std::vector<bool> is_pivot(a.cols(), false);
  for (const auto& [row, col] : e.pivots) is_pivot[col] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(a.cols());
    x[free] = 1;
    for (const auto& [row, col] : e.pivots) {
      const IntRow& r = e.rows[row];
      if (r[free] == 0) continue;
      x[col] = Rational(mpq_class(mpz_class(-r[free]), r[col]));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank(const RationalMatrix& a, Execution exec) { return reduce(a, exec).pivots.size(); }

}  // namespace galilei
