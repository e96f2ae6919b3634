#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace galilei {

/// Selects between the OpenMP kernel and its serial reference. Both paths
/// produce bit-identical results: every parallel loop writes per-index
/// slots and reductions are order-independent (max) or done serially.
enum class Execution { serial, parallel };

/// Per-sample generator derived from (seed, index) only, so sharded and
/// sequential sweeps draw identical samples.
inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

namespace detail {
inline double nan_as_inf(double x) { return x == x ? x : std::numeric_limits<double>::infinity(); }
}  // namespace detail

/// Evaluates f(i) for i in [0, n) into a vector, in parallel when requested.
/// An exception thrown by f is rethrown after the loop (lowest index wins).
template <class T, class F>
std::vector<T> map_indices(std::size_t n, Execution exec, F&& f) {
  std::vector<T> out(n);
  if (exec == Execution::parallel) {
    std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
      const auto idx = static_cast<std::size_t>(i);
      try {
        out[idx] = f(idx);
      } catch (...) {
        errors[idx] = std::current_exception();
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
  }
  return out;
}

/// max over f(i), i in [0, n); 0 for an empty range. NaN counts as +inf.
template <class F>
double max_over_indices(std::size_t n, Execution exec, F&& f) {
  const auto values = map_indices<double>(n, exec, std::forward<F>(f));
  double result = 0.0;
  for (double v : values) result = std::max(result, detail::nan_as_inf(v));
  return result;
}

}  // namespace galilei
