#pragma once

// 2+1 Poincare machinery: boosts, boost/rotation decomposition, Wigner
// rotation of composed boosts, the two trivializing functions and the
// c -> infinity contraction onto the Galilei group.
//
// Everything is templated on the real scalar. Metric eta = diag(+1, -1, -1),
// index 0 is time. Spatial rotations use the same R(theta) as the group
// module: [[cos, sin], [-sin, cos]].

#include <array>
#include <cmath>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/float128.hpp>

#include "galilei/group.hpp"

namespace galilei {

using Quad = boost::multiprecision::float128;

template <class T>
using Vec2 = std::array<T, 2>;
template <class T>
using Vec3 = std::array<T, 3>;
template <class T>
using Mat3 = std::array<std::array<T, 3>, 3>;
template <class T>
using Mat4 = std::array<std::array<T, 4>, 4>;

/// {Lambda, a}: Lorentz part Lambda^mu_nu and translation a^mu, with the
/// speed of light the element was built for.
template <class T>
struct BasicPoincareElement {
  Mat3<T> lambda{};
  Vec3<T> a{};
  T c = T(1);
};

/// Lambda = L(v) R(theta).
template <class T>
struct BasicBoostDecomposition {
  Vec2<T> v{};
  T theta{};
};

/// L(v) L(w) = L(v_out) R(delta_theta).
template <class T>
struct BasicBoostComposition {
  Vec2<T> v_out{};
  T delta_theta{};
};

using PoincareElement = BasicPoincareElement<double>;
using BoostDecomposition = BasicBoostDecomposition<double>;
using BoostComposition = BasicBoostComposition<double>;

template <class T>
Mat3<T> identity3() {
  Mat3<T> m{};
  for (std::size_t i = 0; i < 3; ++i) m[i][i] = T(1);
  return m;
}

template <class T>
Mat3<T> operator*(const Mat3<T>& a, const Mat3<T>& b) {
  Mat3<T> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      T s = T(0);
      for (std::size_t k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      out[i][j] = s;
    }
  }
  return out;
}

template <class T>
Vec3<T> operator*(const Mat3<T>& a, const Vec3<T>& x) {
  Vec3<T> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    T s = T(0);
    for (std::size_t k = 0; k < 3; ++k) s += a[i][k] * x[k];
    out[i] = s;
  }
  return out;
}

template <class T>
T max_abs_difference(const Mat3<T>& a, const Mat3<T>& b) {
  using std::abs;
  T worst = T(0);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const T d = abs(a[i][j] - b[i][j]);
      if (d > worst) worst = d;
    }
  }
  return worst;
}

/// R(theta) acting on a plane vector.
template <class T>
Vec2<T> rotate2(const T& theta, const Vec2<T>& x) {
  using std::cos;
  using std::sin;
  const T c = cos(theta), s = sin(theta);
  return {c * x[0] + s * x[1], c * x[1] - s * x[0]};
}

/// v x w = v1 w2 - v2 w1
template <class T>
T cross2(const Vec2<T>& v, const Vec2<T>& w) {
  return v[0] * w[1] - v[1] * w[0];
}

/// diag(1, R(theta))
template <class T>
Mat3<T> rotation_matrix(const T& theta) {
  using std::cos;
  using std::sin;
  Mat3<T> m = identity3<T>();
  m[1][1] = cos(theta);
  m[1][2] = sin(theta);
  m[2][1] = -sin(theta);
  m[2][2] = cos(theta);
  return m;
}

/// Pure boost L(v): L00 = gamma, L0k = Lk0 = gamma v_k / c,
/// Lik = delta_ik + (gamma - 1) v_i v_k / v^2. Throws std::domain_error for
/// |v| >= c or c <= 0.
template <class T>
Mat3<T> boost_matrix(const Vec2<T>& v, const T& c) {
  using std::sqrt;
  if (!(c > T(0))) throw std::domain_error("boost_matrix: c must be positive");
  const T v2 = v[0] * v[0] + v[1] * v[1];
  const T beta2 = v2 / (c * c);
  if (!(beta2 < T(1))) throw std::domain_error("boost_matrix: |v| >= c");
  if (v2 == T(0)) return identity3<T>();

  const T root = sqrt(T(1) - beta2);
  const T gamma = T(1) / root;
  // gamma - 1 without cancellation
  const T gamma_minus_one = beta2 / (root * (T(1) + root));
  Mat3<T> m{};
  m[0][0] = gamma;
  for (std::size_t k = 0; k < 2; ++k) {
    m[0][k + 1] = gamma * v[k] / c;
    m[k + 1][0] = gamma * v[k] / c;
    for (std::size_t i = 0; i < 2; ++i) {
      m[i + 1][k + 1] = (i == k ? T(1) : T(0)) + gamma_minus_one * v[i] * v[k] / v2;
    }
  }
  return m;
}

/// max |Lambda^T eta Lambda - eta|
template <class T>
T lorentz_defect(const Mat3<T>& lam) {
  using std::abs;
  const T eta[3] = {T(1), T(-1), T(-1)};
  T worst = T(0);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      T s = T(0);
      for (std::size_t k = 0; k < 3; ++k) s += lam[k][i] * eta[k] * lam[k][j];
      const T d = abs(s - (i == j ? eta[i] : T(0)));
      if (d > worst) worst = d;
    }
  }
  return worst;
}

template <class T>
T determinant(const Mat3<T>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Lambda = L(v) R(theta) with v_i = c Lambda^i_0 / Lambda^0_0 and theta read
/// from the SO(2) block of L(v)^-1 Lambda.
///
/// Throws std::domain_error when Lambda is not orthochronous or the residual
/// is not a proper rotation (within `tolerance`).
template <class T>
BasicBoostDecomposition<T> decompose_lorentz(const Mat3<T>& lam, const T& c, double tolerance = 1e-9) {
  using std::abs;
  using std::atan2;
  const T tol = T(tolerance);
  if (!(lam[0][0] >= T(1) - tol)) throw std::domain_error("decompose: Lorentz matrix is not orthochronous");

  BasicBoostDecomposition<T> out;
  out.v = {c * lam[1][0] / lam[0][0], c * lam[2][0] / lam[0][0]};
  const Mat3<T> residual = boost_matrix(Vec2<T>{-out.v[0], -out.v[1]}, c) * lam;

  const bool block_diagonal = abs(residual[0][0] - T(1)) <= tol && abs(residual[0][1]) <= tol &&
                              abs(residual[0][2]) <= tol && abs(residual[1][0]) <= tol &&
                              abs(residual[2][0]) <= tol;
  const bool rotation = abs(residual[1][1] - residual[2][2]) <= tol && abs(residual[1][2] + residual[2][1]) <= tol &&
                        abs(residual[1][1] * residual[1][1] + residual[1][2] * residual[1][2] - T(1)) <= tol;
  if (!block_diagonal || !rotation) {
    throw std::domain_error("decompose: residual L(v)^-1 Lambda is not a proper rotation");
  }
  out.theta = atan2(residual[1][2], residual[1][1]);
  return out;
}

template <class T>
BasicBoostDecomposition<T> decompose(const BasicPoincareElement<T>& p, double tolerance = 1e-9) {
  return decompose_lorentz(p.lambda, p.c, tolerance);
}

/// {L(v) R(theta), (c tau, u)}
template <class T>
BasicPoincareElement<T> make_poincare(const T& tau, const Vec2<T>& u, const Vec2<T>& v, const T& theta, const T& c) {
  BasicPoincareElement<T> p;
  p.lambda = boost_matrix(v, c) * rotation_matrix(theta);
  p.a = {c * tau, u[0], u[1]};
  p.c = c;
  return p;
}

/// {Lambda, a}{Lambda', a'} = {Lambda Lambda', Lambda a' + a}
template <class T>
BasicPoincareElement<T> compose(const BasicPoincareElement<T>& g, const BasicPoincareElement<T>& h) {
  BasicPoincareElement<T> out;
  out.lambda = g.lambda * h.lambda;
  const Vec3<T> shifted = g.lambda * h.a;
  for (std::size_t i = 0; i < 3; ++i) out.a[i] = shifted[i] + g.a[i];
  out.c = g.c;
  return out;
}

/// Multiplies the boosts and decomposes the product.
template <class T>
BasicBoostComposition<T> compose_boosts(const Vec2<T>& v, const Vec2<T>& w, const T& c) {
  const auto d = decompose_lorentz(boost_matrix(v, c) * boost_matrix(w, c), c);
  return {d.v, d.theta};
}

/// Limit of c^2 delta_theta: (v x w) / 2.
template <class T>
T thomas_target(const Vec2<T>& v, const Vec2<T>& w) {
  return cross2(v, w) / T(2);
}

inline double thomas_target(const Vec2<double>& v, const Vec2<double>& w) { return thomas_target<double>(v, w); }

/// delta zeta for zeta({Lambda, a}) = c a^0, straight from the definition:
/// c (Lambda^0_mu a'^mu + a^0) - c a^0 - c a'^0.
template <class T>
T mass_cocycle_exponent(const BasicPoincareElement<T>& g, const BasicPoincareElement<T>& h) {
  const T c = g.c;
  T product_time = g.a[0];
  for (std::size_t mu = 0; mu < 3; ++mu) product_time += g.lambda[0][mu] * h.a[mu];
  return c * product_time - c * g.a[0] - c * h.a[0];
}

/// Angle reduced to (-pi, pi].
template <class T>
T wrap_angle_t(const T& angle) {
  using std::round;
  const T two_pi = T(2) * boost::math::constants::pi<T>();
  T r = angle - two_pi * round(angle / two_pi);
  if (r <= -boost::math::constants::pi<T>()) r += two_pi;
  return r;
}

/// c^2 (theta(Lambda Lambda') - theta(Lambda) - theta(Lambda')), the angle
/// difference reduced to (-pi, pi] before scaling.
template <class T>
T rotation_cocycle_exponent(const Mat3<T>& lam1, const Mat3<T>& lam2, const T& c) {
  const T t12 = decompose_lorentz(lam1 * lam2, c).theta;
  const T t1 = decompose_lorentz(lam1, c).theta;
  const T t2 = decompose_lorentz(lam2, c).theta;
  return c * c * wrap_angle_t(t12 - t1 - t2);
}

/// X^-1 [[Lambda, a], [0, 1]] X with X = diag(c, 1, 1, 1). Tends to the
/// Galilei matrix [[1, 0, tau], [v, R, u], [0, 0, 1]] as c grows.
template <class T>
Mat4<T> contraction_conjugate(const BasicPoincareElement<T>& p) {
  const T scale[4] = {p.c, T(1), T(1), T(1)};
  Mat4<T> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) out[i][j] = p.lambda[i][j] * scale[j] / scale[i];
    out[i][3] = p.a[i] / scale[i];
  }
  out[3][3] = T(1);
  return out;
}

/// Homogeneous Galilei matrix acting on (t, x, 1).
template <class T>
Mat4<T> galilei_matrix(const T& tau, const Vec2<T>& u, const Vec2<T>& v, const T& theta) {
  using std::cos;
  using std::sin;
  Mat4<T> m{};
  m[0][0] = T(1);
  m[0][3] = tau;
  m[1][0] = v[0];
  m[2][0] = v[1];
  m[1][1] = cos(theta);
  m[1][2] = sin(theta);
  m[2][1] = -sin(theta);
  m[2][2] = cos(theta);
  m[1][3] = u[0];
  m[2][3] = u[1];
  m[3][3] = T(1);
  return m;
}

/// Galilei parameters of a Poincare element: phase 0, tau = a^0 / c, u the
/// spatial translation, (v, theta) from the decomposition.
template <class T>
GroupElement contract_element(const BasicPoincareElement<T>& p) {
  const auto d = decompose(p);
  GroupElement g;
  g.tau = static_cast<double>(p.a[0] / p.c);
  g.u = {static_cast<double>(p.a[1]), static_cast<double>(p.a[2])};
  g.v = {static_cast<double>(d.v[0]), static_cast<double>(d.v[1])};
  g.theta = static_cast<double>(d.theta);
  return g;
}

}  // namespace galilei
