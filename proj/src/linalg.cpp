#include "qnh/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qnh/error.hpp"
#include "qnh/tolerances.hpp"

namespace qnh {

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return m;
}

namespace pauli {

Mat2 identity() { return Mat2::identity(); }

Mat2 x() {
  Mat2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Mat2 y() {
  Mat2 m;
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return m;
}

Mat2 z() {
  Mat2 m;
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

Mat2 sigma(int j) {
  switch (j) {
    case 0: return identity();
    case 1: return x();
    case 2: return y();
    case 3: return z();
    default: throw Error(ErrorKind::InvalidParams, "Pauli index " + std::to_string(j));
  }
}

Mat2 dot(const Vec3& n) {
  Mat2 m;
  m(0, 0) = n[2];
  m(1, 1) = -n[2];
  m(0, 1) = Complex(n[0], -n[1]);
  m(1, 0) = Complex(n[0], n[1]);
  return m;
}

}  // namespace pauli

namespace {

// Rotate the (p, q) plane of a Hermitian matrix so that a(p, q) vanishes.
// The rotation is diag(1, e^{-i phi}) followed by a real Givens rotation.
template <std::size_t N>
void jacobi_rotate(Matrix<N>& a, Matrix<N>& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;
  const Complex phase_c = std::conj(phase);

  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const double app = a(p, p).real() - t * r;
  const double aqq = a(q, q).real() + t * r;

  for (std::size_t k = 0; k < N; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * phase_c * akq;
    a(k, q) = s * akp + c * phase_c * akq;
  }
  for (std::size_t k = 0; k < N; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * apk + c * phase * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app;
  a(q, q) = aqq;

  for (std::size_t k = 0; k < N; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * phase_c * vkq;
    v(k, q) = s * vkp + c * phase_c * vkq;
  }
}

template <std::size_t N>
double off_diagonal_norm(const Matrix<N>& a) {
  double sum = 0.0;
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = p + 1; q < N; ++q) sum += std::norm(a(p, q));
  return std::sqrt(2.0 * sum);
}

template <std::size_t N>
double frobenius(const Matrix<N>& a) {
  double sum = 0.0;
  for (const auto& z : a.data) sum += std::norm(z);
  return std::sqrt(sum);
}

}  // namespace

template <std::size_t N>
HermEig<N> herm_eig(const Matrix<N>& m) {
  for (const auto& z : m.data)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorKind::NotHermitian, "non-finite matrix entry");
  if (hermiticity_defect(m) > tol::kEigInputHermitian)
    throw Error(ErrorKind::NotHermitian, "max|M - M^dagger| exceeds tolerance");

  Matrix<N> a = hermitian_part(m);
  Matrix<N> v = Matrix<N>::identity();
  const double scale = frobenius(a);

  bool converged = scale == 0.0;
  for (int sweep = 0; sweep < tol::kJacobiMaxSweeps && !converged; ++sweep) {
    if (off_diagonal_norm(a) <= tol::kJacobiOffDiagonal * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) jacobi_rotate(a, v, p, q);
  }
  if (!converged && off_diagonal_norm(a) > tol::kJacobiOffDiagonal * scale)
    throw Error(ErrorKind::NoConvergence, "Jacobi sweep cap reached");

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermEig<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    const std::size_t src = order[k];
    out.values[k] = a(src, src).real();
    // Fix the free phase: first non-negligible component real and positive.
    Complex phase = 1.0;
    for (std::size_t r = 0; r < N; ++r) {
      const double mag = std::abs(v(r, src));
      if (mag > 1e-10) {
        phase = std::conj(v(r, src)) / mag;
        break;
      }
    }
    for (std::size_t r = 0; r < N; ++r) out.vectors(r, k) = v(r, src) * phase;
  }
  return out;
}

template HermEig<2> herm_eig<2>(const Matrix<2>&);
template HermEig<3> herm_eig<3>(const Matrix<3>&);
template HermEig<4> herm_eig<4>(const Matrix<4>&);

Mat4 mat_sqrt_psd(const Mat4& m) {
  const auto eig = herm_eig(m);
  if (eig.values[0] < -tol::kSqrtNegative)
    throw Error(ErrorKind::NotPSD, "minimum eigenvalue " + std::to_string(eig.values[0]));
  const double floor = tol::kSpectralFloor * std::max(eig.values[3], 0.0);
  return hermitian_part(spectral_apply(eig, [floor](double l) { return l > floor ? std::sqrt(l) : 0.0; }));
}

double trace_norm(const Mat4& m) {
  const auto eig = herm_eig(m);
  double sum = 0.0;
  for (double l : eig.values) sum += std::abs(l);
  return sum;
}

double hs_norm_sq(const Mat4& m) {
  double sum = 0.0;
  for (const auto& z : m.data) sum += std::norm(z);
  return sum;
}

}  // namespace qnh
