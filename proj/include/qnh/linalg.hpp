#pragma once

// Fixed-size complex matrix algebra for one and two qubits.

#include <array>
#include <complex>
#include <cstddef>

namespace qnh {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

/// Dense row-major N x N complex matrix.
template <std::size_t N>
struct Matrix {
  static constexpr std::size_t kDim = N;
  std::array<Complex, N * N> data{};

  Complex& operator()(std::size_t r, std::size_t c) { return data[r * N + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data[r * N + c]; }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(const std::array<double, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  Matrix adjoint() const {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
  }

  Matrix conjugate() const {
    Matrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.data[i] = std::conj(data[i]);
    return m;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data[i] += o.data[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data[i] -= o.data[i];
    return *this;
  }
  Matrix& operator*=(Complex s) {
    for (auto& v : data) v *= s;
    return *this;
  }
};

using Mat2 = Matrix<2>;
using Mat3 = Matrix<3>;
using Mat4 = Matrix<4>;

template <std::size_t N>
Matrix<N> operator+(Matrix<N> a, const Matrix<N>& b) {
  return a += b;
}
template <std::size_t N>
Matrix<N> operator-(Matrix<N> a, const Matrix<N>& b) {
  return a -= b;
}
template <std::size_t N>
Matrix<N> operator*(Matrix<N> a, Complex s) {
  return a *= s;
}
template <std::size_t N>
Matrix<N> operator*(Complex s, Matrix<N> a) {
  return a *= s;
}

template <std::size_t N>
Matrix<N> operator*(const Matrix<N>& a, const Matrix<N>& b) {
  Matrix<N> m;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t k = 0; k < N; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < N; ++c) m(r, c) += ark * b(k, c);
    }
  return m;
}

/// Largest entrywise modulus of a - b.
template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N * N; ++i) worst = std::max(worst, std::abs(a.data[i] - b.data[i]));
  return worst;
}

template <std::size_t N>
bool approx_equal(const Matrix<N>& a, const Matrix<N>& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

/// max|m - m^dagger|.
template <std::size_t N>
double hermiticity_defect(const Matrix<N>& m) {
  double worst = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = r; c < N; ++c) worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
  return worst;
}

/// (m + m^dagger) / 2, with an exactly real diagonal.
template <std::size_t N>
Matrix<N> hermitian_part(const Matrix<N>& m) {
  Matrix<N> h;
  for (std::size_t r = 0; r < N; ++r) {
    h(r, r) = m(r, r).real();
    for (std::size_t c = r + 1; c < N; ++c) {
      const Complex v = 0.5 * (m(r, c) + std::conj(m(c, r)));
      h(r, c) = v;
      h(c, r) = std::conj(v);
    }
  }
  return h;
}

Mat4 kron(const Mat2& a, const Mat2& b);

namespace pauli {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
/// sigma_j for j = 1, 2, 3 (x, y, z); j = 0 is the identity.
Mat2 sigma(int j);
/// n . sigma for a real 3-vector n.
Mat2 dot(const Vec3& n);
}  // namespace pauli

/// Eigen-decomposition of a Hermitian matrix: ascending eigenvalues and
/// orthonormal eigenvectors stored as the columns of `vectors`.
template <std::size_t N>
struct HermEig {
  std::array<double, N> values{};
  Matrix<N> vectors;
};

/// Cyclic complex Jacobi. Throws Error(NotHermitian) when the input is not
/// Hermitian to tol::kEigInputHermitian, Error(NoConvergence) past the sweep cap.
template <std::size_t N>
HermEig<N> herm_eig(const Matrix<N>& m);

extern template HermEig<2> herm_eig<2>(const Matrix<2>&);
extern template HermEig<3> herm_eig<3>(const Matrix<3>&);
extern template HermEig<4> herm_eig<4>(const Matrix<4>&);

/// V diag(f(lambda)) V^dagger.
template <std::size_t N, class F>
Matrix<N> spectral_apply(const HermEig<N>& eig, F f) {
  Matrix<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    const double w = f(eig.values[k]);
    if (w == 0.0) continue;
    for (std::size_t r = 0; r < N; ++r) {
      const Complex vr = eig.vectors(r, k) * w;
      for (std::size_t c = 0; c < N; ++c) out(r, c) += vr * std::conj(eig.vectors(c, k));
    }
  }
  return out;
}

/// Principal square root of a Hermitian PSD matrix. Eigenvalues at or below
/// tol::kSpectralFloor * lambda_max count as zero; anything under
/// -tol::kSqrtNegative throws Error(NotPSD).
Mat4 mat_sqrt_psd(const Mat4& m);

/// Sum of |eigenvalues| of a Hermitian matrix.
double trace_norm(const Mat4& m);

/// Tr(M M^dagger).
double hs_norm_sq(const Mat4& m);

}  // namespace qnh
