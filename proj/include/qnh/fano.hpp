#pragma once

// Bloch/Fano parametrization of two-qubit states:
//   rho = 1/4 (1 x 1 + x.sigma x 1 + 1 x y.sigma + sum_mn T_mn sigma_m x sigma_n)

#include <array>

#include "qnh/density.hpp"
#include "qnh/linalg.hpp"

namespace qnh {

/// Row-major real 3 x 3 matrix.
struct RealMat3 {
  std::array<double, 9> data{};

  double& operator()(std::size_t r, std::size_t c) { return data[r * 3 + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * 3 + c]; }

  static RealMat3 identity();
  static RealMat3 diagonal(const Vec3& d);
  RealMat3 transpose() const;
  double determinant() const;
  double trace() const { return data[0] + data[4] + data[8]; }
};

RealMat3 operator*(const RealMat3& a, const RealMat3& b);
Vec3 operator*(const RealMat3& a, const Vec3& v);

double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);
Vec3 cross(const Vec3& a, const Vec3& b);

/// Local Bloch vectors x (qubit a), y (qubit b) and correlation matrix T.
struct FanoForm {
  Vec3 x{};
  Vec3 y{};
  RealMat3 t{};
};

/// Local-rotation frame in which T is diagonal: rot_a * T * rot_b^t = diag(c),
/// both rotations proper, |c_1| >= |c_2| >= |c_3|.
struct CanonicalForm {
  Vec3 c{};
  Vec3 x_rot{};
  Vec3 y_rot{};
  RealMat3 rot_a{};
  RealMat3 rot_b{};
};

/// Throws Error(NonRealBlochComponent) if any Pauli expectation has an
/// imaginary part above tol::kImagBloch.
FanoForm fano_decompose(const DensityMatrix4& rho);

/// Inverse of fano_decompose. The result is Hermitian with unit trace but is
/// not checked for positivity.
Mat4 fano_compose(const FanoForm& f);

CanonicalForm canonicalize(const FanoForm& f);

}  // namespace qnh
