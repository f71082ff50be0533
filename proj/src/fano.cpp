#include "qnh/fano.hpp"

#include <algorithm>
#include <cmath>

#include "qnh/error.hpp"
#include "qnh/tolerances.hpp"

namespace qnh {

RealMat3 RealMat3::identity() { return diagonal({1.0, 1.0, 1.0}); }

RealMat3 RealMat3::diagonal(const Vec3& d) {
  RealMat3 m;
  for (std::size_t i = 0; i < 3; ++i) m(i, i) = d[i];
  return m;
}

RealMat3 RealMat3::transpose() const {
  RealMat3 m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = (*this)(c, r);
  return m;
}

double RealMat3::determinant() const {
  const auto& a = *this;
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

RealMat3 operator*(const RealMat3& a, const RealMat3& b) {
  RealMat3 m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      for (std::size_t k = 0; k < 3; ++k) m(r, c) += a(r, k) * b(k, c);
  return m;
}

Vec3 operator*(const RealMat3& a, const Vec3& v) {
  Vec3 out{};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t k = 0; k < 3; ++k) out[r] += a(r, k) * v[k];
  return out;
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

namespace {

// sigma_m (x) sigma_n for m, n in 0..3.
const std::array<Mat4, 16>& pauli_products() {
  static const std::array<Mat4, 16> table = [] {
    std::array<Mat4, 16> t;
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) t[4 * m + n] = kron(pauli::sigma(m), pauli::sigma(n));
    return t;
  }();
  return table;
}

double real_expectation(const Mat4& rho, const Mat4& op) {
  Complex tr = 0.0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) tr += rho(r, c) * op(c, r);
  if (std::abs(tr.imag()) > tol::kImagBloch)
    throw Error(ErrorKind::NonRealBlochComponent, "imaginary Pauli expectation value");
  return tr.real();
}

Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  return {v[0] / n, v[1] / n, v[2] / n};
}

// Any unit vector orthogonal to the unit vector u.
Vec3 orthogonal_to(const Vec3& u) {
  std::size_t axis = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(u[i]) < std::abs(u[axis])) axis = i;
  Vec3 e{};
  e[axis] = 1.0;
  return normalized(cross(u, e));
}

Vec3 column(const RealMat3& m, std::size_t c) { return {m(0, c), m(1, c), m(2, c)}; }

void set_column(RealMat3& m, std::size_t c, const Vec3& v) {
  for (std::size_t r = 0; r < 3; ++r) m(r, c) = v[r];
}

}  // namespace

FanoForm fano_decompose(const DensityMatrix4& rho) {
  const auto& table = pauli_products();
  const Mat4& m = rho.matrix();
  FanoForm f;
  for (std::size_t j = 0; j < 3; ++j) {
    f.x[j] = real_expectation(m, table[4 * (j + 1)]);
    f.y[j] = real_expectation(m, table[j + 1]);
  }
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) f.t(a, b) = real_expectation(m, table[4 * (a + 1) + (b + 1)]);
  return f;
}

Mat4 fano_compose(const FanoForm& f) {
  const auto& table = pauli_products();
  Mat4 m = table[0];
  for (std::size_t j = 0; j < 3; ++j) {
    m += table[4 * (j + 1)] * f.x[j];
    m += table[j + 1] * f.y[j];
  }
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) m += table[4 * (a + 1) + (b + 1)] * f.t(a, b);
  return hermitian_part(m * 0.25);
}

CanonicalForm canonicalize(const FanoForm& f) {
  const RealMat3& t = f.t;
  const RealMat3 gram = t.transpose() * t;
  Mat3 g;
  for (std::size_t i = 0; i < 9; ++i) g.data[i] = gram.data[i];
  const auto eig = herm_eig(g);

  // Right singular vectors, descending singular value. Ties are ordered
  // lexicographically by eigenvector so the result is reproducible.
  struct Pair {
    double value;
    Vec3 vec;
  };
  std::array<Pair, 3> pairs;
  for (std::size_t k = 0; k < 3; ++k)
    pairs[k] = {eig.values[k],
                {eig.vectors(0, k).real(), eig.vectors(1, k).real(), eig.vectors(2, k).real()}};
  const double scale = std::max(1.0, std::abs(eig.values[2]));
  std::stable_sort(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
    if (std::abs(a.value - b.value) > 1e-12 * scale) return a.value > b.value;
    return a.vec > b.vec;
  });

  RealMat3 v;
  for (std::size_t k = 0; k < 3; ++k) set_column(v, k, normalized(pairs[k].vec));
  if (v.determinant() < 0.0) set_column(v, 2, {-v(0, 2), -v(1, 2), -v(2, 2)});

  constexpr double kRankTol = 1e-12;
  Vec3 u1;
  const Vec3 tv1 = t * column(v, 0);
  if (norm(tv1) > kRankTol) {
    u1 = normalized(tv1);
  } else {
    u1 = {1.0, 0.0, 0.0};
  }
  Vec3 u2;
  Vec3 tv2 = t * column(v, 1);
  const double proj = dot(tv2, u1);
  for (std::size_t i = 0; i < 3; ++i) tv2[i] -= proj * u1[i];
  if (norm(tv2) > kRankTol) {
    u2 = normalized(tv2);
  } else {
    u2 = orthogonal_to(u1);
  }
  const Vec3 u3 = cross(u1, u2);

  RealMat3 u;
  set_column(u, 0, u1);
  set_column(u, 1, u2);
  set_column(u, 2, u3);

  CanonicalForm out;
  out.rot_a = u.transpose();
  out.rot_b = v.transpose();
  const RealMat3 d = out.rot_a * t * v;
  out.c = {d(0, 0), d(1, 1), d(2, 2)};
  out.x_rot = out.rot_a * f.x;
  out.y_rot = out.rot_b * f.y;
  return out;
}

}  // namespace qnh
