#include "qnh/density.hpp"

#include <cmath>
#include <string>

#include "qnh/error.hpp"
#include "qnh/tolerances.hpp"

namespace qnh {

DensityMatrix4 DensityMatrix4::from_matrix(const Mat4& m) {
  for (const auto& z : m.data)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorKind::InvalidState, "finiteness: non-finite entry");
  if (hermiticity_defect(m) > tol::kHermitian)
    throw Error(ErrorKind::InvalidState, "hermiticity: max|m - m^dagger| exceeds tolerance");
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > tol::kTrace)
    throw Error(ErrorKind::InvalidState, "trace: Tr m = " + std::to_string(tr.real()));

  Mat4 h = hermitian_part(m);
  const auto eig = herm_eig(h);
  if (eig.values[0] < -tol::kPsdClip)
    throw Error(ErrorKind::InvalidState,
                "positivity: minimum eigenvalue " + std::to_string(eig.values[0]));
  if (eig.values[0] < 0.0) {
    h = hermitian_part(spectral_apply(eig, [](double l) { return std::max(l, 0.0); }));
    h *= 1.0 / h.trace().real();
  }
  return DensityMatrix4(h);
}

DensityMatrix4 DensityMatrix4::from_ket(const std::array<Complex, 4>& psi) {
  double n2 = 0.0;
  for (const auto& z : psi) n2 += std::norm(z);
  if (!(n2 > 0.0) || !std::isfinite(n2))
    throw Error(ErrorKind::InvalidState, "ket: zero or non-finite norm");
  Mat4 m;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = psi[r] * std::conj(psi[c]) / n2;
  return DensityMatrix4(hermitian_part(m));
}

DensityMatrix4 DensityMatrix4::maximally_mixed() { return DensityMatrix4(Mat4::identity() * 0.25); }

double DensityMatrix4::purity() const { return hs_norm_sq(m_); }

}  // namespace qnh
