#pragma once

#include "qnh/linalg.hpp"

namespace qnh {

/// A validated two-qubit state: Hermitian, unit trace, positive semidefinite.
///
/// Construction checks each invariant against the thresholds in tolerances.hpp
/// and throws Error(InvalidState) naming the failed one ("hermiticity",
/// "trace" or "positivity"). Rounding negatives in [-tol::kPsdClip, 0) are
/// clipped to zero and the result renormalized.
class DensityMatrix4 {
 public:
  static DensityMatrix4 from_matrix(const Mat4& m);

  /// The unit vector |psi><psi| after normalizing psi.
  static DensityMatrix4 from_ket(const std::array<Complex, 4>& psi);

  static DensityMatrix4 maximally_mixed();

  const Mat4& matrix() const noexcept { return m_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  /// Tr(rho^2).
  double purity() const;

 private:
  explicit DensityMatrix4(const Mat4& m) : m_(m) {}
  Mat4 m_;
};

}  // namespace qnh
