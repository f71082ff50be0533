#pragma once

// Independent reference computations and random generators used by the test
// suites and `qnh selftest`. Nothing in the core library depends on these.

#include <cstdint>
#include <iosfwd>
#include <random>

#include "qnh/density.hpp"
#include "qnh/fano.hpp"
#include "qnh/linalg.hpp"

namespace qnh::oracle {

using Rng = std::mt19937_64;

/// exp(A) by scaling and squaring with a 12-term Taylor series.
Mat2 expm(const Mat2& a);

/// exp(-i H t) for H / Delta = -i gamma_tilde sigma_z - sigma_x, tau = Delta t.
Mat2 propagator_expm(double gamma_tilde, double tau);

/// Matrix inverse of a 2 x 2 matrix.
Mat2 inverse(const Mat2& m);

Complex gaussian_complex(Rng& rng);

/// Haar-random 2 x 2 unitary.
Mat2 random_unitary2(Rng& rng);

/// A + A^dagger with Gaussian entries.
template <std::size_t N>
Matrix<N> random_hermitian(Rng& rng) {
  Matrix<N> a;
  for (auto& z : a.data) z = gaussian_complex(rng);
  return a + a.adjoint();
}

/// G G^dagger / Tr with a 4 x rank Ginibre matrix G.
DensityMatrix4 random_density(Rng& rng, int rank = 4);

/// Random state whose qubit-a marginal is maximally mixed (x = 0).
DensityMatrix4 random_x_zero_state(Rng& rng);

/// (ua x ub) rho (ua x ub)^dagger
DensityMatrix4 local_rotate(const DensityMatrix4& rho, const Mat2& ua, const Mat2& ub);

/// Pure-state concurrence 2|psi_00 psi_11 - psi_01 psi_10| of a normalized ket.
double pure_concurrence(const std::array<Complex, 4>& psi);

/// 2 max(0, |rho_14| - sqrt(rho_22 rho_33), |rho_23| - sqrt(rho_11 rho_44))
/// for states with non-zero entries only on the diagonal and anti-diagonal.
double x_state_concurrence(const Mat4& rho);

/// Runs the oracle-equivalence checks, printing one line per check.
/// Returns true when all pass.
bool run_selftest(std::ostream& out);

}  // namespace qnh::oracle
