#pragma once

// Local evolution under H = -i gamma sigma_z - Delta sigma_x, expressed in the
// dimensionless variables gamma_tilde = gamma / Delta and tau = Delta t.

#include "qnh/density.hpp"
#include "qnh/linalg.hpp"

namespace qnh {

enum class Regime { Oscillatory, Exceptional, Broken };

const char* to_string(Regime r) noexcept;

/// Validated (gamma_tilde, tau) pair; both finite and non-negative.
class HamiltonianParams {
 public:
  HamiltonianParams(double gamma_tilde, double tau);

  double gamma_tilde() const noexcept { return gamma_tilde_; }
  double tau() const noexcept { return tau_; }

 private:
  double gamma_tilde_;
  double tau_;
};

/// C = cosh(mu tau) and S = sinh(mu tau) / mu with mu^2 = gamma_tilde^2 - 1,
/// evaluated without complex arithmetic in every regime.
struct Kernel {
  double c;
  double s;
};

Kernel kernel_cs(double gamma_tilde, double tau);

Regime regime(double gamma_tilde);

/// U = exp(-i H t) = C 1 - i S H / Delta.
Mat2 propagator(const HamiltonianParams& p);

struct EvolutionResult {
  DensityMatrix4 rho;  // renormalized state
  double norm;         // Tr of the unnormalized (U x 1) rho0 (U x 1)^dagger
};

EvolutionResult evolve(const DensityMatrix4& rho0, const HamiltonianParams& p);

}  // namespace qnh
