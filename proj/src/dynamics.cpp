#include "qnh/dynamics.hpp"

#include <cmath>
#include <string>

#include "qnh/error.hpp"
#include "qnh/tolerances.hpp"

namespace qnh {

const char* to_string(Regime r) noexcept {
  switch (r) {
    case Regime::Oscillatory: return "oscillatory";
    case Regime::Exceptional: return "exceptional";
    case Regime::Broken: return "broken";
  }
  return "unknown";
}

HamiltonianParams::HamiltonianParams(double gamma_tilde, double tau)
    : gamma_tilde_(gamma_tilde), tau_(tau) {
  if (!std::isfinite(gamma_tilde) || gamma_tilde < 0.0)
    throw Error(ErrorKind::InvalidParams, "gamma_tilde must be finite and >= 0");
  if (!std::isfinite(tau) || tau < 0.0)
    throw Error(ErrorKind::InvalidParams, "tau must be finite and >= 0");
}

Kernel kernel_cs(double gamma_tilde, double tau) {
  const double mu2 = gamma_tilde * gamma_tilde - 1.0;
  const double x2 = mu2 * tau * tau;
  if (std::abs(x2) < tol::kSeriesSwitch) {
    return {1.0 + x2 / 2.0 + x2 * x2 / 24.0, tau * (1.0 + x2 / 6.0 + x2 * x2 / 120.0)};
  }
  if (mu2 > 0.0) {
    const double mu = std::sqrt(mu2);
    return {std::cosh(mu * tau), std::sinh(mu * tau) / mu};
  }
  const double omega = std::sqrt(-mu2);
  return {std::cos(omega * tau), std::sin(omega * tau) / omega};
}

Regime regime(double gamma_tilde) {
  if (!std::isfinite(gamma_tilde) || gamma_tilde < 0.0)
    throw Error(ErrorKind::InvalidParams, "gamma_tilde must be finite and >= 0");
  const double d = 1.0 - gamma_tilde * gamma_tilde;
  if (std::abs(d) <= tol::kExceptional) return Regime::Exceptional;
  return d > 0.0 ? Regime::Oscillatory : Regime::Broken;
}

Mat2 propagator(const HamiltonianParams& p) {
  const auto [c, s] = kernel_cs(p.gamma_tilde(), p.tau());
  Mat2 u;
  u(0, 0) = c - p.gamma_tilde() * s;
  u(1, 1) = c + p.gamma_tilde() * s;
  u(0, 1) = Complex(0.0, s);
  u(1, 0) = Complex(0.0, s);
  return u;
}

EvolutionResult evolve(const DensityMatrix4& rho0, const HamiltonianParams& p) {
  const Mat4 ua = kron(propagator(p), Mat2::identity());
  Mat4 rho_t = ua * rho0.matrix() * ua.adjoint();
  const double norm = rho_t.trace().real();
  if (!(norm >= tol::kNormFloor) || !std::isfinite(norm))
    throw Error(ErrorKind::DegenerateNorm, "Tr rho(t) = " + std::to_string(norm));
  rho_t *= 1.0 / norm;
  return {DensityMatrix4::from_matrix(hermitian_part(rho_t)), norm};
}

}  // namespace qnh
