#pragma once

// Initial-state families and their closed-form evolved density matrices.

#include <string>
#include <variant>

#include "qnh/density.hpp"

namespace qnh {

/// a|00> + b|11>
struct PurePhi {
  Complex a;
  Complex b;
};
/// a|01> + b|10>
struct PurePsi {
  Complex a;
  Complex b;
};
/// r |Phi+><Phi+| + (1 - r)/4 1
struct MixedPhi {
  double r;
};
/// r |Psi+><Psi+| + (1 - r)/4 1
struct MixedPsi {
  double r;
};

using StateFamily = std::variant<PurePhi, PurePsi, MixedPhi, MixedPsi>;

std::string describe(const StateFamily& f);

/// Throws Error(NormalizationError) for |a|^2 + |b|^2 != 1 and
/// Error(PurityOutOfRange) for r outside [0, 1].
void validate(const StateFamily& f);

DensityMatrix4 make_initial(const StateFamily& f);

// Closed-form evolved states, already divided by the trace. The entries are
// written through the regime-safe kernel (C, S) of kernel_cs so the same
// expressions hold below, at and above the exceptional point.

DensityMatrix4 closed_phi(double a, double b, double gamma_tilde, double tau);
DensityMatrix4 closed_psi(double a, double b, double gamma_tilde, double tau);
DensityMatrix4 closed_mixed_phi(double r, double gamma_tilde, double tau);
DensityMatrix4 closed_mixed_psi(double r, double gamma_tilde, double tau);

/// Dispatches to the closed form of a family. Pure families need real a, b.
DensityMatrix4 closed_form(const StateFamily& f, double gamma_tilde, double tau);

}  // namespace qnh
