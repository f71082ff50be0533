#pragma once

// Correlation quantifiers of two-qubit states: concurrence, Hilbert-Schmidt
// and trace-distance measurement-induced nonlocality, maximal Bell function.

#include <optional>
#include <variant>

#include "qnh/density.hpp"
#include "qnh/fano.hpp"
#include "qnh/tolerances.hpp"

namespace qnh {

/// Faithful evaluates each quantifier by its definition. PaperRaw evaluates
/// the closed-form expressions exactly as they are commonly printed:
/// HS-MIN without the 1/4, Bell as sqrt(2)(u1 + u2), trace-MIN from the raw
/// diagonal of T and the raw Bloch vector x without canonicalization.
enum class MeasureMode { Faithful, PaperRaw };

const char* to_string(MeasureMode m) noexcept;

enum class NormKind { HilbertSchmidt, Trace };

/// Unit Bloch direction n of the qubit-a projectors (1 +- n.sigma) / 2.
class MeasurementDirection {
 public:
  /// Normalizes n; throws Error(InvalidParams) for a zero or non-finite vector.
  explicit MeasurementDirection(const Vec3& n);

  const Vec3& n() const noexcept { return n_; }

 private:
  Vec3 n_;
};

struct FixedDirection {
  MeasurementDirection direction;
};
struct AllDirections {};
using AdmissibleDirections = std::variant<FixedDirection, AllDirections>;

/// sum_{+-} (Pi_+- x 1) rho (Pi_+- x 1)
DensityMatrix4 post_measurement(const DensityMatrix4& rho, const MeasurementDirection& d);

/// Projective measurements on qubit a that leave its marginal unchanged:
/// only the one along x when ||x|| > x_tol, otherwise every direction.
AdmissibleDirections locally_invariant_directions(const DensityMatrix4& rho,
                                                  double x_tol = tol::kMarginalZero);

/// ||rho - Pi_d(rho)||, squared for HilbertSchmidt.
double disturbance(const DensityMatrix4& rho, const MeasurementDirection& d, NormKind norm);

struct SphereSearchOptions {
  int grid_points = 20000;
  double angular_resolution = 1e-6;
  double x_tol = tol::kMarginalZero;
};

struct MinSearchResult {
  double value;
  MeasurementDirection argmax;
};

/// Ground-truth MIN by direct maximization of `disturbance` over admissible
/// measurements: a Fibonacci sphere grid followed by alternating
/// golden-section refinement of the polar and azimuthal angles. The grid is
/// evaluated with OpenMP; the reduction is serial, so the result does not
/// depend on the thread count.
MinSearchResult min_bruteforce(const DensityMatrix4& rho, NormKind norm,
                               const SphereSearchOptions& opts = {});

/// Single-threaded reference for min_bruteforce; bitwise identical output.
MinSearchResult min_bruteforce_serial(const DensityMatrix4& rho, NormKind norm,
                                      const SphereSearchOptions& opts = {});

double concurrence(const DensityMatrix4& rho);
double hs_min(const DensityMatrix4& rho, MeasureMode mode, double x_tol = tol::kMarginalZero);
double trace_min(const DensityMatrix4& rho, MeasureMode mode, double x_tol = tol::kMarginalZero);
double bell_max(const DensityMatrix4& rho, MeasureMode mode);

struct MeasureReport {
  double concurrence = 0.0;
  double hs_min = 0.0;
  double trace_min = 0.0;
  double bell = 0.0;
  MeasureMode mode = MeasureMode::Faithful;
  /// The unique locally invariant measurement, when the marginal of qubit a
  /// is not maximally mixed.
  std::optional<MeasurementDirection> argmax_direction;
};

MeasureReport measure_all(const DensityMatrix4& rho, MeasureMode mode);

}  // namespace qnh
