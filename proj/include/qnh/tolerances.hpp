#pragma once

// Numerical thresholds shared by every module.

namespace qnh::tol {

inline constexpr double kHermitian = 1e-10;        // DensityMatrix4: max|m - m^dagger|
inline constexpr double kTrace = 1e-10;            // DensityMatrix4: |Tr m - 1|
inline constexpr double kPsdClip = 1e-10;          // eigenvalues in [-kPsdClip, 0) are clipped
inline constexpr double kEigInputHermitian = 1e-8; // herm_eig precondition
inline constexpr double kSqrtNegative = 1e-8;      // mat_sqrt_psd rejects below -kSqrtNegative
inline constexpr double kSpectralFloor = 1e-14;    // eigenvalues below kSpectralFloor * lambda_max are rounding noise
inline constexpr double kJacobiOffDiagonal = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kImagBloch = 1e-8;     // fano_decompose rejects larger imaginary parts
inline constexpr double kExceptional = 1e-12;  // regime(): |1 - gamma^2| at or below is the EP
inline constexpr double kSeriesSwitch = 1e-8;  // kernel_cs: |mu^2 tau^2| below uses Taylor series
inline constexpr double kMarginalZero = 1e-8;  // x_tol: ||x|| at or below means maximally mixed marginal
inline constexpr double kNormFloor = 1e-300;
inline constexpr double kUnitCoefficients = 1e-12;  // |a|^2 + |b|^2 = 1

}  // namespace qnh::tol
