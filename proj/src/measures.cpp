#include "qnh/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qnh/error.hpp"

namespace qnh {

const char* to_string(MeasureMode m) noexcept {
  return m == MeasureMode::Faithful ? "faithful" : "paper";
}

MeasurementDirection::MeasurementDirection(const Vec3& n) {
  const double len = norm(n);
  if (!std::isfinite(len) || len == 0.0)
    throw Error(ErrorKind::InvalidParams, "measurement direction must be a non-zero finite vector");
  n_ = {n[0] / len, n[1] / len, n[2] / len};
}

namespace {

Mat4 post_measure_matrix(const Mat4& rho, const Vec3& n) {
  const Mat2 ns = pauli::dot(n);
  const Mat2 plus = (Mat2::identity() + ns) * 0.5;
  const Mat2 minus = (Mat2::identity() - ns) * 0.5;
  const Mat4 pp = kron(plus, Mat2::identity());
  const Mat4 pm = kron(minus, Mat2::identity());
  return hermitian_part(pp * rho * pp + pm * rho * pm);
}

double disturbance_raw(const Mat4& rho, const Vec3& n, NormKind norm) {
  const Mat4 residual = rho - post_measure_matrix(rho, n);
  return norm == NormKind::HilbertSchmidt ? hs_norm_sq(residual) : trace_norm(residual);
}

Vec3 from_angles(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

// Point i of an n-point Fibonacci lattice on the unit sphere.
Vec3 fibonacci_point(int i, int n) {
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - (2.0 * i + 1.0) / n;
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = golden_angle * i;
  return {rho * std::cos(phi), rho * std::sin(phi), z};
}

struct Candidate {
  double value;
  Vec3 n;
};

// Larger value wins; exact ties go to the lexicographically smaller direction.
bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.n < b.n;
}

template <class F>
double golden_maximize(F f, double lo, double hi, double resolution, double& best_value) {
  constexpr double kRatio = 0.61803398874989484820;
  double c = hi - kRatio * (hi - lo);
  double d = lo + kRatio * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > resolution) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kRatio * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kRatio * (hi - lo);
      fd = f(d);
    }
  }
  if (fc > fd) {
    best_value = fc;
    return c;
  }
  best_value = fd;
  return d;
}

Candidate refine(const Mat4& rho, NormKind norm, Candidate start, int grid_points,
                 double resolution) {
  double theta = std::acos(std::clamp(start.n[2], -1.0, 1.0));
  double phi = std::atan2(start.n[1], start.n[0]);
  Candidate best = start;
  double width = 2.0 * std::sqrt(4.0 * std::numbers::pi / grid_points);

  for (int round = 0; round < 8; ++round) {
    const double before = best.value;

    double value = 0.0;
    const double t = golden_maximize(
        [&](double th) { return disturbance_raw(rho, from_angles(th, phi), norm); },
        theta - width, theta + width, resolution, value);
    if (value > best.value) {
      theta = t;
      best = {value, from_angles(theta, phi)};
    }

    const double phi_width = std::min(std::numbers::pi, width / std::max(std::abs(std::sin(theta)), 1e-3));
    const double p = golden_maximize(
        [&](double ph) { return disturbance_raw(rho, from_angles(theta, ph), norm); },
        phi - phi_width, phi + phi_width, resolution, value);
    if (value > best.value) {
      phi = p;
      best = {value, from_angles(theta, phi)};
    }

    if (best.value - before <= 1e-15 * std::max(1.0, best.value)) break;
    width *= 0.5;
  }
  return best;
}

template <bool Parallel>
MinSearchResult search(const DensityMatrix4& rho, NormKind norm, const SphereSearchOptions& opts) {
  const auto admissible = locally_invariant_directions(rho, opts.x_tol);
  if (const auto* fixed = std::get_if<FixedDirection>(&admissible)) {
    return {disturbance(rho, fixed->direction, norm), fixed->direction};
  }
  if (opts.grid_points < 1) throw Error(ErrorKind::InvalidParams, "grid_points must be positive");

  const Mat4& m = rho.matrix();
  const int n = opts.grid_points;
  std::vector<double> values(static_cast<std::size_t>(n));
  if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) values[i] = disturbance_raw(m, fibonacci_point(i, n), norm);
  } else {
    for (int i = 0; i < n; ++i) values[i] = disturbance_raw(m, fibonacci_point(i, n), norm);
  }

  Candidate best{values[0], fibonacci_point(0, n)};
  for (int i = 1; i < n; ++i) {
    const Candidate c{values[i], fibonacci_point(i, n)};
    if (better(c, best)) best = c;
  }
  best = refine(m, norm, best, n, opts.angular_resolution);
  return {best.value, MeasurementDirection(best.n)};
}

RealMat3 gram_rows(const RealMat3& t) { return t * t.transpose(); }

Mat3 to_complex(const RealMat3& r) {
  Mat3 m;
  for (std::size_t i = 0; i < 9; ++i) m.data[i] = r.data[i];
  return m;
}

}  // namespace

DensityMatrix4 post_measurement(const DensityMatrix4& rho, const MeasurementDirection& d) {
  return DensityMatrix4::from_matrix(post_measure_matrix(rho.matrix(), d.n()));
}

AdmissibleDirections locally_invariant_directions(const DensityMatrix4& rho, double x_tol) {
  const FanoForm f = fano_decompose(rho);
  if (norm(f.x) > x_tol) return FixedDirection{MeasurementDirection(f.x)};
  return AllDirections{};
}

double disturbance(const DensityMatrix4& rho, const MeasurementDirection& d, NormKind norm) {
  return disturbance_raw(rho.matrix(), d.n(), norm);
}

MinSearchResult min_bruteforce(const DensityMatrix4& rho, NormKind norm,
                               const SphereSearchOptions& opts) {
  return search<true>(rho, norm, opts);
}

MinSearchResult min_bruteforce_serial(const DensityMatrix4& rho, NormKind norm,
                                      const SphereSearchOptions& opts) {
  return search<false>(rho, norm, opts);
}

double concurrence(const DensityMatrix4& rho) {
  const Mat4 yy = kron(pauli::y(), pauli::y());
  const Mat4 flipped = yy * rho.matrix().conjugate() * yy;
  const Mat4 root = mat_sqrt_psd(rho.matrix());
  const auto eig = herm_eig(hermitian_part(root * flipped * root));
  const double floor = tol::kSpectralFloor * std::max(eig.values[3], 0.0);
  std::array<double, 4> eps;
  for (std::size_t k = 0; k < 4; ++k) {
    const double l = eig.values[3 - k];
    eps[k] = l > floor ? std::sqrt(l) : 0.0;
  }
  return std::max(0.0, eps[0] - eps[1] - eps[2] - eps[3]);
}

double hs_min(const DensityMatrix4& rho, MeasureMode mode, double x_tol) {
  const FanoForm f = fano_decompose(rho);
  const RealMat3 ttt = gram_rows(f.t);
  const double x_norm = norm(f.x);
  double raw;
  if (x_norm > x_tol) {
    const Vec3 tx = ttt * f.x;
    raw = ttt.trace() - dot(f.x, tx) / (x_norm * x_norm);
  } else {
    raw = ttt.trace() - herm_eig(to_complex(ttt)).values[0];
  }
  if (mode == MeasureMode::PaperRaw) return raw;
  return std::max(0.0, 0.25 * raw);
}

double trace_min(const DensityMatrix4& rho, MeasureMode mode, double x_tol) {
  const FanoForm f = fano_decompose(rho);
  const double x_norm = norm(f.x);

  if (mode == MeasureMode::Faithful) {
    if (x_norm > x_tol) return disturbance(rho, MeasurementDirection(f.x), NormKind::Trace);
    const CanonicalForm canon = canonicalize(f);
    return std::max({std::abs(canon.c[0]), std::abs(canon.c[1]), std::abs(canon.c[2])});
  }

  const Vec3 c{f.t(0, 0), f.t(1, 1), f.t(2, 2)};
  if (x_norm <= x_tol) return std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2])});

  const double c_norm2 = dot(c, c);
  double sum_cx = 0.0;
  double beta = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    const std::size_t k = (i + 2) % 3;
    sum_cx += c[i] * c[i] * f.x[i] * f.x[i];
    beta += f.x[i] * f.x[i] * c[j] * c[j] * c[k] * c[k];
  }
  const double alpha = c_norm2 * x_norm * x_norm - sum_cx;
  const double root_beta = std::sqrt(std::max(beta, 0.0));
  const double chi_plus = alpha + 2.0 * root_beta * x_norm;
  const double chi_minus = alpha - 2.0 * root_beta * x_norm;
  return (std::sqrt(std::max(chi_plus, 0.0)) + std::sqrt(std::max(chi_minus, 0.0))) / (2.0 * x_norm);
}

double bell_max(const DensityMatrix4& rho, MeasureMode mode) {
  const FanoForm f = fano_decompose(rho);
  const auto u = herm_eig(to_complex(f.t.transpose() * f.t)).values;
  const double top_two = u[2] + u[1];
  if (mode == MeasureMode::PaperRaw) return std::numbers::sqrt2 * top_two;
  return 2.0 * std::sqrt(std::max(top_two, 0.0));
}

MeasureReport measure_all(const DensityMatrix4& rho, MeasureMode mode) {
  MeasureReport report;
  report.mode = mode;
  report.concurrence = concurrence(rho);
  report.hs_min = hs_min(rho, mode);
  report.trace_min = trace_min(rho, mode);
  report.bell = bell_max(rho, mode);
  const auto admissible = locally_invariant_directions(rho);
  if (const auto* fixed = std::get_if<FixedDirection>(&admissible))
    report.argmax_direction = fixed->direction;
  return report;
}

}  // namespace qnh
