#include "qnh/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "qnh/dynamics.hpp"
#include "qnh/measures.hpp"
#include "qnh/states.hpp"

namespace qnh::oracle {

Mat2 expm(const Mat2& a) {
  double norm1 = 0.0;
  for (std::size_t c = 0; c < 2; ++c) norm1 = std::max(norm1, std::abs(a(0, c)) + std::abs(a(1, c)));
  int squarings = 0;
  while (norm1 / std::ldexp(1.0, squarings) > 0.5) ++squarings;
  const Mat2 scaled = a * std::ldexp(1.0, -squarings);

  Mat2 result = Mat2::identity();
  Mat2 term = Mat2::identity();
  for (int k = 1; k <= 12; ++k) {
    term = term * scaled * (1.0 / k);
    result += term;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

Mat2 propagator_expm(double gamma_tilde, double tau) {
  // -i H t = tau (-gamma_tilde sigma_z + i sigma_x)
  const Mat2 gen = pauli::z() * (-gamma_tilde * tau) + pauli::x() * Complex(0.0, tau);
  return expm(gen);
}

Mat2 inverse(const Mat2& m) {
  const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Mat2 inv;
  inv(0, 0) = m(1, 1) / det;
  inv(1, 1) = m(0, 0) / det;
  inv(0, 1) = -m(0, 1) / det;
  inv(1, 0) = -m(1, 0) / det;
  return inv;
}

Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double re = g(rng);
  const double im = g(rng);
  return {re, im};
}

Mat2 random_unitary2(Rng& rng) {
  // Gram-Schmidt on a Ginibre matrix.
  std::array<Complex, 2> c0{gaussian_complex(rng), gaussian_complex(rng)};
  std::array<Complex, 2> c1{gaussian_complex(rng), gaussian_complex(rng)};
  const double n0 = std::sqrt(std::norm(c0[0]) + std::norm(c0[1]));
  c0 = {c0[0] / n0, c0[1] / n0};
  const Complex proj = std::conj(c0[0]) * c1[0] + std::conj(c0[1]) * c1[1];
  c1 = {c1[0] - proj * c0[0], c1[1] - proj * c0[1]};
  const double n1 = std::sqrt(std::norm(c1[0]) + std::norm(c1[1]));
  c1 = {c1[0] / n1, c1[1] / n1};
  Mat2 u;
  u(0, 0) = c0[0];
  u(1, 0) = c0[1];
  u(0, 1) = c1[0];
  u(1, 1) = c1[1];
  return u;
}

DensityMatrix4 random_density(Rng& rng, int rank) {
  rank = std::clamp(rank, 1, 4);
  Mat4 m;
  for (int k = 0; k < rank; ++k) {
    std::array<Complex, 4> g;
    for (auto& z : g) z = gaussian_complex(rng);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) += g[r] * std::conj(g[c]);
  }
  m *= 1.0 / m.trace().real();
  return DensityMatrix4::from_matrix(hermitian_part(m));
}

DensityMatrix4 random_x_zero_state(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FanoForm f;
  for (auto& v : f.y) v = u(rng);
  for (auto& v : f.t.data) v = u(rng);
  // Shrink (y, T) toward the maximally mixed state until positive.
  for (double scale = 1.0;; scale *= 0.9) {
    FanoForm g = f;
    for (auto& v : g.y) v *= scale;
    for (auto& v : g.t.data) v *= scale;
    const Mat4 m = fano_compose(g);
    if (herm_eig(m).values[0] >= 1e-9) return DensityMatrix4::from_matrix(m);
  }
}

DensityMatrix4 local_rotate(const DensityMatrix4& rho, const Mat2& ua, const Mat2& ub) {
  const Mat4 u = kron(ua, ub);
  return DensityMatrix4::from_matrix(hermitian_part(u * rho.matrix() * u.adjoint()));
}

double pure_concurrence(const std::array<Complex, 4>& psi) {
  return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

double x_state_concurrence(const Mat4& rho) {
  const double a = std::abs(rho(0, 3)) - std::sqrt(rho(1, 1).real() * rho(2, 2).real());
  const double b = std::abs(rho(1, 2)) - std::sqrt(rho(0, 0).real() * rho(3, 3).real());
  return 2.0 * std::max({0.0, a, b});
}

bool run_selftest(std::ostream& out) {
  bool all = true;
  auto report = [&](const char* name, double worst, double tolerance) {
    const bool ok = worst <= tolerance;
    all = all && ok;
    out << (ok ? "PASS " : "FAIL ") << name << "  max deviation " << worst << " (tolerance "
        << tolerance << ")\n";
  };

  {
    double worst = 0.0;
    for (double g : {0.0, 0.25, 0.5, 1.0, 1.5, 3.0})
      for (double tau : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        const Mat2 u = propagator(HamiltonianParams(g, tau));
        const Mat2 ref = propagator_expm(g, tau);
        double scale = 0.0;
        for (const auto& z : ref.data) scale = std::max(scale, std::abs(z));
        worst = std::max(worst, max_abs_diff(u, ref) / scale);
      }
    report("propagator vs scaling-and-squaring exponential (relative)", worst, 1e-11);
  }

  {
    const std::array<StateFamily, 4> families{PurePhi{0.70710678118654752440, 0.70710678118654752440},
                                              PurePsi{0.57735026918962576451, 0.81649658092772603273},
                                              MixedPhi{0.5}, MixedPsi{0.5}};
    double worst = 0.0;
    for (const auto& fam : families) {
      const auto rho0 = make_initial(fam);
      for (double g : {0.0, 0.1, 0.25, 0.5, 1.0, 1.5, 3.0})
        for (int k = 0; k <= 100; ++k) {
          const double tau = 0.1 * k;
          const auto engine = evolve(rho0, HamiltonianParams(g, tau)).rho;
          worst = std::max(worst, max_abs_diff(engine.matrix(), closed_form(fam, g, tau).matrix()));
        }
    }
    report("closed-form states vs generic evolution", worst, 1e-10);
  }

  {
    Rng rng(20240611);
    double worst_fixed = 0.0;
    double worst_free = 0.0;
    for (int i = 0; i < 40; ++i) {
      const bool x_zero = i % 4 == 0;
      const auto rho = x_zero ? random_x_zero_state(rng) : random_density(rng, 1 + i % 4);
      const double hs = std::abs(hs_min(rho, MeasureMode::Faithful) -
                                 min_bruteforce(rho, NormKind::HilbertSchmidt).value);
      const double tr = std::abs(trace_min(rho, MeasureMode::Faithful) -
                                 min_bruteforce(rho, NormKind::Trace).value);
      double& worst = x_zero ? worst_free : worst_fixed;
      worst = std::max({worst, hs, tr});
    }
    report("MIN closed forms vs sphere search (x != 0)", worst_fixed, 1e-6);
    report("MIN closed forms vs sphere search (x = 0)", worst_free, 1e-4);
  }
  return all;
}

}  // namespace qnh::oracle
