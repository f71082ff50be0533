#include "qnh/states.hpp"

#include <cmath>
#include <sstream>

#include "qnh/dynamics.hpp"
#include "qnh/error.hpp"
#include "qnh/tolerances.hpp"

namespace qnh {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_coefficients(Complex a, Complex b) {
  const double n = std::norm(a) + std::norm(b);
  if (!std::isfinite(n) || std::abs(n - 1.0) > tol::kUnitCoefficients)
    throw Error(ErrorKind::NormalizationError, "|a|^2 + |b|^2 = " + std::to_string(n));
}

void check_mixing(double r) {
  if (!std::isfinite(r) || r < 0.0 || r > 1.0)
    throw Error(ErrorKind::PurityOutOfRange, "r = " + std::to_string(r) + " outside [0, 1]");
}

Mat4 werner(const std::array<Complex, 4>& bell, double r) {
  Mat4 m = Mat4::identity() * ((1.0 - r) / 4.0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) += r * bell[i] * std::conj(bell[j]);
  return m;
}

// Fills the lower triangle from the upper one and divides by the trace.
DensityMatrix4 finish(Mat4 m) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) m(j, i) = std::conj(m(i, j));
  m *= 1.0 / m.trace().real();
  return DensityMatrix4::from_matrix(m);
}

constexpr Complex kI{0.0, 1.0};

}  // namespace

std::string describe(const StateFamily& f) {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const PurePhi& s) { os << "phi(a=" << s.a << ", b=" << s.b << ")"; },
                 [&](const PurePsi& s) { os << "psi(a=" << s.a << ", b=" << s.b << ")"; },
                 [&](const MixedPhi& s) { os << "mixed-phi(r=" << s.r << ")"; },
                 [&](const MixedPsi& s) { os << "mixed-psi(r=" << s.r << ")"; },
             },
             f);
  return os.str();
}

void validate(const StateFamily& f) {
  std::visit(Overloaded{
                 [](const PurePhi& s) { check_coefficients(s.a, s.b); },
                 [](const PurePsi& s) { check_coefficients(s.a, s.b); },
                 [](const MixedPhi& s) { check_mixing(s.r); },
                 [](const MixedPsi& s) { check_mixing(s.r); },
             },
             f);
}

DensityMatrix4 make_initial(const StateFamily& f) {
  validate(f);
  return std::visit(
      Overloaded{
          [](const PurePhi& s) { return DensityMatrix4::from_ket({s.a, 0.0, 0.0, s.b}); },
          [](const PurePsi& s) { return DensityMatrix4::from_ket({0.0, s.a, s.b, 0.0}); },
          [](const MixedPhi& s) {
            return DensityMatrix4::from_matrix(werner({kInvSqrt2, 0.0, 0.0, kInvSqrt2}, s.r));
          },
          [](const MixedPsi& s) {
            return DensityMatrix4::from_matrix(werner({0.0, kInvSqrt2, kInvSqrt2, 0.0}, s.r));
          },
      },
      f);
}

DensityMatrix4 closed_phi(double a, double b, double gamma_tilde, double tau) {
  check_coefficients(a, b);
  const HamiltonianParams p(gamma_tilde, tau);
  const auto [c, s] = kernel_cs(p.gamma_tilde(), p.tau());
  const double g = p.gamma_tilde();
  Mat4 m;
  m(0, 0) = a * a * (c - g * s) * (c - g * s);
  m(1, 1) = b * b * s * s;
  m(2, 2) = a * a * s * s;
  m(3, 3) = b * b * (c + g * s) * (c + g * s);
  m(0, 1) = kI * a * b * s * (g * s - c);
  m(0, 2) = kI * a * a * s * (g * s - c);
  m(0, 3) = a * b * (c * c - g * g * s * s);
  m(1, 3) = kI * b * b * s * (g * s + c);
  m(1, 2) = a * b * s * s;
  m(2, 3) = kI * a * b * s * (g * s + c);
  return finish(m);
}

DensityMatrix4 closed_psi(double a, double b, double gamma_tilde, double tau) {
  check_coefficients(a, b);
  const HamiltonianParams p(gamma_tilde, tau);
  const auto [c, s] = kernel_cs(p.gamma_tilde(), p.tau());
  const double g = p.gamma_tilde();
  Mat4 m;
  m(0, 0) = b * b * s * s;
  m(1, 1) = a * a * (c - g * s) * (c - g * s);
  m(2, 2) = b * b * (c + g * s) * (c + g * s);
  m(3, 3) = a * a * s * s;
  m(0, 1) = kI * a * b * s * (c - g * s);
  m(0, 2) = kI * b * b * s * (g * s + c);
  m(1, 2) = a * b * (c * c - g * g * s * s);
  m(1, 3) = kI * a * a * s * (g * s - c);
  m(0, 3) = a * b * s * s;
  m(2, 3) = -kI * a * b * s * (g * s + c);
  return finish(m);
}

DensityMatrix4 closed_mixed_phi(double r, double gamma_tilde, double tau) {
  check_mixing(r);
  const HamiltonianParams p(gamma_tilde, tau);
  const auto [c, s] = kernel_cs(p.gamma_tilde(), p.tau());
  const double g = p.gamma_tilde();
  const double cross = (1.0 + g * g + r * (g * g - 1.0)) * s * s;
  Mat4 m;
  m(0, 0) = ((1.0 + r) * c * c + cross - 2.0 * (1.0 + r) * g * s * c) / 4.0;
  m(1, 1) = ((1.0 + r) * s * s + (1.0 - r) * (c - g * s) * (c - g * s)) / 4.0;
  m(2, 2) = ((1.0 + r) * s * s + (1.0 - r) * (c + g * s) * (c + g * s)) / 4.0;
  m(3, 3) = ((1.0 + r) * c * c + cross + 2.0 * (1.0 + r) * g * s * c) / 4.0;
  m(0, 1) = kI * r * s * (g * s - c) / 2.0;
  m(0, 2) = kI * s * (g * s - r * c) / 2.0;
  m(0, 3) = r * (c * c - g * g * s * s) / 2.0;
  m(1, 2) = r * s * s / 2.0;
  m(1, 3) = kI * s * (g * s + r * c) / 2.0;
  m(2, 3) = kI * r * s * (g * s + c) / 2.0;
  return finish(m);
}

DensityMatrix4 closed_mixed_psi(double r, double gamma_tilde, double tau) {
  check_mixing(r);
  const HamiltonianParams p(gamma_tilde, tau);
  const auto [c, s] = kernel_cs(p.gamma_tilde(), p.tau());
  const double g = p.gamma_tilde();
  const double cross = (1.0 + g * g + r * (g * g - 1.0)) * s * s;
  Mat4 m;
  m(0, 0) = ((1.0 + r) * s * s + (1.0 - r) * (c - g * s) * (c - g * s)) / 4.0;
  m(1, 1) = ((1.0 + r) * c * c + cross - 2.0 * (1.0 + r) * g * s * c) / 4.0;
  m(2, 2) = ((1.0 + r) * c * c + cross + 2.0 * (1.0 + r) * g * s * c) / 4.0;
  m(3, 3) = ((1.0 + r) * s * s + (1.0 - r) * (c + g * s) * (c + g * s)) / 4.0;
  m(0, 1) = kI * r * s * (c - g * s) / 2.0;
  m(0, 2) = kI * s * (g * s + r * c) / 2.0;
  m(0, 3) = r * s * s / 2.0;
  m(1, 2) = r * (c * c - g * g * s * s) / 2.0;
  m(1, 3) = kI * s * (g * s - r * c) / 2.0;
  m(2, 3) = -kI * r * s * (g * s + c) / 2.0;
  return finish(m);
}

DensityMatrix4 closed_form(const StateFamily& f, double gamma_tilde, double tau) {
  auto real_only = [](Complex a, Complex b) {
    if (a.imag() != 0.0 || b.imag() != 0.0)
      throw Error(ErrorKind::InvalidParams, "closed forms take real coefficients");
  };
  return std::visit(Overloaded{
                        [&](const PurePhi& s) {
                          real_only(s.a, s.b);
                          return closed_phi(s.a.real(), s.b.real(), gamma_tilde, tau);
                        },
                        [&](const PurePsi& s) {
                          real_only(s.a, s.b);
                          return closed_psi(s.a.real(), s.b.real(), gamma_tilde, tau);
                        },
                        [&](const MixedPhi& s) { return closed_mixed_phi(s.r, gamma_tilde, tau); },
                        [&](const MixedPsi& s) { return closed_mixed_psi(s.r, gamma_tilde, tau); },
                    },
                    f);
}

}  // namespace qnh
