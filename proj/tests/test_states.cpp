#include <doctest.h>

#include "qnh/dynamics.hpp"
#include "qnh/error.hpp"
#include "qnh/states.hpp"
#include "test_support.hpp"

using namespace qnh;
using qnh::test::kInvSqrt2;
using qnh::test::near;

namespace {

const double kInvSqrt3 = 1.0 / std::sqrt(3.0);
const double kSqrtTwoThirds = std::sqrt(2.0 / 3.0);

double engine_gap(const StateFamily& f, double g, double tau) {
  const auto engine = evolve(make_initial(f), HamiltonianParams(g, tau)).rho;
  return max_abs_diff(engine.matrix(), closed_form(f, g, tau).matrix());
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::IoError;
}

}  // namespace

TEST_CASE("make_initial: reference states") {
  CHECK(max_abs_diff(make_initial(PurePhi{kInvSqrt2, kInvSqrt2}).matrix(), test::phi_plus().matrix()) <= 1e-15);
  CHECK(max_abs_diff(make_initial(PurePsi{kInvSqrt2, kInvSqrt2}).matrix(), test::psi_plus().matrix()) <= 1e-15);
  CHECK(max_abs_diff(make_initial(MixedPhi{0.0}).matrix(), Mat4::identity() * 0.25) <= 1e-15);
  CHECK(max_abs_diff(make_initial(MixedPhi{1.0}).matrix(), test::phi_plus().matrix()) <= 1e-15);
  CHECK(max_abs_diff(make_initial(MixedPhi{0.3}).matrix(), test::werner_phi(0.3).matrix()) <= 1e-15);
}

TEST_CASE("make_initial: complex coefficients") {
  const Complex a(0.6, 0.0), b(0.0, 0.8);
  const auto rho = make_initial(PurePhi{a, b});
  CHECK(near(rho(0, 3).imag(), -0.48, 1e-15));
  CHECK(near(rho(3, 3).real(), 0.64, 1e-15));
}

TEST_CASE("make_initial: invalid families") {
  CHECK(kind_of([] { make_initial(PurePhi{1.0, 1.0}); }) == ErrorKind::NormalizationError);
  CHECK(kind_of([] { make_initial(PurePsi{0.0, 0.0}); }) == ErrorKind::NormalizationError);
  CHECK(kind_of([] { make_initial(MixedPhi{1.5}); }) == ErrorKind::PurityOutOfRange);
  CHECK(kind_of([] { make_initial(MixedPsi{-0.1}); }) == ErrorKind::PurityOutOfRange);
}

TEST_CASE("closed forms at tau = 0") {
  CHECK(max_abs_diff(closed_phi(kInvSqrt3, kSqrtTwoThirds, 0.7, 0.0).matrix(),
                     make_initial(PurePhi{kInvSqrt3, kSqrtTwoThirds}).matrix()) <= 1e-15);
  CHECK(max_abs_diff(closed_psi(kInvSqrt2, kInvSqrt2, 0.7, 0.0).matrix(), test::psi_plus().matrix()) <= 1e-15);
  CHECK(max_abs_diff(closed_mixed_phi(0.0, 1.5, 0.0).matrix(), Mat4::identity() * 0.25) <= 1e-15);
  CHECK(max_abs_diff(closed_mixed_psi(0.5, 1.5, 0.0).matrix(), make_initial(MixedPsi{0.5}).matrix()) <= 1e-15);
}

TEST_CASE("closed forms match the generic engine at the listed points") {
  CHECK(engine_gap(PurePhi{kInvSqrt2, kInvSqrt2}, 0.5, 2.0) <= 1e-10);
  CHECK(engine_gap(PurePhi{kInvSqrt3, kSqrtTwoThirds}, 1.5, 1.0) <= 1e-10);
  CHECK(engine_gap(PurePsi{kInvSqrt2, kInvSqrt2}, 0.25, 4.0) <= 1e-10);
  CHECK(engine_gap(PurePsi{kInvSqrt3, kSqrtTwoThirds}, 1.5, 3.0) <= 1e-10);
  CHECK(engine_gap(MixedPhi{0.5}, 1.5, 2.0) <= 1e-10);
  CHECK(engine_gap(MixedPsi{0.5}, 0.5, 1.0) <= 1e-10);
}

TEST_CASE("mixed closed forms reduce to the pure ones at r = 1") {
  for (double g : {0.25, 1.0, 1.5})
    for (double tau : {0.5, 2.0, 7.0}) {
      CHECK(max_abs_diff(closed_mixed_phi(1.0, g, tau).matrix(),
                         closed_phi(kInvSqrt2, kInvSqrt2, g, tau).matrix()) <= 1e-10);
      CHECK(max_abs_diff(closed_mixed_psi(1.0, g, tau).matrix(),
                         closed_psi(kInvSqrt2, kInvSqrt2, g, tau).matrix()) <= 1e-10);
    }
}

TEST_CASE("closed forms match the engine over the full grid and are valid states") {
  const std::array<StateFamily, 8> families{
      PurePhi{kInvSqrt2, kInvSqrt2}, PurePhi{kInvSqrt3, kSqrtTwoThirds}, PurePsi{kInvSqrt2, kInvSqrt2},
      PurePsi{kInvSqrt3, kSqrtTwoThirds}, MixedPhi{0.5}, MixedPhi{0.2}, MixedPsi{0.5}, MixedPsi{0.9}};
  double worst = 0.0;
  for (const auto& f : families)
    for (double g : {0.0, 0.1, 0.25, 0.5, 1.0, 1.5, 3.0})
      for (int k = 0; k <= 100; ++k) {
        const double tau = 0.1 * k;
        const auto closed = closed_form(f, g, tau);
        worst = std::max(worst, engine_gap(f, g, tau));
        REQUIRE(hermiticity_defect(closed.matrix()) <= 1e-10);
        REQUIRE(near(closed.matrix().trace().real(), 1.0, 1e-10));
        REQUIRE(herm_eig(closed.matrix()).values[0] >= -1e-10);
      }
  CHECK(worst <= 1e-10);
}

TEST_CASE("closed forms are continuous across the exceptional point") {
  const std::array<StateFamily, 4> families{PurePhi{kInvSqrt3, kSqrtTwoThirds}, PurePsi{kInvSqrt2, kInvSqrt2},
                                            MixedPhi{0.5}, MixedPsi{0.5}};
  for (const auto& f : families)
    for (double tau = 0.0; tau <= 10.0; tau += 0.5) {
      const Mat4 at = closed_form(f, 1.0, tau).matrix();
      for (double g : {1.0 - 1e-6, 1.0 + 1e-6}) CHECK(max_abs_diff(closed_form(f, g, tau).matrix(), at) <= 1e-4);
    }
}

TEST_CASE("closed_form rejects complex pure coefficients") {
  CHECK_THROWS_AS(closed_form(PurePhi{Complex(0.6, 0.0), Complex(0.0, 0.8)}, 0.5, 1.0), Error);
}

TEST_CASE("describe names the family") {
  CHECK(describe(MixedPsi{0.5}) == "mixed-psi(r=0.5)");
}
