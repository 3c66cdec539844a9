#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bosegas/physical.hpp"

using namespace bosegas;

namespace {

constexpr double kRb87Mass = 1.443e-25;

/// Tensor-product trapezoid rule over a cube of half-width 12 sigma.
double integrate_propagator(double beta, const PhysicalParams& p) {
  const double sigma = std::sqrt(si::hbar * si::hbar * beta / p.mass());
  const int points = 97;
  const double half = 12.0 * sigma;
  const double h = 2.0 * half / (points - 1);
  double sum = 0.0;
  for (int i = 0; i < points; ++i) {
    for (int j = 0; j < points; ++j) {
      for (int k = 0; k < points; ++k) {
        sum += free_propagator({-half + i * h, -half + j * h, -half + k * h}, beta, p);
      }
    }
  }
  return sum * h * h * h;
}

}  // namespace

TEST_CASE("SI constants") {
  CHECK(si::planck == 6.62607015e-34);
  CHECK(si::boltzmann == 1.380649e-23);
  CHECK(si::hbar == doctest::Approx(1.054571817e-34).epsilon(1e-9));
}

TEST_CASE("PhysicalParams rejects nonpositive inputs") {
  CHECK_THROWS_AS(PhysicalParams(0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(PhysicalParams(1.0, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(PhysicalParams(1.0, 1.0, std::nan("")), DomainError);
}

TEST_CASE("thermal wavelength") {
  SUBCASE("unit case") {
    // 2 pi hbar^2 beta / m = 1 at T = 1 K.
    const double mass = 2.0 * std::numbers::pi * si::hbar * si::hbar / si::boltzmann;
    CHECK(thermal_wavelength(PhysicalParams(mass, 1.0, 1.0)) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("rubidium-87 at 100 nK") {
    const double lambda = thermal_wavelength(PhysicalParams(kRb87Mass, 1e-7, 1e-15));
    CHECK(lambda == doctest::Approx(5.9223120702842621e-7).epsilon(1e-12));
    CHECK(lambda == doctest::Approx(5.9e-7).epsilon(0.01));
  }
  SUBCASE("doubling T shrinks Lambda by sqrt 2") {
    const double a = thermal_wavelength(PhysicalParams(kRb87Mass, 1e-7, 1.0));
    const double b = thermal_wavelength(PhysicalParams(kRb87Mass, 2e-7, 1.0));
    CHECK(a / b == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  }
}

TEST_CASE("Q1 from physical parameters") {
  const double lambda = thermal_wavelength(PhysicalParams(kRb87Mass, 1e-7, 1.0));
  const double cube = lambda * lambda * lambda;
  CHECK(q1_from_physical(PhysicalParams(kRb87Mass, 1e-7, cube)).value() ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(q1_from_physical(PhysicalParams(kRb87Mass, 1e-7, 2.0 * cube)).value() ==
        doctest::Approx(2.0).epsilon(1e-14));
  const double q = q1_from_physical(PhysicalParams(kRb87Mass, 1e-7, 1e-15)).value();
  CHECK(q == doctest::Approx(4814.2222407058709).epsilon(1e-11));
}

TEST_CASE("free propagator") {
  const PhysicalParams p(kRb87Mass, 1e-7, 1e-15);
  const double beta = p.beta();
  const double lambda = thermal_wavelength(p);
  const double inv_cube = 1.0 / (lambda * lambda * lambda);

  CHECK(free_propagator({0, 0, 0}, beta, p) == doctest::Approx(inv_cube).epsilon(1e-12));

  const double r = std::sqrt(2.0 * si::hbar * si::hbar * beta / p.mass());
  CHECK(free_propagator({0, r, 0}, beta, p) ==
        doctest::Approx(std::exp(-1.0) * inv_cube).epsilon(1e-12));
  CHECK(free_propagator({r / std::sqrt(3.0), r / std::sqrt(3.0), r / std::sqrt(3.0)}, beta, p) ==
        doctest::Approx(std::exp(-1.0) * inv_cube).epsilon(1e-12));

  CHECK_THROWS_AS(free_propagator({0, 0, 0}, 0.0, p), DomainError);
}

TEST_CASE("free propagator integrates to one") {
  const PhysicalParams rb(kRb87Mass, 1e-7, 1.0);
  const PhysicalParams helium(6.6464731e-27, 2.0, 1.0);
  const PhysicalParams electron(9.1093837e-31, 300.0, 1.0);
  CHECK(std::abs(integrate_propagator(rb.beta(), rb) - 1.0) < 1e-9);
  CHECK(std::abs(integrate_propagator(helium.beta(), helium) - 1.0) < 1e-9);
  CHECK(std::abs(integrate_propagator(0.5 * electron.beta(), electron) - 1.0) < 1e-9);
}

TEST_CASE("perfect-condensate entropy") {
  CHECK(bec_condensate_entropy(1, Q1Value(7.0)).s_c == doctest::Approx(std::log(7.0)).epsilon(1e-15));
  CHECK(bec_condensate_entropy(100, Q1Value(1000.0)).s_c == 0.0);
  CHECK(bec_condensate_entropy(10000, Q1Value(1e6)).s_c == 0.0);
  for (int n : {2, 10, 37, 100, 10000}) {
    CHECK(bec_condensate_entropy(n, Q1Value(std::pow(n, 1.5))).s_c == 0.0);
  }
  const CondensateEntropy e = bec_condensate_entropy(8, Q1Value(5.0));
  CHECK(e.s_c == doctest::Approx(-1.5 * std::log(8.0) + std::log(5.0)).epsilon(1e-14));
  CHECK(e.partition_value == doctest::Approx(5.0 / std::pow(8.0, 1.5)).epsilon(1e-15));
  CHECK_THROWS_AS(bec_condensate_entropy(0, Q1Value(1.0)), DomainError);
}
