#include <cmath>
#include <numbers>
#include <string>

#include "bosegas/physical.hpp"

namespace bosegas {

PhysicalParams::PhysicalParams(double mass_kg, double temperature_k, double volume_m3)
    : mass_(mass_kg), temperature_(temperature_k), volume_(volume_m3) {
  auto check = [](double v, const char* name) {
    if (!(std::isfinite(v) && v > 0.0)) {
      throw DomainError(std::string(name) + " must be positive and finite");
    }
  };
  check(mass_kg, "mass");
  check(temperature_k, "temperature");
  check(volume_m3, "volume");
}

double thermal_wavelength(const PhysicalParams& p) {
  return si::planck /
         std::sqrt(2.0 * std::numbers::pi * p.mass() * si::boltzmann * p.temperature());
}

Q1Value q1_from_physical(const PhysicalParams& p) {
  const double lambda = thermal_wavelength(p);
  return Q1Value(p.volume() / (lambda * lambda * lambda));
}

double free_propagator(const std::array<double, 3>& displacement, double beta_contour,
                       const PhysicalParams& p) {
  if (!(std::isfinite(beta_contour) && beta_contour > 0.0)) {
    throw DomainError("free_propagator: beta must be positive and finite");
  }
  // Gaussian of variance hbar^2 beta / m per axis.
  const double variance = si::hbar * si::hbar * beta_contour / p.mass();
  const double r2 = displacement[0] * displacement[0] + displacement[1] * displacement[1] +
                    displacement[2] * displacement[2];
  const double norm = std::pow(2.0 * std::numbers::pi * variance, -1.5);
  return norm * std::exp(-r2 / (2.0 * variance));
}

CondensateEntropy bec_condensate_entropy(int n, Q1Value q1) {
  if (n < 1) throw DomainError("condensate entropy needs n >= 1");
  const double merged = q1.value() / std::pow(static_cast<double>(n), 1.5);
  return {n, q1.value(), std::log(merged), merged};
}

}  // namespace bosegas
