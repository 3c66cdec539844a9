#pragma once

#include <array>
#include <numbers>

#include "bosegas/backends.hpp"

namespace bosegas {

/// Exact SI 2019 defining constants.
namespace si {
inline constexpr double planck = 6.62607015e-34;      // J s
inline constexpr double boltzmann = 1.380649e-23;     // J / K
inline constexpr double hbar = planck / (2.0 * std::numbers::pi);
}  // namespace si

/// Particle mass [kg], temperature [K] and box volume [m^3].
class PhysicalParams {
 public:
  /// Throws DomainError unless every value is finite and positive.
  PhysicalParams(double mass_kg, double temperature_k, double volume_m3);

  [[nodiscard]] double mass() const noexcept { return mass_; }
  [[nodiscard]] double temperature() const noexcept { return temperature_; }
  [[nodiscard]] double volume() const noexcept { return volume_; }
  /// 1 / (k_B T) in 1/J.
  [[nodiscard]] double beta() const noexcept { return 1.0 / (si::boltzmann * temperature_); }

 private:
  double mass_;
  double temperature_;
  double volume_;
};

/// Lambda = h / sqrt(2 pi m k_B T), in meters.
double thermal_wavelength(const PhysicalParams& p);

/// Q1 = V / Lambda^3.
Q1Value q1_from_physical(const PhysicalParams& p);

/// Free-particle density matrix after a contour length `beta_contour` [1/J]:
/// (m / 2 pi hbar^2 beta)^{3/2} exp(-m |dr|^2 / 2 hbar^2 beta), in 1/m^3.
/// Only the mass of `p` is used.
double free_propagator(const std::array<double, 3>& displacement, double beta_contour,
                       const PhysicalParams& p);

struct CondensateEntropy {
  int n;
  double q1;
  double s_c;                ///< -3/2 ln N + ln Q1, in units of k_B
  double partition_value;    ///< Q_N for one ring of length N beta: N^{-3/2} Q1
};

/// Configurational entropy of a perfect condensate, all N rings merged into one.
/// The ln N! term is not included.
CondensateEntropy bec_condensate_entropy(int n, Q1Value q1);

}  // namespace bosegas
