#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "bosegas/golden_section.hpp"
#include "bosegas/parallel.hpp"
#include "bosegas/thermo.hpp"

namespace bosegas {

CriticalPoint critical_point(int n, const CriticalSearchConfig& config) {
  if (n < 2) {
    throw DomainError("critical point needs n >= 2: for n = 1 the specific heat is 1.5 at every "
                      "temperature and has no peak");
  }
  if (config.coarse_points < 3) throw DomainError("coarse scan needs at least 3 points");
  if (!(config.tolerance > 0.0)) throw DomainError("search tolerance must be positive");

  const Evaluator evaluator(n, config.policy);
  auto heat_at = [&](double rho) { return specific_heat(evaluator, Q1Value(n / rho)); };

  const std::vector<double> rho = grid_points(
      {config.rho_lambda3_min, config.rho_lambda3_max, config.coarse_points, GridSpacing::linear});
  std::vector<double> heat(rho.size());
  detail::parallel_for(rho.size(), config.threads,
                       [&](std::size_t i) { heat[i] = heat_at(rho[i]); });

  const auto peak = std::max_element(heat.begin(), heat.end());
  const auto i = static_cast<std::size_t>(peak - heat.begin());
  if (i == 0 || i + 1 == heat.size()) {
    throw SearchError("no interior maximum of the specific heat for n = " + std::to_string(n) +
                      " on rho Lambda^3 in [" + std::to_string(config.rho_lambda3_min) + ", " +
                      std::to_string(config.rho_lambda3_max) + "]");
  }

  const GoldenSectionResult best =
      golden_section_maximize(heat_at, rho[i - 1], rho[i + 1], config.tolerance);
  return {n, best.x, best.value, n / best.x, config.tolerance};
}

}  // namespace bosegas
