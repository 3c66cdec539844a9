#include <cmath>
#include <string>

#include "bosegas/parallel.hpp"
#include "bosegas/thermo.hpp"

namespace bosegas {

double specific_heat(const ZEval& z) {
  const double q = z.q1.value();
  const double fluctuation = z.ratio2 - z.ratio1 * z.ratio1;
  const double c = (2.25 * q * q * fluctuation + 3.75 * q * z.ratio1) / z.n;
  if (!std::isfinite(c)) {
    throw NumericError("specific heat is not finite at n = " + std::to_string(z.n) +
                       ", q1 = " + std::to_string(q));
  }
  return c;
}

double specific_heat(const Evaluator& evaluator, Q1Value q1) {
  return specific_heat(evaluator(q1));
}

double specific_heat(int n, Q1Value q1, BackendPolicy policy) {
  return specific_heat(Evaluator(n, policy), q1);
}

BetaOracleResult specific_heat_beta_oracle(const Evaluator& evaluator, Q1Value q1,
                                           double rel_step) {
  if (!(rel_step >= 1e-7 && rel_step <= 1e-2)) {
    throw DomainError("beta oracle: rel_step must lie in [1e-7, 1e-2], got " +
                      std::to_string(rel_step));
  }
  // Work at beta = 1 with Q1(beta) = A beta^{-3/2}, A = q1. The derivative at
  // beta = 1 is already scaled by beta^2.
  const double a = q1.value();
  auto log_z = [&](double beta) { return evaluator(Q1Value(a * std::pow(beta, -1.5))).log_z; };

  const double center = log_z(1.0);
  auto second_difference = [&](double h) {
    return (log_z(1.0 + h) - 2.0 * center + log_z(1.0 - h)) / (h * h);
  };

  const double d_full = second_difference(rel_step);
  const double d_half = second_difference(rel_step / 2.0);
  const double d_quarter = second_difference(rel_step / 4.0);
  const double extrapolated = (4.0 * d_half - d_full) / 3.0;

  const double step1 = std::abs(d_half - d_full);
  const double step2 = std::abs(d_quarter - d_half);
  // Halving the step should shrink the change by ~4x. If it does not, and the
  // change is large enough to matter at 1e-6, roundoff has taken over.
  const bool suspicious = step2 >= step1 && step2 > 1e-6 * std::abs(extrapolated);

  return {extrapolated / evaluator.n(), suspicious};
}

BetaOracleResult specific_heat_beta_oracle(int n, Q1Value q1, double rel_step,
                                           BackendPolicy policy) {
  return specific_heat_beta_oracle(Evaluator(n, policy), q1, rel_step);
}

std::vector<double> grid_points(const GridSpec& grid) {
  const double lo = grid.rho_lambda3_min;
  const double hi = grid.rho_lambda3_max;
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo > 0.0)) {
    throw DomainError("grid bounds must be positive and finite");
  }
  if (grid.count < 1) throw DomainError("grid needs at least one point");
  if (grid.count == 1) {
    if (lo != hi) throw DomainError("a single-point grid needs min == max");
    return {lo};
  }
  if (!(lo < hi)) throw DomainError("grid needs min < max when count >= 2");

  std::vector<double> pts(grid.count);
  const double last = grid.count - 1;
  for (int i = 0; i < grid.count; ++i) {
    const double t = i / last;
    pts[i] = grid.spacing == GridSpacing::linear
                 ? lo + (hi - lo) * t
                 : std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * t);
  }
  pts.front() = lo;
  pts.back() = hi;
  return pts;
}

HeatCurve heat_curve(int n, const GridSpec& grid, BackendPolicy policy, unsigned threads) {
  const std::vector<double> rho = grid_points(grid);
  const Evaluator evaluator(n, policy);

  HeatCurve curve{n, std::vector<HeatSample>(rho.size())};
  detail::parallel_for(rho.size(), threads, [&](std::size_t i) {
    const Q1Value q1(n / rho[i]);
    const std::string where =
        "n = " + std::to_string(n) + ", q1 = " + std::to_string(q1.value()) + ": ";
    try {
      const ZEval z = evaluator(q1);
      curve.samples[i] = {q1.value(), rho[i], specific_heat(z), z.backend};
    } catch (const OverflowError& e) {
      throw OverflowError(where + e.what(), e.index());
    } catch (const CapacityError& e) {
      throw CapacityError(where + e.what());
    } catch (const NumericError& e) {
      throw NumericError(where + e.what());
    }
  });
  return curve;
}

}  // namespace bosegas
