#pragma once

#include <vector>

#include "bosegas/backends.hpp"

namespace bosegas {

/// Heat capacity per particle C_N / (N k_B) from the Q1-derivative ratios:
///
///   C_N / k_B = 9/4 Q1^2 (Z''/Z - (Z'/Z)^2) + 15/4 Q1 Z'/Z
double specific_heat(const ZEval& z);
double specific_heat(const Evaluator& evaluator, Q1Value q1);
double specific_heat(int n, Q1Value q1, BackendPolicy policy = BackendPolicy::automatic);

struct BetaOracleResult {
  double c_over_nkb;
  /// Set when successive step halvings stop converging, i.e. roundoff
  /// dominates the second difference. The value is still returned.
  bool cancellation_suspected;
};

/// Independent check of specific_heat: beta^2 d^2 ln Z_N / d beta^2 / N by a
/// centered second difference in beta with one Richardson level, holding
/// Q1 beta^{3/2} fixed. `rel_step` must lie in [1e-7, 1e-2].
BetaOracleResult specific_heat_beta_oracle(const Evaluator& evaluator, Q1Value q1,
                                           double rel_step = 1e-4);
BetaOracleResult specific_heat_beta_oracle(int n, Q1Value q1, double rel_step = 1e-4,
                                           BackendPolicy policy = BackendPolicy::automatic);

enum class GridSpacing { linear, log };

/// Grid in rho Lambda^3. count == 1 requires min == max.
struct GridSpec {
  double rho_lambda3_min = 0.5;
  double rho_lambda3_max = 3.5;
  int count = 300;
  GridSpacing spacing = GridSpacing::linear;
};

/// Grid points in ascending rho Lambda^3. Throws DomainError on an invalid spec.
std::vector<double> grid_points(const GridSpec& grid);

struct HeatSample {
  double q1;
  double rho_lambda3;
  double c_over_nkb;
  Backend backend;
};

/// Samples ordered by ascending rho Lambda^3, hence strictly descending q1.
struct HeatCurve {
  int n;
  std::vector<HeatSample> samples;
};

/// `threads` = 0 uses every hardware thread. Output is independent of it.
HeatCurve heat_curve(int n, const GridSpec& grid, BackendPolicy policy = BackendPolicy::automatic,
                     unsigned threads = 1);

struct CriticalSearchConfig {
  double rho_lambda3_min = 0.5;
  double rho_lambda3_max = 3.5;
  int coarse_points = 200;
  double tolerance = 1e-6;  ///< final bracket width in rho Lambda^3
  BackendPolicy policy = BackendPolicy::automatic;
  unsigned threads = 1;
};

struct CriticalPoint {
  int n;
  double rho_lambda3_c;
  double c_max_over_nkb;
  double q1_c;
  double search_tolerance;
};

/// Peak of C_N/(N k_B) over rho Lambda^3: coarse scan, then golden section.
/// Throws DomainError for n < 2 and SearchError if the coarse maximum sits on
/// the bracket edge.
CriticalPoint critical_point(int n, const CriticalSearchConfig& config = {});

}  // namespace bosegas
