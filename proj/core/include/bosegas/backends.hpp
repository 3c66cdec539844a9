#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "bosegas/combinatorics.hpp"
#include "bosegas/errors.hpp"

namespace bosegas {

/// Dimensionless single-particle partition function Q1 = V / Lambda^3.
class Q1Value {
 public:
  /// Throws DomainError unless `value` is finite and strictly positive.
  explicit Q1Value(double value);
  [[nodiscard]] double value() const noexcept { return value_; }

 private:
  double value_;
};

enum class Backend { matsubara, landsberg, park_kim };

/// Either let select_backend choose, or force one backend.
enum class BackendPolicy { automatic, matsubara, landsberg, park_kim };

std::string_view to_string(Backend backend);
std::string_view to_string(BackendPolicy policy);
std::optional<BackendPolicy> parse_backend_policy(std::string_view name);

/// ln Z_N together with Z'_N / Z_N and Z''_N / Z_N, primes being derivatives
/// with respect to Q1.
struct ZEval {
  int n;
  Q1Value q1;
  double log_z;
  double ratio1;
  double ratio2;
  Backend backend;
};

/// Factors f_1..f_N with Z_N = prod f_n, and the running sums of their logs.
struct RatioRecursionState {
  std::vector<double> f;           ///< f[i] holds f_{i+1}
  std::vector<double> log_prefix;  ///< log_prefix[i] = sum_{k <= i} ln f_k, log_prefix[0] = 0
};

/// Cycle-type terms of Z_N for one N, stored as (ln(c_j/N!), l_j).
class MatsubaraTable {
 public:
  struct Term {
    double log_coefficient;
    int degree;
  };

  explicit MatsubaraTable(int n, int cap = kDefaultCycleTypeCap);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
  [[nodiscard]] ZEval evaluate(Q1Value q1) const;

 private:
  int n_;
  std::vector<Term> terms_;
};

/// Per-N tables of l^{-3/2}, l^{-5/2} and the pair weights
/// w_t = sum_{a+b=t, a,b>=1} a^{-5/2} b^{-5/2} used by the ratio recursion.
/// Immutable once built; safe to share between threads.
class PowerTables {
 public:
  explicit PowerTables(int n, bool with_pair_weights = true);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] bool has_pair_weights() const noexcept { return !pair_weight_.empty(); }
  [[nodiscard]] const std::vector<double>& inv_pow_3_2() const noexcept { return inv15_; }
  [[nodiscard]] const std::vector<double>& inv_pow_5_2() const noexcept { return inv25_; }
  [[nodiscard]] const std::vector<double>& pair_weights() const noexcept { return pair_weight_; }

 private:
  int n_;
  std::vector<double> inv15_;
  std::vector<double> inv25_;
  std::vector<double> pair_weight_;
};

// Single-shot evaluators. Each builds its own tables.
ZEval eval_matsubara(int n, Q1Value q1, int cap = kDefaultCycleTypeCap);
ZEval eval_landsberg(int n, Q1Value q1);
ZEval eval_park_kim(int n, Q1Value q1);

// Table-reusing variants. `tables.n()` must be at least `n`. n = 0 returns
// Z_0 = 1 with zero ratios.
ZEval landsberg(int n, Q1Value q1, const PowerTables& tables);
ZEval park_kim(int n, Q1Value q1, const PowerTables& tables);
RatioRecursionState park_kim_state(int n, Q1Value q1, const PowerTables& tables);

struct SelectionLimits {
  int matsubara_max_n = 60;
  int landsberg_max_n = 1000;
  int cycle_type_cap = kDefaultCycleTypeCap;
};

/// Upper bound on ln max(Z_N, Z'_N, Z''_N) valid for every N, from
/// sum_N Z_N = exp(zeta(5/2) Q1). The automatic policy picks landsberg only
/// while this stays below ln(LDBL_MAX), the range of its long double arrays.
double landsberg_log_magnitude_bound(Q1Value q1);

/// Throws CapacityError when a forced matsubara request exceeds the cap.
Backend select_backend(int n, Q1Value q1, BackendPolicy policy, const SelectionLimits& limits = {});

/// |a - b| / max(|a|, |b|), or 0 when both are zero.
double relative_deviation(double a, double b);

/// Largest deviation between two evaluations over log_z, ratio1 and ratio2.
/// log_z is compared against max(|a|, |b|, 1) so that a log crossing zero
/// reduces to the relative error of Z itself.
double max_relative_deviation(const ZEval& a, const ZEval& b);

/// Evaluates Z_N at many Q1 for one fixed N, building the tables it needs once.
/// Copies share the immutable tables.
class Evaluator {
 public:
  explicit Evaluator(int n, BackendPolicy policy = BackendPolicy::automatic,
                     SelectionLimits limits = {});

  [[nodiscard]] ZEval operator()(Q1Value q1) const;
  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] BackendPolicy policy() const noexcept { return policy_; }

 private:
  int n_;
  BackendPolicy policy_;
  SelectionLimits limits_;
  std::shared_ptr<const MatsubaraTable> matsubara_;
  std::shared_ptr<const PowerTables> powers_;
};

}  // namespace bosegas
