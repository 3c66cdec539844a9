#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bosegas/backends.hpp"

namespace bosegas {

namespace {

// zeta(5/2)
constexpr double kZeta52 = 1.341487257250917179756769703;

}  // namespace

Q1Value::Q1Value(double value) : value_(value) {
  if (!(std::isfinite(value) && value > 0.0)) {
    throw DomainError("Q1 must be positive and finite, got " + std::to_string(value));
  }
}

std::string_view to_string(Backend backend) {
  switch (backend) {
    case Backend::matsubara: return "matsubara";
    case Backend::landsberg: return "landsberg";
    case Backend::park_kim: return "park_kim";
  }
  return "unknown";
}

std::string_view to_string(BackendPolicy policy) {
  switch (policy) {
    case BackendPolicy::automatic: return "auto";
    case BackendPolicy::matsubara: return "matsubara";
    case BackendPolicy::landsberg: return "landsberg";
    case BackendPolicy::park_kim: return "park_kim";
  }
  return "unknown";
}

std::optional<BackendPolicy> parse_backend_policy(std::string_view name) {
  if (name == "auto") return BackendPolicy::automatic;
  if (name == "matsubara") return BackendPolicy::matsubara;
  if (name == "landsberg") return BackendPolicy::landsberg;
  if (name == "park_kim" || name == "park-kim") return BackendPolicy::park_kim;
  return std::nullopt;
}

double landsberg_log_magnitude_bound(Q1Value q1) {
  // Generating function: sum_N Z_N t^N = exp(Q1 sum_k t^k / k^{5/2}). At t = 1
  // every Z_N is below exp(zeta(5/2) Q1); each Q1-derivative adds a factor
  // of at most zeta(5/2).
  return kZeta52 * q1.value() + 2.0 * std::log(kZeta52);
}

Backend select_backend(int n, Q1Value q1, BackendPolicy policy, const SelectionLimits& limits) {
  if (n < 1) throw DomainError("select_backend: n must be >= 1");
  switch (policy) {
    case BackendPolicy::matsubara:
      if (n > limits.cycle_type_cap) {
        throw CapacityError("matsubara backend: n = " + std::to_string(n) +
                            " exceeds the cycle-type cap of " +
                            std::to_string(limits.cycle_type_cap));
      }
      return Backend::matsubara;
    case BackendPolicy::landsberg: return Backend::landsberg;
    case BackendPolicy::park_kim: return Backend::park_kim;
    case BackendPolicy::automatic: break;
  }
  if (n <= limits.matsubara_max_n && n <= limits.cycle_type_cap) return Backend::matsubara;
  const double log_max =
      static_cast<double>(std::log(std::numeric_limits<long double>::max()));
  if (n <= limits.landsberg_max_n && landsberg_log_magnitude_bound(q1) < log_max) {
    return Backend::landsberg;
  }
  return Backend::park_kim;
}

double relative_deviation(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double max_relative_deviation(const ZEval& a, const ZEval& b) {
  const double log_scale = std::max({std::abs(a.log_z), std::abs(b.log_z), 1.0});
  return std::max({std::abs(a.log_z - b.log_z) / log_scale, relative_deviation(a.ratio1, b.ratio1),
                   relative_deviation(a.ratio2, b.ratio2)});
}

Evaluator::Evaluator(int n, BackendPolicy policy, SelectionLimits limits)
    : n_(n), policy_(policy), limits_(limits) {
  if (n < 1) throw DomainError("evaluator: n must be >= 1, got " + std::to_string(n));

  const bool auto_matsubara = policy == BackendPolicy::automatic &&
                              n <= limits.matsubara_max_n && n <= limits.cycle_type_cap;
  if (policy == BackendPolicy::matsubara || auto_matsubara) {
    matsubara_ = std::make_shared<const MatsubaraTable>(n, limits.cycle_type_cap);
  }
  if (policy == BackendPolicy::landsberg) {
    powers_ = std::make_shared<const PowerTables>(n, false);
  } else if (policy == BackendPolicy::park_kim ||
             (policy == BackendPolicy::automatic && !auto_matsubara)) {
    powers_ = std::make_shared<const PowerTables>(n, true);
  }
}

ZEval Evaluator::operator()(Q1Value q1) const {
  switch (select_backend(n_, q1, policy_, limits_)) {
    case Backend::matsubara: return matsubara_->evaluate(q1);
    case Backend::landsberg: return landsberg(n_, q1, *powers_);
    case Backend::park_kim: return park_kim(n_, q1, *powers_);
  }
  throw Error("evaluator: unknown backend");
}

}  // namespace bosegas
