#include <cmath>
#include <limits>
#include <string>

#include "bosegas/backends.hpp"

namespace bosegas {

MatsubaraTable::MatsubaraTable(int n, int cap) : n_(n) {
  if (n > cap) {
    throw CapacityError("matsubara backend: n = " + std::to_string(n) +
                        " exceeds the cycle-type cap of " + std::to_string(cap));
  }
  for_each_cycle_type(
      n,
      [&](std::span<const Part> parts, int cardinality) {
        terms_.push_back({normalized_log_coefficient(parts), cardinality});
      },
      cap);
}

ZEval MatsubaraTable::evaluate(Q1Value q1) const {
  const double log_q1 = std::log(q1.value());

  // Z_N = sum_j exp(log_coefficient_j + l_j ln Q1), summed relative to the
  // largest exponent. Z' and Z'' reuse the same shift with weights l and l(l-1).
  double shift = -std::numeric_limits<double>::infinity();
  for (const Term& t : terms_) {
    shift = std::max(shift, t.log_coefficient + t.degree * log_q1);
  }

  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
  for (std::size_t j = 0; j < terms_.size(); ++j) {
    const Term& t = terms_[j];
    const double w = std::exp(t.log_coefficient + t.degree * log_q1 - shift);
    if (!std::isfinite(w)) {
      throw NumericError("matsubara backend: non-finite term " + std::to_string(j) +
                         " (degree " + std::to_string(t.degree) + ") at n = " +
                         std::to_string(n_));
    }
    const double l = t.degree;
    s0 += w;
    s1 += l * w;
    s2 += l * (l - 1.0) * w;
  }

  ZEval out{n_, q1, shift + std::log(s0), s1 / s0 / q1.value(), s2 / s0 / q1.value() / q1.value(),
            Backend::matsubara};
  if (!std::isfinite(out.log_z) || !std::isfinite(out.ratio1) || !std::isfinite(out.ratio2)) {
    throw NumericError("matsubara backend: non-finite result at n = " + std::to_string(n_));
  }
  return out;
}

ZEval eval_matsubara(int n, Q1Value q1, int cap) {
  return MatsubaraTable(n, cap).evaluate(q1);
}

}  // namespace bosegas
