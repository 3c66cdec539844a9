#pragma once

#include <cmath>
#include <utility>

namespace bosegas {

struct GoldenSectionResult {
  double x;
  double value;
  int evaluations;
};

/// Maximizes a unimodal `f` on [lo, hi] until the bracket is narrower than
/// `tolerance`. Reuses one interior point per iteration.
template <typename F>
GoldenSectionResult golden_section_maximize(F&& f, double lo, double hi, double tolerance) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  int evals = 2;

  while (hi - lo > tolerance) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
    ++evals;
  }
  return f1 >= f2 ? GoldenSectionResult{x1, f1, evals} : GoldenSectionResult{x2, f2, evals};
}

}  // namespace bosegas
