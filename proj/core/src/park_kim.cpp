#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "bosegas/backends.hpp"

namespace bosegas {

namespace {

// Block length for the anchored exponentials in the f_N sum.
constexpr int kBlock = 32;

}  // namespace

PowerTables::PowerTables(int n, bool with_pair_weights)
    : n_(n), inv15_(n + 1, 0.0), inv25_(n + 1, 0.0) {
  if (n < 0) throw DomainError("power tables need n >= 0");
  for (int l = 1; l <= n; ++l) {
    const double x = l;
    inv15_[l] = 1.0 / (x * std::sqrt(x));
    inv25_[l] = inv15_[l] / x;
  }
  if (!with_pair_weights) return;

  // w_t = sum_{a=1}^{t-1} a^{-5/2} (t-a)^{-5/2}, folded on its symmetry.
  pair_weight_.assign(n + 1, 0.0);
  for (int t = 2; t <= n; ++t) {
    double acc = 0.0;
    const int half = (t - 1) / 2;
    for (int a = 1; a <= half; ++a) acc += inv25_[a] * inv25_[t - a];
    acc *= 2.0;
    if (t % 2 == 0) acc += inv25_[t / 2] * inv25_[t / 2];
    pair_weight_[t] = acc;
  }
}

RatioRecursionState park_kim_state(int n, Q1Value q1, const PowerTables& tables) {
  if (n < 0 || n > tables.n()) {
    throw DomainError("park_kim backend: n = " + std::to_string(n) + " outside table range");
  }
  const double q = q1.value();
  const double* inv15 = tables.inv_pow_3_2().data();

  RatioRecursionState st;
  st.f.resize(n);
  st.log_prefix.assign(n + 1, 0.0);
  std::vector<double>& lp = st.log_prefix;

  // Completed blocks of Z_m / Z_{N-1} = exp(lp[m] - lp[N-1]) are stored as
  // exp(lp[m] - anchor) with anchor = block maximum, so each block contributes
  // one exponential per N rather than kBlock of them.
  std::vector<double> scaled(n + 1, 0.0);
  std::vector<double> anchor;
  anchor.reserve(n / kBlock + 1);

  for (int m = 1; m <= n; ++m) {
    const double top = lp[m - 1];
    const int full_blocks = m / kBlock;
    double sum = 0.0;

    for (int b = 0; b < full_blocks; ++b) {
      const double scale = std::exp(anchor[b] - top);
      if (scale == 0.0) continue;
      const int lo = b * kBlock;
      const double* e = scaled.data() + lo;
      const double* w = inv15 + (m - lo);
      double inner = 0.0;
      for (int i = 0; i < kBlock; ++i) inner += e[i] * w[-i];
      sum += scale * inner;
    }
    for (int k = full_blocks * kBlock; k < m; ++k) {
      sum += std::exp(lp[k] - top) * inv15[m - k];
    }

    const double f = q * sum / m;
    if (!(std::isfinite(f) && f > 0.0)) {
      throw NumericError("park_kim backend: f_" + std::to_string(m) + " is not a positive finite " +
                         "number (Q1 = " + std::to_string(q) + ")");
    }
    st.f[m - 1] = f;
    lp[m] = top + std::log(f);

    if ((m + 1) % kBlock == 0) {
      const int lo = m + 1 - kBlock;
      const double a = *std::max_element(lp.begin() + lo, lp.begin() + m + 1);
      anchor.push_back(a);
      for (int k = lo; k <= m; ++k) scaled[k] = std::exp(lp[k] - a);
    }
  }
  return st;
}

ZEval park_kim(int n, Q1Value q1, const PowerTables& tables) {
  if (n == 0) return {0, q1, 0.0, 0.0, 0.0, Backend::park_kim};
  if (!tables.has_pair_weights()) {
    throw DomainError("park_kim backend: power tables were built without pair weights");
  }
  const RatioRecursionState st = park_kim_state(n, q1, tables);
  const std::vector<double>& lp = st.log_prefix;
  const std::vector<double>& inv25 = tables.inv_pow_5_2();
  const std::vector<double>& pair = tables.pair_weights();
  const double top = lp[n];

  // Z_{N-k} / Z_N = exp(lp[N-k] - lp[N]).
  double r1 = 0.0, r2 = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double ratio = std::exp(lp[n - k] - top);
    r1 += inv25[k] * ratio;
    r2 += pair[k] * ratio;
  }
  if (!std::isfinite(r1) || !std::isfinite(r2)) {
    throw NumericError("park_kim backend: non-finite derivative ratio at n = " + std::to_string(n));
  }
  return {n, q1, top, r1, r2, Backend::park_kim};
}

ZEval eval_park_kim(int n, Q1Value q1) {
  if (n < 1) throw DomainError("park_kim backend: n must be >= 1");
  return park_kim(n, q1, PowerTables(n, true));
}

}  // namespace bosegas
