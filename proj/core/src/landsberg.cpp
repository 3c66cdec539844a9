#include <cmath>
#include <string>
#include <vector>

#include "bosegas/backends.hpp"

namespace bosegas {

ZEval landsberg(int n, Q1Value q1, const PowerTables& tables) {
  if (n < 0 || n > tables.n()) {
    throw DomainError("landsberg backend: n = " + std::to_string(n) + " outside table range");
  }
  // Extended precision widens the overflow horizon (ln Z up to ~11356 on
  // x86-64) while staying in plain floating point.
  const long double q = q1.value();
  const std::vector<double>& inv15 = tables.inv_pow_3_2();

  std::vector<long double> z(n + 1), dz(n + 1), d2z(n + 1);
  z[0] = 1.0;
  dz[0] = 0.0;
  d2z[0] = 0.0;

  for (int m = 1; m <= n; ++m) {
    long double s0 = 0.0L, s1 = 0.0L, s2 = 0.0L;
    for (int l = 1; l <= m; ++l) {
      const long double w = inv15[l];
      s0 += w * z[m - l];
      s1 += w * (q * dz[m - l] + z[m - l]);
      s2 += w * (q * d2z[m - l] + 2.0L * dz[m - l]);
    }
    z[m] = q * s0 / m;
    dz[m] = s1 / m;
    d2z[m] = s2 / m;
    if (!std::isfinite(z[m]) || !std::isfinite(dz[m]) || !std::isfinite(d2z[m])) {
      throw OverflowError("landsberg backend: Z_N overflowed at N = " + std::to_string(m) +
                              " (Q1 = " + std::to_string(q1.value()) + "); use the park_kim backend",
                          m);
    }
  }

  if (n == 0) return {0, q1, 0.0, 0.0, 0.0, Backend::landsberg};
  return {n, q1, static_cast<double>(std::log(z[n])), static_cast<double>(dz[n] / z[n]),
          static_cast<double>(d2z[n] / z[n]), Backend::landsberg};
}

ZEval eval_landsberg(int n, Q1Value q1) {
  if (n < 1) throw DomainError("landsberg backend: n must be >= 1");
  return landsberg(n, q1, PowerTables(n, false));
}

}  // namespace bosegas
