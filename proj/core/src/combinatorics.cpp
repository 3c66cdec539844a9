#include "bosegas/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bosegas {

namespace detail {

void check_cycle_type_n(int n, int cap) {
  if (n < 1) {
    throw DomainError("cycle types need n >= 1, got " + std::to_string(n));
  }
  if (n > cap) {
    throw DomainError("n = " + std::to_string(n) + " exceeds the cycle-type cap of " +
                      std::to_string(cap));
  }
}

}  // namespace detail

CycleType CycleType::from_parts(std::vector<Part> parts) {
  if (parts.empty()) throw DomainError("cycle type needs at least one part");
  std::sort(parts.begin(), parts.end(),
            [](const Part& a, const Part& b) { return a.size > b.size; });

  CycleType ct;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Part& p = parts[i];
    if (p.size <= 0 || p.multiplicity <= 0) {
      throw DomainError("part sizes and multiplicities must be positive");
    }
    if (i > 0 && parts[i - 1].size == p.size) {
      throw DomainError("part size " + std::to_string(p.size) + " listed twice");
    }
    ct.n_total_ += p.size * p.multiplicity;
    ct.cardinality_ += p.multiplicity;
  }
  ct.parts_ = std::move(parts);
  return ct;
}

int CycleType::multiplicity(int size) const noexcept {
  for (const Part& p : parts_) {
    if (p.size == size) return p.multiplicity;
  }
  return 0;
}

std::vector<CycleType> enumerate_cycle_types(int n, int cap) {
  std::vector<CycleType> out;
  for_each_cycle_type(
      n,
      [&](std::span<const Part> parts, int) {
        out.push_back(CycleType::from_parts({parts.begin(), parts.end()}));
      },
      cap);
  return out;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt cycle_type_count(const CycleType& ct) {
  BigInt denom = 1;
  for (const Part& p : ct.parts()) {
    BigInt kg = boost::multiprecision::pow(BigInt(p.size), static_cast<unsigned>(p.multiplicity));
    denom *= kg * factorial(p.multiplicity);
  }
  return factorial(ct.n_total()) / denom;
}

double normalized_log_coefficient(std::span<const Part> parts) {
  double acc = 0.0;
  for (const Part& p : parts) {
    acc -= 2.5 * p.multiplicity * std::log(static_cast<double>(p.size)) +
           std::lgamma(static_cast<double>(p.multiplicity) + 1.0);
  }
  return acc;
}

MatsubaraCoefficient matsubara_coefficient(const CycleType& ct) {
  double half_power = 1.0;
  for (const Part& p : ct.parts()) {
    half_power *= std::pow(static_cast<double>(p.size), -1.5 * p.multiplicity);
  }
  return {cycle_type_count(ct), half_power, normalized_log_coefficient(ct.parts())};
}

double matsubara_coefficient_direct(const CycleType& ct) {
  double log_denom = 0.0;
  for (const Part& p : ct.parts()) {
    log_denom += 2.5 * p.multiplicity * std::log(static_cast<double>(p.size)) +
                 std::lgamma(p.multiplicity + 1.0);
  }
  return std::exp(std::lgamma(ct.n_total() + 1.0) - log_denom);
}

}  // namespace bosegas
