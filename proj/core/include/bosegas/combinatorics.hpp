#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bosegas/errors.hpp"

namespace bosegas {

using BigInt = boost::multiprecision::cpp_int;

/// Largest n accepted by the partition enumerator unless a caller overrides it.
/// P(64) = 1 741 630 cycle types.
inline constexpr int kDefaultCycleTypeCap = 64;

/// One distinct part of an integer partition: `multiplicity` rings of length `size`.
struct Part {
  int size = 0;
  int multiplicity = 0;

  friend bool operator==(const Part&, const Part&) = default;
};

/// A cycle type of the symmetric group S_N, i.e. an integer partition of N
/// written as part sizes with their multiplicities. Parts are kept sorted by
/// decreasing size.
class CycleType {
 public:
  /// Validates and normalizes `parts`. Throws DomainError if any size or
  /// multiplicity is nonpositive or a size repeats.
  static CycleType from_parts(std::vector<Part> parts);

  [[nodiscard]] std::span<const Part> parts() const noexcept { return parts_; }
  [[nodiscard]] int n_total() const noexcept { return n_total_; }
  /// Number of rings, sum of multiplicities.
  [[nodiscard]] int cardinality() const noexcept { return cardinality_; }
  /// Multiplicity of part `size`, 0 if absent.
  [[nodiscard]] int multiplicity(int size) const noexcept;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  CycleType() = default;

  std::vector<Part> parts_;
  int n_total_ = 0;
  int cardinality_ = 0;
};

/// The coefficient c_j attached to a cycle type, split into its exact integer
/// part and its real half-power part:
///
///   c_j = N! / prod_k k^{5/2 g(k)} g(k)! = cycle_count * half_power_factor
struct MatsubaraCoefficient {
  BigInt cycle_count;        ///< N! / prod_k k^{g(k)} g(k)!
  double half_power_factor;  ///< prod_k k^{-3/2 g(k)}
  double normalized_log;     ///< ln(c_j / N!)
};

/// Calls `visit(parts, cardinality)` once per partition of `n`, where `parts`
/// is a span of Part sorted by decreasing size. Partitions arrive in ascending
/// lexicographic order of their non-increasing part lists:
/// 1+1+1+1, 2+1+1, 2+2, 3+1, 4.
///
/// The span is only valid during the callback.
template <typename Visitor>
void for_each_cycle_type(int n, Visitor&& visit, int cap = kDefaultCycleTypeCap);

/// All P(n) cycle types of n, in the order produced by for_each_cycle_type.
/// Throws DomainError for n < 1 or n > cap.
std::vector<CycleType> enumerate_cycle_types(int n, int cap = kDefaultCycleTypeCap);

/// Number of permutations of S_N with the given cycle type.
BigInt cycle_type_count(const CycleType& ct);

MatsubaraCoefficient matsubara_coefficient(const CycleType& ct);

/// ln(c_j / N!) = -sum_k [ (5/2) g(k) ln k + ln g(k)! ] for a span of parts.
double normalized_log_coefficient(std::span<const Part> parts);

/// c_j evaluated directly in floating point from the closed form with the
/// combined k^{5/2} exponent. Independent of the integer/half-power split.
double matsubara_coefficient_direct(const CycleType& ct);

BigInt factorial(int n);

namespace detail {
void check_cycle_type_n(int n, int cap);
}  // namespace detail

template <typename Visitor>
void for_each_cycle_type(int n, Visitor&& visit, int cap) {
  detail::check_cycle_type_n(n, cap);

  // Depth-first over (largest part, multiplicity) with both ascending, which
  // yields ascending lexicographic order of the expanded part lists.
  std::vector<Part> stack;
  stack.reserve(16);
  int cardinality = 0;

  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      visit(std::span<const Part>(stack), cardinality);
      return;
    }
    for (int size = 1; size <= std::min(remaining, max_part); ++size) {
      // Parts smaller than `size` must be able to fill what is left.
      for (int mult = 1; mult * size <= remaining; ++mult) {
        const int rest = remaining - mult * size;
        if (rest > 0 && size == 1) continue;
        stack.push_back({size, mult});
        cardinality += mult;
        self(self, rest, size - 1);
        cardinality -= mult;
        stack.pop_back();
      }
    }
  };
  recurse(recurse, n, n);
}

}  // namespace bosegas
