#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cheb/common.hpp"

namespace cheb {

/// Primes in the half-open interval [lo, hi), ascending.
struct PrimeRange {
  std::uint64_t lo = 2;
  std::uint64_t hi = 2;
  std::vector<std::uint64_t> primes;
};

inline constexpr std::uint64_t kDefaultSegment = std::uint64_t{1} << 18;

/// Segmented sieve of Eratosthenes. Segments are sieved in parallel and merged
/// in order, so the output does not depend on segment_size or thread count.
/// Throws DomainError on bad bounds, CapacityError past memory_budget_bytes().
PrimeRange segmented_primes(std::uint64_t lo, std::uint64_t hi,
                            std::uint64_t segment_size = kDefaultSegment);

/// All primes <= n together with an O(1) primality lookup.
class PrimeTable {
 public:
  explicit PrimeTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  std::span<const std::uint64_t> primes() const { return primes_; }
  bool is_prime(std::uint64_t n) const;
  /// Number of primes <= x (x <= limit).
  std::uint64_t pi(std::uint64_t x) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::uint64_t> bits_;
};

/// Li(x) = integral from 2 to x of dt / log t (composite Simpson in log t).
double li(double x);

/// theta(x)/log x + integral_{x0}^{x} theta(t)/(t log^2 t) dt, with theta read
/// off the series as a right-continuous step function. Each piece between
/// checkpoints is integrated in closed form.
double partial_sum_pi_from_theta(const CountSeries& theta_series, double x0, double x);

}  // namespace cheb
