#pragma once

#include <cstdint>
#include <vector>

#include "cheb/common.hpp"

namespace cheb {

/// Primes p <= x with p = a (mod q). Modulus 1 counts every prime.
struct APQuery {
  std::uint64_t q = 1;
  std::uint64_t a = 1;
  std::uint64_t x = 0;

  void validate() const;
};

std::uint64_t pi_ap(const APQuery& query);

/// Counts for every residue class mod q in one sieve pass; entry r holds
/// #{p <= x : p = r mod q}, including classes that share a factor with q.
std::vector<std::uint64_t> pi_ap_table(std::uint64_t q, std::uint64_t x);

/// pi(x; q, a) against (2 / (1 - theta)) x / (phi(q) log x), theta = log q / log x.
BoundReport mv_bound_check(const APQuery& query);
BoundReport mv_bound_check(const APQuery& query, std::uint64_t count);

inline constexpr double kDefaultSlack = 0.1;

/// pi(x; q, a) against (C(theta) + slack) x / (phi(q) log x). Always flagged
/// heuristic: the o(1) term has no explicit rate.
BoundReport maynard_bound_check(const APQuery& query, double slack = kDefaultSlack);
BoundReport maynard_bound_check(const APQuery& query, std::uint64_t count, double slack);

}  // namespace cheb
