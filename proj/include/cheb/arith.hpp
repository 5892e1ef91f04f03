#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Elementary integer arithmetic shared by the counting modules.
namespace cheb::arith {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::int64_t gcd_signed(std::int64_t a, std::int64_t b);

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

/// a mod m in [0, m) for signed a.
inline std::uint64_t mod(std::int64_t a, std::uint64_t m) {
  const std::int64_t r = a % static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

std::uint64_t isqrt(std::uint64_t n);

/// Kronecker symbol (a/n), n > 0.
int kronecker(std::int64_t a, std::uint64_t n);

/// Prime factorisation by trial division as (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Squarefree part with the sign of n: n = kernel * square. n != 0.
std::int64_t squarefree_kernel(std::int64_t n);
bool is_squarefree(std::uint64_t n);

/// True when d is a negative fundamental discriminant.
bool is_negative_fundamental_discriminant(std::int64_t d);

/// Deterministic primality for 64-bit inputs.
bool is_prime(std::uint64_t n);

}  // namespace cheb::arith
