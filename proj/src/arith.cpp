#include "cheb/arith.hpp"

#include <cmath>

#include "cheb/common.hpp"

namespace cheb::arith {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t gcd_signed(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(gcd(static_cast<std::uint64_t>(a < 0 ? -a : a),
                                       static_cast<std::uint64_t>(b < 0 ? -b : b)));
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    const std::int64_t tt = t - q * new_t;
    t = new_t;
    new_t = tt;
    const std::int64_t rr = r - q * new_r;
    r = new_r;
    new_r = rr;
  }
  require(r == 1, "invmod: argument not invertible");
  return mod(t, m);
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

int kronecker(std::int64_t a, std::uint64_t n) {
  require(n > 0, "kronecker: n must be positive");
  int result = 1;
  // strip factors of two from n
  while ((n & 1) == 0) {
    n >>= 1;
    if (a % 2 == 0) return 0;
    const std::uint64_t a8 = mod(a, 8);
    if (a8 == 3 || a8 == 5) result = -result;
  }
  // Jacobi symbol (a/n) for odd n
  std::uint64_t aa = mod(a, n);
  while (aa != 0) {
    while ((aa & 1) == 0) {
      aa >>= 1;
      const std::uint64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(aa, n);
    if (aa % 4 == 3 && n % 4 == 3) result = -result;
    aa %= n;
  }
  return n == 1 ? result : 0;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

std::int64_t squarefree_kernel(std::int64_t n) {
  require(n != 0, "squarefree_kernel: zero");
  std::int64_t k = n < 0 ? -1 : 1;
  for (const auto& [p, e] : factorize(static_cast<std::uint64_t>(n < 0 ? -n : n))) {
    if (e % 2 == 1) k *= static_cast<std::int64_t>(p);
  }
  return k;
}

bool is_squarefree(std::uint64_t n) {
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return false;
  }
  return true;
}

bool is_negative_fundamental_discriminant(std::int64_t d) {
  if (d >= 0) return false;
  const std::uint64_t m = static_cast<std::uint64_t>(-d);
  if (mod(d, 4) == 1) return is_squarefree(m);
  if (m % 4 != 0) return false;
  const std::int64_t q = d / 4;
  const std::uint64_t r = mod(q, 4);
  return (r == 2 || r == 3) && is_squarefree(m / 4);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace cheb::arith
