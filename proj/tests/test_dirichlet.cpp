#include "doctest.h"

#include <cmath>

#include "cheb/analytic_bounds.hpp"
#include "cheb/arith.hpp"
#include "cheb/dirichlet_ap.hpp"
#include "cheb/sieve.hpp"

using namespace cheb;

namespace {

bool trial_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t count_by_trial(std::uint64_t q, std::uint64_t a, std::uint64_t x) {
  std::uint64_t n = 0;
  for (std::uint64_t p = 2; p <= x; ++p) n += trial_division(p) && (q == 1 || p % q == a % q);
  return n;
}

}  // namespace

TEST_CASE("pi_ap examples") {
  CHECK(pi_ap({4, 1, 100}) == 11);
  CHECK(pi_ap({1, 0, 10}) == 4);
  CHECK(pi_ap({1, 1, 10}) == 4);
  CHECK_THROWS_AS(pi_ap({4, 2, 100}), DomainError);
  CHECK(pi_ap({7, 3, 1}) == 0);
  for (std::uint64_t q : {3u, 8u, 15u}) {
    for (std::uint64_t a = 1; a < q; ++a) {
      if (arith::gcd(a, q) == 1) CHECK(pi_ap({q, a, 5000}) == count_by_trial(q, a, 5000));
    }
  }
}

TEST_CASE("residue classes partition the primes") {
  for (std::uint64_t q = 1; q <= 60; ++q) {
    const std::uint64_t x = 20000;
    const auto table = pi_ap_table(q, x);
    std::uint64_t total = 0;
    for (std::uint64_t a = 0; a < q; ++a) {
      if (arith::gcd(a, q) == 1) total += table[a];
    }
    std::uint64_t dividing = 0;
    for (const auto& [p, e] : arith::factorize(q)) dividing += p <= x;
    CHECK(total + dividing == 2262);
  }
}

TEST_CASE("Montgomery-Vaughan check") {
  const auto r = mv_bound_check({4, 1, 100});
  CHECK(r.lhs == 11);
  const double theta = std::log(4.0) / std::log(100.0);
  CHECK(r.rhs == doctest::Approx(2.0 / (1.0 - theta) * 100.0 / (2.0 * std::log(100.0))).epsilon(1e-14));
  CHECK(r.rhs == doctest::Approx(31.05).epsilon(2e-3));
  CHECK(r.pass);
  CHECK_THROWS_AS(mv_bound_check({4, 1, 4}), DomainError);
  CHECK_THROWS_AS(mv_bound_check({1, 1, 100}), DomainError);
  CHECK(mv_bound_check({3, 2, 1000000}).pass);
}

TEST_CASE("Montgomery-Vaughan holds for small moduli") {
  for (std::uint64_t x : {1000u, 10000u}) {
    for (std::uint64_t q = 2; q <= 200 && q < x; ++q) {
      const auto table = pi_ap_table(q, x);
      for (std::uint64_t a = 1; a < q; ++a) {
        if (arith::gcd(a, q) != 1) continue;
        CHECK(mv_bound_check({q, a, x}, table[a]).pass);
      }
    }
  }
}

TEST_CASE("Maynard-type check") {
  const auto r = maynard_bound_check({7, 3, 1000000});
  CHECK(r.pass);
  CHECK(r.heuristic);
  const double theta = std::log(7.0) / std::log(1e6);
  CHECK(r.rhs == doctest::Approx((16.0 / (8.0 - 3.0 * theta) + 0.1) * 1e6 / (6.0 * std::log(1e6))).epsilon(1e-14));
  // log 5 / log 10^6 < 1/8, so C = 2.
  const auto small = maynard_bound_check({5, 2, 1000000});
  CHECK(small.pass);
  CHECK(small.rhs == doctest::Approx((2.0 + 0.1) * 1e6 / (4.0 * std::log(1e6))).epsilon(1e-14));
  const auto neg = maynard_bound_check({7, 3, 1000}, -2.0 - 1.0);
  CHECK_FALSE(neg.pass);
  CHECK(neg.heuristic);
  CHECK(neg.rhs <= 0.0);
}
