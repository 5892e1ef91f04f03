#include "cheb/dirichlet_ap.hpp"

#include <cmath>

#include "cheb/analytic_bounds.hpp"
#include "cheb/arith.hpp"
#include "cheb/sieve.hpp"

namespace cheb {
namespace {

struct ThetaParts {
  double theta;
  double base;  // x / (phi(q) log x)
};

ThetaParts theta_parts(const APQuery& query) {
  require(query.q >= 2, "bound check: q must be >= 2");
  require(query.x > query.q, "bound check: x must exceed q so that theta < 1");
  const double lx = std::log(static_cast<double>(query.x));
  return {std::log(static_cast<double>(query.q)) / lx,
          static_cast<double>(query.x) / (static_cast<double>(arith::euler_phi(query.q)) * lx)};
}

}  // namespace

void APQuery::validate() const {
  require(q >= 1, "APQuery: q must be >= 1");
  if (q == 1) return;
  require(arith::gcd(a % q, q) == 1, "APQuery: gcd(a, q) must be 1");
}

std::uint64_t pi_ap(const APQuery& query) {
  query.validate();
  if (query.x < 2) return 0;
  const auto range = segmented_primes(2, query.x + 1);
  if (query.q == 1) return range.primes.size();
  const std::uint64_t target = query.a % query.q;
  std::uint64_t n = 0;
  for (const auto p : range.primes) n += (p % query.q == target);
  return n;
}

std::vector<std::uint64_t> pi_ap_table(std::uint64_t q, std::uint64_t x) {
  require(q >= 1, "pi_ap_table: q must be >= 1");
  std::vector<std::uint64_t> table(q, 0);
  if (x < 2) return table;
  for (const auto p : segmented_primes(2, x + 1).primes) ++table[p % q];
  return table;
}

BoundReport mv_bound_check(const APQuery& query, std::uint64_t count) {
  query.validate();
  const auto t = theta_parts(query);
  auto r = BoundReport::compare(static_cast<double>(count), 2.0 / (1.0 - t.theta) * t.base);
  return r;
}

BoundReport mv_bound_check(const APQuery& query) {
  query.validate();
  theta_parts(query);
  return mv_bound_check(query, pi_ap(query));
}

BoundReport maynard_bound_check(const APQuery& query, std::uint64_t count, double slack) {
  query.validate();
  const auto t = theta_parts(query);
  auto r = BoundReport::compare(static_cast<double>(count),
                                (bounds::classical_C_theta(t.theta) + slack) * t.base);
  r.heuristic = true;
  r.note = "o(1) replaced by a fixed slack";
  return r;
}

BoundReport maynard_bound_check(const APQuery& query, double slack) {
  query.validate();
  theta_parts(query);
  return maynard_bound_check(query, pi_ap(query), slack);
}

}  // namespace cheb
