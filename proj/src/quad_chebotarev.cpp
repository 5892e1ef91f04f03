#include "cheb/quad_chebotarev.hpp"

#include <algorithm>
#include <cmath>

#include "cheb/arith.hpp"
#include "cheb/sieve.hpp"

namespace cheb {
namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : arith::factorize(n)) out.push_back(p);
  return out;
}

// Frobenius element raised to the m-th power.
std::int64_t frob_power(const AbelianExtension& ext, std::uint64_t p, int m) {
  if (ext.kind() == AbelianExtension::Kind::quadratic) {
    const int k = arith::kronecker(ext.disc(), p);
    return (m % 2 == 0) ? 1 : k;
  }
  return static_cast<std::int64_t>(arith::powmod(p % ext.q(), static_cast<std::uint64_t>(m), ext.q()));
}

std::vector<std::uint64_t> primes_upto(std::uint64_t x) {
  if (x < 2) return {};
  return segmented_primes(2, x + 1).primes;
}

}  // namespace

AbelianExtension AbelianExtension::quadratic(std::int64_t d) {
  require(d != 0 && d != 1, "quadratic extension: d must differ from 0 and 1");
  require(arith::squarefree_kernel(d) == d, "quadratic extension: d must be squarefree");
  AbelianExtension e;
  e.kind_ = Kind::quadratic;
  e.d_ = d;
  const std::int64_t m = ((d % 4) + 4) % 4;
  e.disc_ = m == 1 ? d : 4 * d;
  e.group_order_ = 2;
  e.ramified_ = prime_divisors(static_cast<std::uint64_t>(std::abs(e.disc_)));
  return e;
}

AbelianExtension AbelianExtension::cyclotomic(std::uint64_t q) {
  require(q >= 1, "cyclotomic extension: q must be >= 1");
  AbelianExtension e;
  e.kind_ = Kind::cyclotomic;
  e.q_ = q;
  e.disc_ = static_cast<std::int64_t>(q);
  e.group_order_ = arith::euler_phi(q);
  // Q(zeta_2) = Q, where 2 is unramified.
  if (q > 2) e.ramified_ = prime_divisors(q);
  if (q % 4 == 2 && q > 2) e.ramified_.erase(e.ramified_.begin());
  return e;
}

bool AbelianExtension::is_ramified(std::uint64_t p) const {
  return std::find(ramified_.begin(), ramified_.end(), p) != ramified_.end();
}

std::uint64_t AbelianExtension::max_conductor() const {
  if (kind_ == Kind::quadratic) return static_cast<std::uint64_t>(std::abs(disc_));
  return q_ % 4 == 2 ? q_ / 2 : q_;
}

void validate_class(const AbelianExtension& ext, const ConjClass& cls) {
  if (ext.kind() == AbelianExtension::Kind::quadratic) {
    require(cls.element == 1 || cls.element == -1, "class must be split (+1) or inert (-1)");
    return;
  }
  if (ext.q() <= 2) {
    require(cls.element == 0 || cls.element == 1, "the trivial group has the single class 1");
    return;
  }
  require(cls.element >= 0, "class residue must be non-negative");
  const auto a = static_cast<std::uint64_t>(cls.element);
  require(a < ext.q() && arith::gcd(a, ext.q()) == 1, "class residue must be a unit mod q");
}

std::optional<ConjClass> artin_class(const AbelianExtension& ext, std::uint64_t p) {
  require(arith::is_prime(p), "artin_class: p must be prime");
  if (ext.is_ramified(p)) return std::nullopt;
  if (ext.kind() == AbelianExtension::Kind::cyclotomic && ext.q() <= 2) return ConjClass::residue(1);
  return ConjClass{frob_power(ext, p, 1)};
}

int theta_indicator(const AbelianExtension& ext, const ConjClass& cls, std::uint64_t p, int m) {
  if (ext.is_ramified(p)) return 0;
  if (ext.kind() == AbelianExtension::Kind::cyclotomic && ext.q() <= 2) return 1;
  return frob_power(ext, p, m) == cls.element ? 1 : 0;
}

double psi_C(const AbelianExtension& ext, const ConjClass& cls, double x) {
  validate_class(ext, cls);
  require(x > 1.0, "psi_C: x must exceed 1");
  const auto top = static_cast<std::uint64_t>(std::ceil(x)) - 1;  // p^m < x
  double sum = 0.0;
  for (const auto p : primes_upto(top)) {
    const double lp = std::log(static_cast<double>(p));
    double pm = static_cast<double>(p);
    for (int m = 1; pm < x; ++m, pm *= static_cast<double>(p)) {
      sum += lp * theta_indicator(ext, cls, p, m);
    }
  }
  return sum;
}

std::uint64_t pi_C(const AbelianExtension& ext, const ConjClass& cls, std::uint64_t x) {
  return static_cast<std::uint64_t>(pi_C_series(ext, cls, {x}).counts.back());
}

CountSeries pi_C_series(const AbelianExtension& ext, const ConjClass& cls,
                        const std::vector<std::uint64_t>& checkpoints) {
  validate_class(ext, cls);
  require(!checkpoints.empty(), "pi_C_series: need at least one checkpoint");
  require(std::adjacent_find(checkpoints.begin(), checkpoints.end(),
                             [](auto a, auto b) { return a >= b; }) == checkpoints.end(),
          "pi_C_series: checkpoints must be strictly ascending");
  CountSeries out;
  out.label = "pi_C";
  std::size_t next = 0;
  double running = 0.0;
  for (const auto p : primes_upto(checkpoints.back())) {
    while (p > checkpoints[next]) {
      out.checkpoints.push_back(static_cast<double>(checkpoints[next++]));
      out.counts.push_back(running);
    }
    running += theta_indicator(ext, cls, p, 1);
  }
  while (next < checkpoints.size()) {
    out.checkpoints.push_back(static_cast<double>(checkpoints[next++]));
    out.counts.push_back(running);
  }
  return out;
}

BoundReport lemma21_check(const AbelianExtension& ext, const ConjClass& cls, double x0, double x,
                          double constant) {
  validate_class(ext, cls);
  require(x0 > 3.0 && x > x0, "lemma21_check: need x > x0 > 3");
  require(constant >= 0.0, "lemma21_check: constant must be non-negative");

  // psi_C(t) is a step function jumping just after each prime power n (strict
  // n < t), so on each gap it is constant and int dt/(t log^2 t) = -1/log t.
  struct Jump {
    double at;
    double mass;
  };
  std::vector<Jump> jumps;
  const auto top = static_cast<std::uint64_t>(std::ceil(x));
  for (const auto p : primes_upto(top)) {
    const double lp = std::log(static_cast<double>(p));
    double pm = static_cast<double>(p);
    for (int m = 1; pm < x; ++m, pm *= static_cast<double>(p)) {
      if (theta_indicator(ext, cls, p, m)) jumps.push_back({pm, lp});
    }
  }
  std::sort(jumps.begin(), jumps.end(), [](const Jump& a, const Jump& b) { return a.at < b.at; });

  double psi = 0.0;
  std::size_t i = 0;
  for (; i < jumps.size() && jumps[i].at < x0; ++i) psi += jumps[i].mass;
  double integral = 0.0;
  double left = x0;
  for (; i < jumps.size(); ++i) {
    integral += psi * (1.0 / std::log(left) - 1.0 / std::log(jumps[i].at));
    left = jumps[i].at;
    psi += jumps[i].mass;
  }
  integral += psi * (1.0 / std::log(left) - 1.0 / std::log(x));

  const double lhs = static_cast<double>(pi_C(ext, cls, static_cast<std::uint64_t>(std::floor(x))));
  const double rhs = psi / std::log(x) + integral + constant * 1.0 * x0;
  return BoundReport::compare(lhs, rhs);
}

double S_direct(const AbelianExtension& ext, const ConjClass& cls, const WeightSpec& spec) {
  validate_class(ext, cls);
  const double L = spec.log_x();
  const double hi = std::exp(spec.support_hi() * L);
  const double lo = std::exp(spec.support_lo() * L);
  double sum = 0.0;
  for (const auto p : primes_upto(static_cast<std::uint64_t>(std::floor(hi)))) {
    const double lp = std::log(static_cast<double>(p));
    double pm = static_cast<double>(p);
    for (int m = 1; pm <= hi; ++m, pm *= static_cast<double>(p)) {
      if (pm < lo) continue;
      if (!theta_indicator(ext, cls, p, m)) continue;
      sum += lp * weight_f(spec, m * lp / L);
    }
  }
  return sum;
}

DensityReport theorem11_report(const AbelianExtension& ext, const ConjClass& cls, std::uint64_t x) {
  validate_class(ext, cls);
  require(x >= 3, "theorem11_report: x must be >= 3");
  DensityReport r;
  r.count = pi_C(ext, cls, x);
  r.density = 1.0 / static_cast<double>(ext.group_order());
  r.ratio = static_cast<double>(r.count) / (r.density * li(static_cast<double>(x)));
  bounds::FieldInvariants inv;
  inv.Q = static_cast<double>(ext.max_conductor());
  r.threshold = bounds::range_thresholds(inv).upper;
  r.in_proven_range = std::log(static_cast<double>(x)) >= r.threshold.log_value;
  return r;
}

}  // namespace cheb
