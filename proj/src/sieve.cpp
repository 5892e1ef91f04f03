#include "cheb/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cheb/arith.hpp"
#include "cheb/parallel.hpp"

namespace cheb {
namespace {

std::vector<std::uint32_t> base_primes(std::uint64_t limit) {
  std::vector<std::uint8_t> composite(limit + 1, 0);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return out;
}

void sieve_segment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> base,
                   std::vector<std::uint64_t>& out) {
  std::vector<std::uint8_t> marks(hi - lo, 1);
  for (const std::uint64_t p : base) {
    if (p * p >= hi) break;
    std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
    for (std::uint64_t m = start; m < hi; m += p) marks[m - lo] = 0;
  }
  for (std::uint64_t i = 0; i < marks.size(); ++i) {
    if (marks[i] && lo + i >= 2) out.push_back(lo + i);
  }
}

}  // namespace

PrimeRange segmented_primes(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment_size) {
  require(lo >= 2, "segmented_primes: lo must be >= 2");
  require(lo <= hi, "segmented_primes: lo must not exceed hi");
  require(hi <= static_cast<std::uint64_t>(INT64_MAX), "segmented_primes: hi exceeds 2^63-1");
  require(segment_size >= 1024, "segmented_primes: segment_size must be >= 2^10");

  PrimeRange range{lo, hi, {}};
  if (lo == hi) return range;

  // Montgomery-Vaughan: pi(x+y) - pi(x) <= 2y / log y, plus slack for tiny spans.
  const double span = static_cast<double>(hi - lo);
  const double est_primes = span < 64 ? span : 2.0 * span / std::log(span) + 16;
  const double est_bytes =
      8.0 * est_primes + static_cast<double>(std::min(segment_size, hi - lo)) * thread_count() +
      std::sqrt(static_cast<double>(hi)) * 5;
  if (est_bytes > static_cast<double>(memory_budget_bytes())) {
    throw CapacityError("segmented_primes: [" + std::to_string(lo) + ", " + std::to_string(hi) +
                        ") exceeds the memory budget");
  }

  const std::uint64_t root = arith::isqrt(hi - 1) + 1;
  const auto base = base_primes(root);
  const std::uint64_t n_segments = (hi - lo + segment_size - 1) / segment_size;
  std::vector<std::vector<std::uint64_t>> parts(n_segments);
  parallel_for(n_segments, [&](std::size_t k) {
    const std::uint64_t s_lo = lo + k * segment_size;
    const std::uint64_t s_hi = std::min(hi, s_lo + segment_size);
    sieve_segment(s_lo, s_hi, base, parts[k]);
  });
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  range.primes.reserve(total);
  for (const auto& p : parts) range.primes.insert(range.primes.end(), p.begin(), p.end());
  return range;
}

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
  if (limit >= 2) primes_ = segmented_primes(2, limit + 1).primes;
  bits_.assign(limit / 64 + 1, 0);
  for (const std::uint64_t p : primes_) bits_[p / 64] |= std::uint64_t{1} << (p % 64);
}

bool PrimeTable::is_prime(std::uint64_t n) const {
  require(n <= limit_, "PrimeTable::is_prime: argument beyond table limit");
  return (bits_[n / 64] >> (n % 64)) & 1U;
}

std::uint64_t PrimeTable::pi(std::uint64_t x) const {
  require(x <= limit_, "PrimeTable::pi: argument beyond table limit");
  return static_cast<std::uint64_t>(std::upper_bound(primes_.begin(), primes_.end(), x) -
                                    primes_.begin());
}

double li(double x) {
  require(x >= 2.0, "li: x must be >= 2");
  if (x == 2.0) return 0.0;
  // Substituting t = e^u makes the integrand e^u/u smooth on [log 2, log x].
  constexpr int kPanels = 10000;
  const double a = std::log(2.0);
  const double b = std::log(x);
  const double h = (b - a) / kPanels;
  auto g = [](double u) { return std::exp(u) / u; };
  double sum = g(a) + g(b);
  for (int i = 1; i < kPanels; ++i) sum += g(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

double partial_sum_pi_from_theta(const CountSeries& theta_series, double x0, double x) {
  require(x0 > 3.0, "partial_sum_pi_from_theta: x0 must exceed 3");
  require(x > x0, "partial_sum_pi_from_theta: x must exceed x0");
  const auto& cp = theta_series.checkpoints;
  require(cp.size() == theta_series.counts.size(), "partial_sum_pi_from_theta: malformed series");
  require(!cp.empty() && cp.front() <= x0 && cp.back() >= x,
          "partial_sum_pi_from_theta: series does not cover [x0, x]");

  auto theta_at = [&](double t) {
    const auto it = std::upper_bound(cp.begin(), cp.end(), t);
    return theta_series.counts[static_cast<std::size_t>(it - cp.begin()) - 1];
  };

  // theta is constant between checkpoints and 1/(t log^2 t) = d/dt (-1/log t),
  // so each piece integrates in closed form.
  double integral = 0.0;
  double left = x0;
  for (const double c : cp) {
    if (c <= x0) continue;
    if (c >= x) break;
    integral += theta_at(left) * (1.0 / std::log(left) - 1.0 / std::log(c));
    left = c;
  }
  integral += theta_at(left) * (1.0 / std::log(left) - 1.0 / std::log(x));
  return theta_at(x) / std::log(x) + integral;
}

}  // namespace cheb
