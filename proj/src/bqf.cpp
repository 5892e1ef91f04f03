#include "cheb/bqf.hpp"

#include <algorithm>
#include <cmath>

#include "cheb/arith.hpp"
#include "cheb/parallel.hpp"
#include "cheb/sieve.hpp"

namespace cheb {
namespace {

std::int64_t floor_div(std::int64_t p, std::int64_t q) {
  std::int64_t d = p / q;
  if ((p % q != 0) && ((p < 0) != (q < 0))) --d;
  return d;
}

void validate_form(std::int64_t a, std::int64_t b, std::int64_t c) {
  require(a > 0 && c > 0, "form must be positive definite");
  const __int128 disc = static_cast<__int128>(b) * b - static_cast<__int128>(4) * a * c;
  require(disc < 0, "form must be positive definite");
  require(arith::gcd_signed(arith::gcd_signed(a, b), c) == 1, "form must be primitive");
}

// Largest n >= 0 with n^2 <= v.
std::int64_t isqrt_floor(__int128 v) {
  if (v <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (static_cast<__int128>(r) * r > v) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

bool ReducedForm::is_reduced() const {
  if (!(-a < b && b <= a && a <= c)) return false;
  return !(a == c && b < 0);
}

ReducedForm reduce_form(std::int64_t a, std::int64_t b, std::int64_t c) {
  validate_form(a, b, c);
  for (;;) {
    // Translate (X, Y) -> (X + kY, Y) to bring b into (-a, a].
    const std::int64_t k = floor_div(a - b, 2 * a);
    if (k != 0) {
      const __int128 nc = static_cast<__int128>(a) * k * k + static_cast<__int128>(b) * k + c;
      b += 2 * a * k;
      c = static_cast<std::int64_t>(nc);
    }
    if (a > c) {
      std::swap(a, c);
      b = -b;
      continue;
    }
    if (a == c && b < 0) b = -b;
    return {a, b, c};
  }
}

ClassGroupSummary class_number(std::int64_t D) {
  require(D > 0, "class_number: D must be positive");
  require(D % 4 == 0 || D % 4 == 3, "class_number: -D must be 0 or 1 mod 4");
  ClassGroupSummary out;
  out.D = D;
  const auto amax = static_cast<std::int64_t>(arith::isqrt(static_cast<std::uint64_t>(D / 3)));
  for (std::int64_t a = 1; a <= amax; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b + D;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a || (a == c && b < 0)) continue;
      if (arith::gcd_signed(arith::gcd_signed(a, b), c) != 1) continue;
      out.forms.push_back({a, b, c});
    }
  }
  for (const auto& f : out.forms) out.delta.push_back(delta_Q(f));
  return out;
}

double delta_Q(const ReducedForm& form) {
  const auto r = reduce_form(form.a, form.b, form.c);
  return reduce_form(r.a, -r.b, r.c) == r ? 0.5 : 1.0;
}

CountSeries count_represented_primes(const ReducedForm& form, std::uint64_t x,
                                     std::vector<std::uint64_t> checkpoints) {
  validate_form(form.a, form.b, form.c);
  if (checkpoints.empty()) checkpoints.push_back(x);
  require(std::is_sorted(checkpoints.begin(), checkpoints.end()) &&
              std::adjacent_find(checkpoints.begin(), checkpoints.end()) == checkpoints.end(),
          "count_represented_primes: checkpoints must be strictly ascending");
  require(checkpoints.back() == x, "count_represented_primes: last checkpoint must equal x");
  const std::uint64_t words = x / 64 + 1;
  if (words * 8 * std::max(1u, thread_count()) > memory_budget_bytes()) {
    throw CapacityError("count_represented_primes: x exceeds memory budget");
  }

  // Q(m, n) <= x forces D n^2 <= 4 a x. Q(-m, -n) = Q(m, n), so n >= 0 suffices.
  const std::int64_t D = -form.disc();
  const std::int64_t nmax = isqrt_floor(static_cast<__int128>(4) * form.a * x / D);
  const unsigned workers = std::max(1u, thread_count());
  std::vector<std::vector<std::uint64_t>> marks(workers);
  parallel_for(workers, [&](std::size_t w) {
    auto& bits = marks[w];
    bits.assign(words, 0);
    for (std::int64_t n = static_cast<std::int64_t>(w); n <= nmax; n += workers) {
      // Roots of a m^2 + b n m + c n^2 - x = 0.
      const __int128 disc = static_cast<__int128>(4) * form.a * x -
                            static_cast<__int128>(D) * n * n;
      if (disc < 0) continue;
      const long double s = std::sqrt(static_cast<long double>(disc));
      const long double centre = -static_cast<long double>(form.b) * n;
      auto lo = static_cast<std::int64_t>(std::floor((centre - s) / (2.0L * form.a))) - 1;
      auto hi = static_cast<std::int64_t>(std::ceil((centre + s) / (2.0L * form.a))) + 1;
      if (n == 0) lo = std::max<std::int64_t>(lo, 1);
      for (std::int64_t m = lo; m <= hi; ++m) {
        const __int128 v = form.eval(m, n);
        if (v < 2 || v > static_cast<__int128>(x)) continue;
        const auto u = static_cast<std::uint64_t>(v);
        bits[u >> 6] |= std::uint64_t{1} << (u & 63);
      }
    }
  });
  auto& merged = marks[0];
  for (std::size_t w = 1; w < marks.size(); ++w) {
    for (std::uint64_t i = 0; i < words; ++i) merged[i] |= marks[w][i];
  }

  CountSeries out;
  out.label = "primes represented by (" + std::to_string(form.a) + "," + std::to_string(form.b) +
              "," + std::to_string(form.c) + ")";
  std::size_t next = 0;
  double running = 0.0;
  const auto primes = x >= 2 ? segmented_primes(2, x + 1).primes : std::vector<std::uint64_t>{};
  for (const auto p : primes) {
    while (next < checkpoints.size() && p > checkpoints[next]) {
      out.checkpoints.push_back(static_cast<double>(checkpoints[next++]));
      out.counts.push_back(running);
    }
    if ((merged[p >> 6] >> (p & 63)) & 1) running += 1.0;
  }
  while (next < checkpoints.size()) {
    out.checkpoints.push_back(static_cast<double>(checkpoints[next++]));
    out.counts.push_back(running);
  }
  return out;
}

ClassCountReport corollary13_report(const ReducedForm& form, std::uint64_t x,
                                     const ClassGroupSummary& group, std::uint64_t count) {
  require(x >= 3, "corollary13_report: x must be >= 3");
  const auto reduced = reduce_form(form.a, form.b, form.c);
  require(group.D == -reduced.disc(), "corollary13_report: class group does not match the form");
  ClassCountReport r;
  r.x = x;
  r.count = count;
  r.h = group.h();
  r.delta_Q = delta_Q(reduced);
  const double li_x = li(static_cast<double>(x));
  r.target = r.delta_Q * li_x / static_cast<double>(r.h);
  r.bound = 2.0 * r.target;
  r.ratio = static_cast<double>(count) / r.target;
  r.strict = BoundReport::compare(static_cast<double>(count), r.bound);
  r.strict.pass = static_cast<double>(count) < r.bound;
  r.in_proven_range = std::log(static_cast<double>(x)) >= 695.0 * std::log(static_cast<double>(group.D));
  if (!r.in_proven_range) r.strict.note = "x below D^695: consistency check only";
  return r;
}

ClassCountReport corollary13_report(const ReducedForm& form, std::uint64_t x) {
  const auto reduced = reduce_form(form.a, form.b, form.c);
  const auto group = class_number(-reduced.disc());
  const auto series = count_represented_primes(reduced, x);
  return corollary13_report(reduced, x, group, static_cast<std::uint64_t>(series.counts.back()));
}

}  // namespace cheb
